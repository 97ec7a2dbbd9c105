#include "mcount/zeta.hpp"

#include <stdexcept>

namespace mcount {

namespace {

/// (1 - c q^i t) as a t-polynomial with q-polynomial coefficients.
std::vector<TruncatedQPoly> linear_factor(const EigenvalueMonomial& e) {
    return {TruncatedQPoly::constant(1),
            TruncatedQPoly::monomial(e.power, Rational(-e.sign))};
}

std::vector<TruncatedQPoly> t_mul(const std::vector<TruncatedQPoly>& a,
                                  const std::vector<TruncatedQPoly>& b, int max_d) {
    std::vector<TruncatedQPoly> r(
        std::min<size_t>(a.size() + b.size() - 1, max_d + 1));
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < b.size() && i + j < r.size(); ++j) {
            r[i + j] = r[i + j] + a[i] * b[j];
        }
    }
    return r;
}

/// Series inverse of a t-polynomial with constant coefficient 1.
std::vector<TruncatedQPoly> t_inverse(const std::vector<TruncatedQPoly>& a, int max_d) {
    std::vector<TruncatedQPoly> inv(max_d + 1);
    inv[0] = TruncatedQPoly::constant(1);
    for (int d = 1; d <= max_d; ++d) {
        TruncatedQPoly acc;
        for (int j = 1; j <= d && j < static_cast<int>(a.size()); ++j) {
            acc = acc + a[j] * inv[d - j];
        }
        inv[d] = -acc;
    }
    return inv;
}

}  // namespace

TruncatedQPoly SpaceDescriptor::point_count(int m) const {
    TruncatedQPoly total;
    for (const auto& e : even_eigenvalues) {
        const int s = (e.sign < 0 && m % 2) ? -1 : 1;
        total = total + TruncatedQPoly::monomial(e.power * m, Rational(s));
    }
    for (const auto& e : odd_eigenvalues) {
        const int s = (e.sign < 0 && m % 2) ? -1 : 1;
        total = total - TruncatedQPoly::monomial(e.power * m, Rational(s));
    }
    return total;
}

ZetaCoeffs inverse_zeta_coeffs(const SpaceDescriptor& space, int max_d) {
    for (const auto& e : space.even_eigenvalues) {
        if (e.sign != 1 && e.sign != -1) throw std::invalid_argument("bad eigenvalue");
    }
    for (const auto& e : space.odd_eigenvalues) {
        if (e.sign != 1 && e.sign != -1) {
            throw std::invalid_argument("unsupported odd eigenvalue form");
        }
    }
    std::vector<TruncatedQPoly> num = {TruncatedQPoly::constant(1)};
    for (const auto& e : space.even_eigenvalues) {
        num = t_mul(num, linear_factor(e), max_d);
    }
    std::vector<TruncatedQPoly> den = {TruncatedQPoly::constant(1)};
    for (const auto& e : space.odd_eigenvalues) {
        den = t_mul(den, linear_factor(e), max_d);
    }
    ZetaCoeffs out;
    out.coeffs = t_mul(num, t_inverse(den, max_d), max_d);
    out.coeffs.resize(max_d + 1);
    return out;
}

ZetaCoeffs zeta_product(const ZetaCoeffs& a, const ZetaCoeffs& b, int max_d) {
    ZetaCoeffs out;
    out.coeffs.assign(max_d + 1, TruncatedQPoly::zero());
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        for (size_t j = 0; j < b.coeffs.size() && i + j <= static_cast<size_t>(max_d);
             ++j) {
            out.coeffs[i + j] = out.coeffs[i + j] + a.coeffs[i] * b.coeffs[j];
        }
    }
    return out;
}

ZetaCoeffs remove_rational_point(const ZetaCoeffs& a, int max_d) {
    ZetaCoeffs out;
    out.coeffs.assign(max_d + 1, TruncatedQPoly::zero());
    TruncatedQPoly run;
    for (int d = 0; d <= max_d; ++d) {
        run = run + a.s(d);
        out.coeffs[d] = run;
    }
    return out;
}

SpaceDescriptor named_space(const std::string& name, int n) {
    SpaceDescriptor s;
    s.name = name;
    if (name == "point") {
        s.even_eigenvalues = {{1, 0}};
        s.proper = true;
        s.dimension = 0;
    } else if (name == "A1") {
        s.even_eigenvalues = {{1, 1}};
        s.dimension = 1;
    } else if (name == "A2") {
        s.even_eigenvalues = {{1, 2}};
        s.dimension = 2;
    } else if (name == "Gm") {
        s.even_eigenvalues = {{1, 1}};
        s.odd_eigenvalues = {{1, 0}};
        s.dimension = 1;
    } else if (name == "P1") {
        s.even_eigenvalues = {{1, 0}, {1, 1}};
        s.proper = true;
        s.dimension = 1;
    } else if (name == "Pn") {
        for (int i = 0; i <= n; ++i) s.even_eigenvalues.push_back({1, i});
        s.proper = true;
        s.dimension = n;
    } else if (name == "Qcone_smooth") {
        // Smooth locus of the quadric cone: A^2 (chart x0 != 0) plus A^1.
        s.even_eigenvalues = {{1, 2}, {1, 1}};
        s.dimension = 2;
    } else if (name == "Qnsp") {
        s.even_eigenvalues = {{1, 0}, {1, 1}, {-1, 1}, {1, 2}};
        s.proper = true;
        s.dimension = 2;
    } else if (name == "Qspl") {
        s.even_eigenvalues = {{1, 0}, {1, 1}, {1, 1}, {1, 2}};
        s.proper = true;
        s.dimension = 2;
    } else {
        throw std::invalid_argument("unknown named space: " + name);
    }
    return s;
}

}  // namespace mcount
