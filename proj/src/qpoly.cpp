#include "mcount/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace mcount {

TruncatedQPoly::TruncatedQPoly(std::initializer_list<std::pair<int, Rational>> terms) {
    for (const auto& [d, c] : terms) coeffs_[d] += c;
    normalize();
}

TruncatedQPoly TruncatedQPoly::monomial(int deg, const Rational& c) {
    TruncatedQPoly p;
    if (c != 0) p.coeffs_[deg] = c;
    return p;
}

TruncatedQPoly TruncatedQPoly::projective_count(int n) {
    TruncatedQPoly p;
    for (int i = 0; i <= n; ++i) p.coeffs_[i] = 1;
    return p;
}

TruncatedQPoly TruncatedQPoly::from_ascending(const std::vector<Rational>& coeffs) {
    TruncatedQPoly p;
    for (int d = 0; d < static_cast<int>(coeffs.size()); ++d) {
        if (coeffs[d] != 0) p.coeffs_[d] = coeffs[d];
    }
    return p;
}

void TruncatedQPoly::normalize() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        const bool below_floor = floor_ && it->first < *floor_;
        if (it->second == 0 || below_floor) {
            it = coeffs_.erase(it);
        } else {
            ++it;
        }
    }
}

Rational TruncatedQPoly::coeff(int d) const {
    if (!trusted(d)) {
        throw std::domain_error("coefficient of degree " + std::to_string(d) +
                                " is below the trusted floor " + std::to_string(*floor_));
    }
    const auto it = coeffs_.find(d);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

TruncatedQPoly TruncatedQPoly::truncated_to(int f) const {
    TruncatedQPoly r = *this;
    if (!r.floor_ || *r.floor_ < f) r.floor_ = f;
    r.normalize();
    return r;
}

TruncatedQPoly TruncatedQPoly::with_coeff(int d, const Rational& c) const {
    if (!trusted(d)) {
        throw std::domain_error("cannot set coefficient below the trusted floor");
    }
    TruncatedQPoly r = *this;
    r.coeffs_[d] = c;
    r.normalize();
    return r;
}

TruncatedQPoly TruncatedQPoly::operator+(const TruncatedQPoly& o) const {
    TruncatedQPoly r;
    r.coeffs_ = coeffs_;
    for (const auto& [d, c] : o.coeffs_) r.coeffs_[d] += c;
    if (floor_ || o.floor_) {
        int f = floor_ ? *floor_ : 0;
        if (o.floor_ && *o.floor_ > f) f = *o.floor_;
        r.floor_ = f;
    }
    r.normalize();
    return r;
}

TruncatedQPoly TruncatedQPoly::operator-() const {
    TruncatedQPoly r = *this;
    for (auto& [d, c] : r.coeffs_) c = -c;
    return r;
}

TruncatedQPoly TruncatedQPoly::operator-(const TruncatedQPoly& o) const {
    return *this + (-o);
}

TruncatedQPoly TruncatedQPoly::operator*(const TruncatedQPoly& o) const {
    TruncatedQPoly r;
    for (const auto& [da, ca] : coeffs_) {
        for (const auto& [db, cb] : o.coeffs_) r.coeffs_[da + db] += ca * cb;
    }
    if (floor_ || o.floor_) {
        // An unknown o(q^fa) tail in a contributes unknowns up to fa + deg(b).
        int f = floor_ ? *floor_ + o.degree() : 0;
        if (o.floor_) {
            const int f2 = *o.floor_ + degree();
            if (!floor_ || f2 > f) f = f2;
        }
        if (f < 0) f = 0;
        r.floor_ = f;
    }
    r.normalize();
    return r;
}

TruncatedQPoly TruncatedQPoly::operator*(const Rational& c) const {
    TruncatedQPoly r = *this;
    for (auto& [d, v] : r.coeffs_) v *= c;
    r.normalize();
    return r;
}

Rational TruncatedQPoly::evaluate(const Rational& x) const {
    Rational acc = 0;
    Rational pw = 1;
    int last = 0;
    for (const auto& [d, c] : coeffs_) {  // ascending degrees
        for (; last < d; ++last) pw *= x;
        acc += c * pw;
    }
    return acc;
}

TruncatedQPoly TruncatedQPoly::substitute_square() const {
    if (!exact()) throw std::domain_error("substitute_square requires an exact polynomial");
    TruncatedQPoly r;
    for (const auto& [d, c] : coeffs_) r.coeffs_[2 * d] = c;
    return r;
}

std::string TruncatedQPoly::to_string(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [d, c] = *it;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        const Rational a = c > 0 ? c : Rational(-c);
        if (a != 1 || d == 0) os << rational_to_string(a);
        if (d > 0) {
            os << var;
            if (d > 1) os << '^' << d;
        }
    }
    if (first) os << '0';
    if (floor_) os << " + o(" << var << '^' << *floor_ << ')';
    return os.str();
}

TruncatedQPoly poly_div_exact_series(const TruncatedQPoly& a, const TruncatedQPoly& b,
                                     int depth) {
    if (!b.exact()) throw std::invalid_argument("divisor must be exact");
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");

    const int db = b.degree();
    const Rational lead = b.coefficients().rbegin()->second;

    // Unknown o(q^f) tail of a perturbs quotient degrees < f - deg(b) only.
    int stop = depth;
    if (a.floor() && *a.floor() - db > stop) stop = *a.floor() - db;

    TruncatedQPoly quotient;
    TruncatedQPoly r = a;
    while (!r.is_zero() && r.degree() - db >= stop) {
        const int k = r.degree() - db;
        const Rational c = r.coefficients().rbegin()->second / lead;
        const TruncatedQPoly term = TruncatedQPoly::monomial(k, c);
        quotient = quotient + term;
        r = r - term * b;
    }
    if (a.exact() && r.is_zero()) return quotient;  // terminating exact division
    return quotient.truncated_to(stop);
}

PalindromeResult palindrome_complete(const TruncatedQPoly& p, int dim) {
    if (dim < 0) throw std::invalid_argument("negative dimension");
    // Every degree strictly above dim/2 must be trusted.
    if (p.floor() && *p.floor() > dim / 2 + 1) {
        throw std::invalid_argument(
            "trusted range does not cover all degrees above dim/2");
    }
    if (p.degree() > dim) throw std::domain_error("input degree exceeds dim");

    PalindromeResult out;
    TruncatedQPoly result;
    for (int i = dim; i >= 0; --i) {
        const int j = dim - i;
        const bool ti = p.trusted(i), tj = p.trusted(j);
        if (ti && tj) {
            if (p.coeff(i) != p.coeff(j)) {
                throw std::domain_error("palindrome conflict at degrees " +
                                        std::to_string(i) + "/" + std::to_string(j));
            }
            result = result + TruncatedQPoly::monomial(i, p.coeff(i));
        } else if (ti) {
            result = result + TruncatedQPoly::monomial(i, p.coeff(i));
        } else if (tj) {
            result = result + TruncatedQPoly::monomial(i, p.coeff(j));
        } else {
            // Only reachable at the self-mirrored middle i = j = dim/2.
            out.hole = i;
        }
    }
    out.poly = result;
    return out;
}

TruncatedQPoly betti_poincare_poly(const TruncatedQPoly& p) {
    if (!p.exact()) throw std::domain_error("Betti translation needs an exact polynomial");
    for (const auto& [d, c] : p.coefficients()) {
        if (!is_integer(c) || c < 0) {
            throw std::domain_error("Betti translation needs non-negative integer "
                                    "coefficients; found " + rational_to_string(c) +
                                    " at degree " + std::to_string(d));
        }
    }
    return p.substitute_square();
}

}  // namespace mcount
