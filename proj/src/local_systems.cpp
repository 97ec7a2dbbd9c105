#include "mcount/local_systems.hpp"

#include "mcount/assembly.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace mcount {

namespace {

using P = TruncatedQPoly;

// Determinant of an n x n rational matrix by fraction-free-enough Gaussian
// elimination (n <= 5 here, exact rationals).
Rational det(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational result = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            result = -result;
        }
        result *= m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            const Rational f = m[row][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
        }
    }
    return result;
}

Rational pow_rat(const Rational& x, int k) {
    Rational r = 1;
    Rational base = k >= 0 ? x : Rational(1) / x;
    for (int i = 0; i < (k >= 0 ? k : -k); ++i) r *= base;
    return r;
}

// Monomial bases of the homogeneous trace ansatz, graded with deg q = 2,
// deg p_m = m: all q^j p1^a p2^b p3^c with 2j + a + 2b + 3c = |lambda|.
std::vector<std::pair<PMonomial, int>> ansatz_basis(int weight) {
    std::vector<std::pair<PMonomial, int>> basis;
    for (int j = 0; 2 * j <= weight; ++j) {
        const int w = weight - 2 * j;
        for (int c = 0; 3 * c <= w; ++c) {
            for (int b = 0; 2 * b + 3 * c <= w; ++b) {
                const int a = w - 2 * b - 3 * c;
                basis.push_back({{a, b, c}, j});
            }
        }
    }
    return basis;
}

struct Frame {
    std::array<Rational, 4> alphas;
    Rational r;
    Rational q;
    std::array<Rational, 3> p;  // power sums of {alpha_i, q/alpha_i}
};

Frame random_frame(std::mt19937& rng) {
    std::uniform_int_distribution<int> alpha_dist(2, 60);
    std::uniform_int_distribution<int> r_dist(2, 20);
    while (true) {
        Frame f;
        bool distinct = true;
        std::array<int, 4> a{};
        for (int i = 0; i < 4; ++i) {
            a[i] = alpha_dist(rng);
            for (int j = 0; j < i; ++j)
                if (a[i] == a[j]) distinct = false;
        }
        if (!distinct) continue;
        const int r = r_dist(rng);
        f.r = r;
        f.q = r * r;
        // Avoid x_i = x_j^{+-1} and x_i = +-1 so the Weyl denominator
        // cannot vanish.
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i) {
            if (a[i] == r) ok = false;
            for (int j = 0; j < i && ok; ++j)
                if (a[i] * a[j] == r * r) ok = false;
        }
        if (!ok) continue;
        for (int i = 0; i < 4; ++i) f.alphas[i] = a[i];
        for (int m = 1; m <= 3; ++m) {
            Rational s = 0;
            for (int i = 0; i < 4; ++i) {
                s += pow_rat(f.alphas[i], m) + pow_rat(f.q / f.alphas[i], m);
            }
            f.p[m - 1] = s;
        }
        return f;
    }
}

Rational eval_basis(const std::pair<PMonomial, int>& term, const Frame& f) {
    const auto& [mono, j] = term;
    Rational v = pow_rat(f.q, j);
    for (int m = 0; m < 3; ++m) v *= pow_rat(f.p[m], mono[m]);
    return v;
}

// Solve the square rational system M x = rhs; throws if singular.
std::vector<Rational> solve(std::vector<std::vector<Rational>> m,
                            std::vector<Rational> rhs) {
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::runtime_error("singular ansatz system");
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            const Rational f = m[row][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
            rhs[row] -= f * rhs[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
    return x;
}

// Exact open count of the twisted form of M_{4,n}: closed minus boundary.
P open_exact(int n, const PartitionLabel& twist) {
    return closed_count(n, twist) - boundary_poly(n, twist);
}

P qpow(int d) { return P::monomial(d, Rational(1)); }

}  // namespace

Rational weyl_character_sp8(const PartitionLabel& lambda,
                            const std::array<Rational, 4>& x) {
    if (lambda.length() > 4) throw std::invalid_argument("at most 4 parts");
    std::array<int, 4> lam{};
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) lam[i] = parts[i];
    auto matrix = [&](bool with_lambda) {
        std::vector<std::vector<Rational>> m(4, std::vector<Rational>(4));
        for (int i = 0; i < 4; ++i) {
            const int l = (with_lambda ? lam[i] : 0) + 4 - i;
            for (int j = 0; j < 4; ++j) {
                m[i][j] = pow_rat(x[j], l) - pow_rat(x[j], -l);
            }
        }
        return m;
    };
    const Rational denom = det(matrix(false));
    if (denom == 0) throw std::domain_error("degenerate eigenvalue frame");
    return det(matrix(true)) / denom;
}

Rational symplectic_trace_oracle(const PartitionLabel& lambda,
                                 const std::array<Rational, 4>& alphas,
                                 const Rational& r) {
    std::array<Rational, 4> x;
    for (int i = 0; i < 4; ++i) x[i] = alphas[i] / r;
    return pow_rat(r, lambda.n()) * weyl_character_sp8(lambda, x);
}

Rational SymplecticDecomposition::evaluate(const PartitionLabel& lambda,
                                           const Rational& q,
                                           const std::array<Rational, 3>& p) const {
    const auto it = traces.find(lambda);
    if (it == traces.end()) throw std::invalid_argument("unsupported weight");
    Rational total = 0;
    for (const auto& [term, c] : it->second) {
        const auto& [mono, j] = term;
        Rational v = c * pow_rat(q, j);
        for (int m = 0; m < 3; ++m) v *= pow_rat(p[m], mono[m]);
        total += v;
    }
    return total;
}

const SymplecticDecomposition& derive_decompositions() {
    static const SymplecticDecomposition decomposition = [] {
        SymplecticDecomposition d;
        std::mt19937 rng(20260823);
        for (const auto& lambda : {PartitionLabel(), PartitionLabel({1}),
                                   PartitionLabel({2}), PartitionLabel({1, 1}),
                                   PartitionLabel({3}), PartitionLabel({2, 1}),
                                   PartitionLabel({1, 1, 1})}) {
            const auto basis = ansatz_basis(lambda.n());
            const std::size_t n = basis.size();
            // Oversample rows until the square solve succeeds.
            std::vector<Rational> coeffs;
            for (int attempt = 0; attempt < 10; ++attempt) {
                std::vector<std::vector<Rational>> m;
                std::vector<Rational> rhs;
                for (std::size_t row = 0; row < n; ++row) {
                    const Frame f = random_frame(rng);
                    std::vector<Rational> r(n);
                    for (std::size_t col = 0; col < n; ++col) {
                        r[col] = eval_basis(basis[col], f);
                    }
                    m.push_back(std::move(r));
                    rhs.push_back(symplectic_trace_oracle(lambda, f.alphas, f.r));
                }
                try {
                    coeffs = solve(std::move(m), std::move(rhs));
                    break;
                } catch (const std::runtime_error&) {
                    if (attempt == 9) throw;
                }
            }
            auto& out = d.traces[lambda];
            for (std::size_t i = 0; i < n; ++i) {
                if (coeffs[i] != 0) out[basis[i]] = coeffs[i];
            }
            // Re-validate on fresh frames before trusting the coefficients.
            for (int check = 0; check < 20; ++check) {
                const Frame f = random_frame(rng);
                if (d.evaluate(lambda, f.q, f.p) !=
                    symplectic_trace_oracle(lambda, f.alphas, f.r)) {
                    throw std::runtime_error(
                        "symplectic trace ansatz disagrees with the Weyl oracle");
                }
            }
        }
        return d;
    }();
    return decomposition;
}

PowerSumFrame PowerSumFrame::derive() {
    // Twisted open counts express stack averages of polynomials in the
    // extension counts a_m = #C(F_{q^m}) = q^m + 1 - p_m:
    //   n=1, [1]     -> <a1>
    //   n=2, [1,1]   -> <a1(a1-1)>,        [2]   -> <a2 - a1>
    //   n=3, [1,1,1] -> <a1(a1-1)(a1-2)>,  [2,1] -> <(a2-a1) a1>,  [3] -> <a3 - a1>
    const P one = open_exact(0, PartitionLabel());
    const P a1 = open_exact(1, PartitionLabel({1}));
    const P a1a1 = open_exact(2, PartitionLabel({1, 1})) + a1;
    const P a2 = open_exact(2, PartitionLabel({2})) + a1;
    const P a1a1a1 =
        open_exact(3, PartitionLabel({1, 1, 1})) + a1a1 * Rational(3) - a1 * Rational(2);
    const P a2a1 = open_exact(3, PartitionLabel({2, 1})) + a1a1;
    const P a3 = open_exact(3, PartitionLabel({3})) + a1;

    const P c1 = qpow(1) + qpow(0);  // q + 1
    const P c2 = qpow(2) + qpow(0);  // q^2 + 1
    const P c3 = qpow(3) + qpow(0);  // q^3 + 1
    // a_m = (q^m + 1) - p_m, so p-monomial averages follow by expanding
    // the corresponding monomials in (q^m + 1) - a_m and averaging term
    // by term (the c's are scalars with respect to the stack average).
    PowerSumFrame f;
    f.averages[{0, 0, 0}] = one;
    f.averages[{1, 0, 0}] = c1 * one - a1;
    f.averages[{0, 1, 0}] = c2 * one - a2;
    f.averages[{0, 0, 1}] = c3 * one - a3;
    f.averages[{2, 0, 0}] = c1 * c1 * one - c1 * a1 * Rational(2) + a1a1;
    f.averages[{1, 1, 0}] = c1 * c2 * one - c1 * a2 - c2 * a1 + a2a1;
    f.averages[{3, 0, 0}] = c1 * c1 * c1 * one - c1 * c1 * a1 * Rational(3) +
                            c1 * a1a1 * Rational(3) - a1a1a1;
    return f;
}

TruncatedQPoly trace_on_euler(const PartitionLabel& lambda) {
    if (lambda.n() > 3) throw std::invalid_argument("only |lambda| <= 3 supported");
    static const PowerSumFrame frame = PowerSumFrame::derive();
    const auto& d = derive_decompositions();
    // The stack average is linear, so plug the averaged monomials into the
    // trace decomposition term by term (q^j is a scalar for the average).
    P total;
    for (const auto& [term, c] : d.traces.at(lambda)) {
        const auto& [mono, j] = term;
        total = total + P::monomial(j, c) * frame.averages.at(mono);
    }
    return total;
}

}  // namespace mcount
