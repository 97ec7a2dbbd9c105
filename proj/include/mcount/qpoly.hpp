#ifndef MCOUNT_QPOLY_HPP
#define MCOUNT_QPOLY_HPP

/*
 * TruncatedQPoly: exact polynomial in the formal variable q with rational
 * coefficients and an optional "trusted floor".
 *
 * A floor f means: the stored coefficients are correct for all degrees
 * >= f and nothing is known below f (the polynomial is only determined up
 * to o(q^f) error terms). Coefficients below the floor are deleted, never
 * approximated. An absent floor means the polynomial is exact everywhere.
 */

#include "mcount/rational.hpp"

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mcount {

class TruncatedQPoly {
public:
    TruncatedQPoly() = default;

    /// Exact polynomial from {degree, coefficient} pairs.
    TruncatedQPoly(std::initializer_list<std::pair<int, Rational>> terms);

    /// Monomial c * q^deg (exact).
    static TruncatedQPoly monomial(int deg, const Rational& c);
    static TruncatedQPoly constant(const Rational& c) { return monomial(0, c); }
    static TruncatedQPoly zero() { return TruncatedQPoly(); }

    /// 1 + q + ... + q^n, the point count of P^n (written p_n in tables).
    static TruncatedQPoly projective_count(int n);

    /// Dense exact polynomial from ascending coefficients c0 + c1 q + ...
    static TruncatedQPoly from_ascending(const std::vector<Rational>& coeffs);

    const std::map<int, Rational>& coefficients() const { return coeffs_; }
    std::optional<int> floor() const { return floor_; }
    bool exact() const { return !floor_.has_value(); }
    bool is_zero() const { return coeffs_.empty(); }

    /// Highest stored degree; -1 for the zero polynomial.
    int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

    /// Coefficient at degree d (zero if absent). Throws std::domain_error if
    /// d lies below the trusted floor (that coefficient is unknown).
    Rational coeff(int d) const;

    /// True when the coefficient at degree d is trusted (exact or d >= floor).
    bool trusted(int d) const { return !floor_ || d >= *floor_; }

    /// Sets/raises the trusted floor to f, dropping coefficients below it.
    TruncatedQPoly truncated_to(int f) const;

    /// Overwrites the coefficient at a trusted degree (used for hole pinning).
    TruncatedQPoly with_coeff(int d, const Rational& c) const;

    TruncatedQPoly operator+(const TruncatedQPoly& o) const;
    TruncatedQPoly operator-(const TruncatedQPoly& o) const;
    TruncatedQPoly operator-() const;
    TruncatedQPoly operator*(const TruncatedQPoly& o) const;
    TruncatedQPoly operator*(const Rational& c) const;
    bool operator==(const TruncatedQPoly& o) const {
        return coeffs_ == o.coeffs_ && floor_ == o.floor_;
    }

    /// Evaluates the stored (trusted) part at q = x.
    Rational evaluate(const Rational& x) const;

    /// Substitutes q -> t^2 (Betti translation); requires exactness.
    TruncatedQPoly substitute_square() const;

    /// Human-readable form like "q^9 + 4q^8 + ... [+ o(q^5)]".
    std::string to_string(const std::string& var = "q") const;

private:
    void normalize();

    std::map<int, Rational> coeffs_;  // degree -> nonzero coefficient
    std::optional<int> floor_;
};

/// Coefficientwise sum; floor = max of floors.
inline TruncatedQPoly poly_add(const TruncatedQPoly& a, const TruncatedQPoly& b) {
    return a + b;
}

/// Convolution product with floor propagation
/// (floor_a + deg_b, floor_b + deg_a as applicable).
inline TruncatedQPoly poly_mul(const TruncatedQPoly& a, const TruncatedQPoly& b) {
    return a * b;
}

/// Expands a/b as a descending-power series in q, keeping coefficients of
/// degree >= max(depth, floor implied by a). b must be exact and nonzero.
/// Exact result when a is exact and the division terminates.
TruncatedQPoly poly_div_exact_series(const TruncatedQPoly& a, const TruncatedQPoly& b,
                                     int depth);

/// Result of Poincare-duality completion. When dim is even and only degrees
/// > dim/2 were trusted, the self-mirrored middle coefficient is a "hole"
/// (stored as 0 in poly) that the caller must pin via the Euler characteristic.
struct PalindromeResult {
    TruncatedQPoly poly;           // exact, degree = dim
    std::optional<int> hole;       // degree of the unpinned middle coefficient
};

/// Completes p to an exact palindromic polynomial with c_i = c_{dim-i}.
/// Requires every degree > dim/2 to be trusted; throws std::invalid_argument
/// on insufficiency and std::domain_error on mirror conflicts.
PalindromeResult palindrome_complete(const TruncatedQPoly& p, int dim);

/// Substitutes q -> t^2 after checking non-negative integer coefficients;
/// throws std::domain_error otherwise.
TruncatedQPoly betti_poincare_poly(const TruncatedQPoly& p);

}  // namespace mcount

#endif  // MCOUNT_QPOLY_HPP
