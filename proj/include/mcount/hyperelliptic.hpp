#ifndef MCOUNT_HYPERELLIPTIC_HPP
#define MCOUNT_HYPERELLIPTIC_HPP

/*
 * Hyperelliptic loci: closed-form counts #H_{g,n}(F_q) for n <= 3, the
 * genus-4 equivariant variants, and a brute-force census over squarefree
 * polynomials at small odd q that validates the closed forms.
 *
 * The census works with P_g, the set of squarefree polynomials of degree
 * 2g+2 or 2g+1 over F_q; the stack count divides by the group order
 * #G(F_q) = (q^2-1)(q^2-q). A polynomial f corresponds to the smooth
 * projective curve C_f: y^2 = f(x) in P(1,1,g+1); the two points over
 * x = infinity are governed by the degree-(2g+2) leading coefficient, and
 * a degree-(2g+1) polynomial contributes a single ramified point there.
 */

#include "mcount/partition.hpp"
#include "mcount/qpoly.hpp"
#include "mcount/rational.hpp"
#include "mcount/schur.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace mcount {

/// Exact count #H_{g,n}(F_q) for g >= 2, n <= 3.
TruncatedQPoly hyperelliptic_count(int g, int n);

/// The genus-4 equivariant count as a Schur vector, n in {2, 3}.
SchurVector hyperelliptic_equivariant_vector(int n);

/// Class-function value #H_{4,sigma(twist)}(F_q), |twist| in {2, 3}; g = 4.
TruncatedQPoly hyperelliptic_equivariant(int g, const PartitionLabel& twist);

/// Closed forms per twist: untwisted n = 0..3 always; twisted entries for g = 4.
struct HyperellipticTable {
    int g = 0;
    std::map<PartitionLabel, TruncatedQPoly> entries;

    static HyperellipticTable make(int g);
};

/// #P_g over F_q by exhaustive enumeration (odd q).
BigInt census_polynomial_count(int g, std::int64_t q);

/// For k = 0..k_max: sum over f in P_g of T(f)^k divided by #G(F_q), where
/// T(f) = sum over x in P^1(F_q) of chi(f(x)) with the convention that
/// x = infinity contributes chi(leading coefficient) in degree 2g+2 and
/// nothing in degree 2g+1.
std::vector<Rational> census_moments(int g, std::int64_t q, int k_max,
                                     int threads = 1);

/// Groupoid counts of twisted n-pointed forms, n <= 3: for each twist
/// partition, sum over f in P_g of the number of ordered tuples of distinct
/// points of C_f with Frobenius orbit type sigma(twist), divided by #G(F_q).
std::map<PartitionLabel, Rational> census_twisted_counts(int g, std::int64_t q,
                                                         int threads = 1);

/// Squarefree test over F_q for a coefficient vector c0..c_d (odd q <= 9).
bool squarefree_poly(std::int64_t q, const std::vector<int>& coeffs);

/// #C_f(F_{q^m}) for f given by coefficients c0..c_{2g+2} (the top one may
/// be zero if the degree-(2g+1) coefficient is not), m <= 3.
std::int64_t curve_point_count(int g, std::int64_t q,
                               const std::vector<int>& coeffs, int m);

}  // namespace mcount

#endif  // MCOUNT_HYPERELLIPTIC_HPP
