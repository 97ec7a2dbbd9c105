#ifndef MCOUNT_SIEVE_HPP
#define MCOUNT_SIEVE_HPP

/*
 * The Hasse-Weil sieve engine for the three families of canonical genus-4
 * curves on quadric surfaces.
 *
 * Numeric side: S_d = sum over partitions lambda of d, over Frobenius-stable
 * point sets Z of orbit type lambda, of (-1)^{l(lambda)} times the number of
 * curves in the (marked) family singular along Z, evaluated exactly at a
 * small prime q by brute-force enumeration and linear algebra over F_q.
 * Marked points are ordered tuples with the Frobenius action prescribed by
 * the twist partition (all-ones = rational marked points).
 *
 * Symbolic side: the closed-form sieve terms as truncated q-polynomials,
 * exact where a closed form exists and with trust floor 6 where only the
 * coefficients of degree >= 6 are pinned down.
 */

#include "mcount/partition.hpp"
#include "mcount/qpoly.hpp"
#include "mcount/quadrics.hpp"
#include "mcount/rational.hpp"

#include <cstdint>

namespace mcount {

struct FamilySpec {
    QuadricKind kind;
    int n_marked = 0;                 // 0..3
    PartitionLabel twist;             // partition of n_marked; all-ones = untwisted

    static FamilySpec untwisted(QuadricKind kind, int n);
    static FamilySpec twisted(QuadricKind kind, const PartitionLabel& twist);
};

struct SieveTermKey {
    FamilySpec family;
    int d = 0;  // 0..3
};

/// Exact signed sieve term at a specific prime q in {2, 3}. The split
/// three-pointed family is the largest case and is supported at q = 2 and 3.
BigInt sieve_term_numeric(const SieveTermKey& key, std::int64_t q, int threads = 1);

/// Closed-form sieve term (exact or floor 6). Throws std::out_of_range for
/// keys outside the tabulated range d <= 3, n <= 3.
TruncatedQPoly sieve_term_symbolic(const SieveTermKey& key);

/// Signed count over orbit types of Frobenius-stable 4-point subsets of the
/// split quadric in general position: equals (q+1)^2 q^2 (q-1)^2.
BigInt signed_general_position_quadruples(std::int64_t q);

/// #V(F_q) + sum_{1 <= d <= k} S_d: the truncated smooth-fiber count.
BigInt truncated_smooth_count(const FamilySpec& family, int k, std::int64_t q,
                              int threads = 1);

}  // namespace mcount

#endif  // MCOUNT_SIEVE_HPP
