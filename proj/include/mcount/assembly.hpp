#ifndef MCOUNT_ASSEMBLY_HPP
#define MCOUNT_ASSEMBLY_HPP

/*
 * Top-level pipeline: combine the symbolic quadric sieve sums, surface
 * automorphism orders, hyperelliptic closed forms, and embedded boundary
 * data; complete by Poincare duality; pin the one remaining middle
 * coefficient (n = 3) with the Euler characteristic; emit the point-count
 * polynomials of M-bar_{4,n} and M_{4,n}, plain and S_n-equivariant.
 *
 * Floor bookkeeping: after dividing the truncated sieve sums by the
 * automorphism orders, the result is trusted down to degree 5 (n <= 1),
 * 6 (n = 2), or 7 (n = 3); duality needs trusted degrees strictly above
 * (9+n)/2, which these floors provide.
 */

#include "mcount/partition.hpp"
#include "mcount/qpoly.hpp"
#include "mcount/schur.hpp"

#include <map>
#include <utility>

namespace mcount {

/// Boundary point counts of M-bar_{4,n}: embedded exact data (computing
/// them needs the full lower-genus equivariant library, out of scope).
struct BoundaryData {
    std::map<int, TruncatedQPoly> plain;     // n = 0..3
    std::map<int, SchurVector> equivariant;  // n = 2, 3

    static const BoundaryData& get();
};

/// Euler characteristics of M_{4,3}: the plain value and the equivariant
/// class function (as a Schur-coefficient integer vector).
struct EulerData {
    int chi_m43 = -10;
    std::map<PartitionLabel, Rational> chi_equivariant_m43;  // 2 s3 - 6 s21

    static const EulerData& get();
    /// Class-function value at the conjugacy class of the twist.
    Rational chi_value(const PartitionLabel& twist) const;
};

/// Orders of the automorphism groups of the three quadric surfaces.
struct AutOrders {
    TruncatedQPoly cone, nonsplit, split;

    static const AutOrders& get();
};

/// Trusted floor after division by the automorphism orders: 5, 5, 6, 7.
int assembly_floor(int n);

/// Boundary count, twist-specialized through the character table for n >= 2.
TruncatedQPoly boundary_poly(int n, const PartitionLabel& twist);

/// Truncated count of the twisted form of M_4 minus the hyperelliptic
/// locus: sum over the three quadric kinds of (sum of sieve terms d <= 3)
/// divided by the automorphism order, with the floor of assembly_floor(n).
TruncatedQPoly nonhyperelliptic_open_count(int n, const PartitionLabel& twist);

/// Truncated count of the twisted form of M_{4,n} (adds the hyperelliptic
/// closed form; still floored).
TruncatedQPoly open_count(int n, const PartitionLabel& twist);

/// Exact count of the twisted form of M-bar_{4,n}: open + boundary, then
/// palindrome completion in dimension 9+n; the n = 3 middle coefficient is
/// pinned by the Euler characteristic.
TruncatedQPoly closed_count(int n, const PartitionLabel& twist);

/// Solves for the single unknown coefficient of an exact-up-to-one-hole
/// closed count: (closed - boundary) at q = 1 must equal the Euler
/// characteristic of the open part.
TruncatedQPoly euler_pin(const TruncatedQPoly& closed_with_hole, int hole_degree,
                         int n, const PartitionLabel& twist);

struct EquivariantCounts {
    SchurVector closed;
    SchurVector open;
};

/// Runs the twisted pipeline for every class of S_n (n = 2, 3) and converts
/// the class-function values to Schur coordinates; open = closed - boundary.
EquivariantCounts equivariant_closed_and_open(int n);

}  // namespace mcount

#endif  // MCOUNT_ASSEMBLY_HPP
