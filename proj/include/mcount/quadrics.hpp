#ifndef MCOUNT_QUADRICS_HPP
#define MCOUNT_QUADRICS_HPP

/*
 * Models of the three reduced irreducible quadric surfaces over F_q (the
 * cone, the nonsplit smooth quadric, the split smooth quadric P^1 x P^1),
 * point enumeration over small extensions, Frobenius orbit configurations,
 * and the linear conditions that marked points and singularities impose on
 * the 16-dimensional space of cubic sections cutting the curve family.
 *
 * Models:
 *  - cone: weighted projective plane P(1,1,2), coordinates (x0, x1, y);
 *    smooth locus excludes the vertex (0,0,1). Cubic sections are the 16
 *    weighted-degree-6 monomials x0^i x1^j y^b (i + j + 2b = 6); the family
 *    of curves missing the vertex is the affine slice "coefficient of
 *    y^3 = 1", an A^15.
 *  - split: P^1 x P^1 with the 16 bidegree-(3,3) monomials; family = P^15.
 *  - nonsplit: the split model over F_{q^2} with the twisted Frobenius
 *    (x, y) -> (y^q, x^q); its rational cubic sections are the 16-dim
 *    F_q-fixed subspace of the bidegree-(3,3) forms under conjugate-swap.
 *
 * Linear conditions are stored fully expanded over the prime field (one
 * extension-field row of entries becomes [E : F_p] rows of coordinates), so
 * ranks are exact F_q-codimensions with no splitting-field bookkeeping.
 * The condition machinery therefore requires q prime; enumeration also
 * supports q = 4.
 */

#include "mcount/finitefield.hpp"
#include "mcount/partition.hpp"
#include "mcount/rational.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace mcount {

enum class QuadricKind { cone, nonsplit, split };

std::string to_string(QuadricKind kind);
QuadricKind quadric_kind_from_string(const std::string& s);

/// q = p^e with p in {2, 3, 5}; supported q values are 2, 3, 4, 5.
struct PrimePower {
    int p;
    int e;
    std::int64_t q;
};
PrimePower parse_prime_power(std::int64_t q);

/// A point of the surface over some extension, in normalized homogeneous
/// coordinates: split/nonsplit {x0,x1,y0,y1} with each P^1 factor scaled to
/// (1,t) or (0,1); cone {x0,x1,y} scaled to (1,s,y) or (0,1,y). The cone
/// vertex never occurs. Nonsplit points use split-model coordinates over
/// F_{q^{2k}} satisfying the twisted rationality condition.
struct SurfacePoint {
    QuadricKind kind;
    std::vector<FieldElement> coords;

    bool operator==(const SurfacePoint& o) const;
    bool operator<(const SurfacePoint& o) const;  // by coordinate indices
    std::string to_string() const;
};

/// Geometric Frobenius of the surface relative to F_q: coordinatewise q-th
/// power for cone/split, swap-and-power (x,y) -> (y^q, x^q) for nonsplit.
SurfacePoint frobenius_point(const SurfacePoint& pt, const PrimePower& base);

/// Smallest d >= 1 with F^d(pt) = pt.
int point_degree(const SurfacePoint& pt, const PrimePower& base);

/// Same point with coordinates embedded into a larger field.
SurfacePoint embed_point(const SurfacePoint& pt, const FieldSpec& target);

/// All F_{q^k}-points (smooth locus for the cone). k <= 3 for q in {4, 5},
/// k <= 4 for q in {2, 3}. Deterministic order.
std::vector<SurfacePoint> enumerate_points(QuadricKind kind, std::int64_t q, int k);

/// All Frobenius orbits of exact degree d, each listed as
/// (P, F P, ..., F^{d-1} P) starting from the lexicographically least point.
std::vector<std::vector<SurfacePoint>> closed_points(QuadricKind kind, std::int64_t q,
                                                     int d);

/// A Frobenius-stable point set with its orbit decomposition type.
struct OrbitConfig {
    std::vector<SurfacePoint> points;  // orbits concatenated
    PartitionLabel orbit_type;
};

/// Every Frobenius-stable subset Z with orbit type exactly lambda
/// (distinct closed points; parts <= 4).
std::vector<OrbitConfig> frobenius_orbit_configs(QuadricKind kind, std::int64_t q,
                                                 const PartitionLabel& lambda);

/// Ordered basis of the 16-dimensional space of rational cubic sections.
struct CubicBasis {
    QuadricKind kind;
    PrimePower base;

    struct Term {
        int mono;            // monomial index, see below
        FieldElement coeff;  // in F_q (cone/split) or F_{q^2} (nonsplit)
    };
    std::vector<std::vector<Term>> elements;  // size 16

    /// Monomial indexing: split/nonsplit: index 4a + c stands for
    /// x0^a x1^{3-a} y0^c y1^{3-c}; cone: weighted monomials x0^i x1^j y^b
    /// with b ascending then i descending, so index 15 is y^3.
    static CubicBasis make(QuadricKind kind, std::int64_t q);

    /// Index of the vertex monomial y^3 in the cone basis.
    int vertex_index() const { return 15; }
};

/// Linear conditions on the 16 rational coefficients, expanded over F_p.
struct LinearConditions {
    int p = 0;
    std::vector<std::array<std::uint8_t, 16>> rows;

    void append(const LinearConditions& o);
    int rank() const;
};

/// One evaluation condition: the cubic section vanishes at pt.
LinearConditions vanishing_conditions(const CubicBasis& basis, const SurfacePoint& pt);

/// Three conditions: value and the two chart-local partial derivatives
/// vanish at pt (chartwise, valid in every characteristic). pt must be in
/// the smooth locus; the cone vertex is rejected upstream by construction.
LinearConditions singularity_conditions(const CubicBasis& basis, const SurfacePoint& pt);

/// Number of curves in the family satisfying the conditions: for the
/// projective families (split/nonsplit, V = P^15) (q^{16-r}-1)/(q-1); for
/// the cone family (affine slice c_{y^3} = 1) q^{15-r} if the slice meets
/// the solution space, else 0.
BigInt count_fibers(const LinearConditions& conditions, QuadricKind kind,
                    std::int64_t q);

struct GeometryFlags {
    bool pair_on_common_ruling = false;  // split: equal x or equal y factor;
                                         // cone: equal [x0:x1] (line through vertex)
    bool collinear = false;              // on a line in the ambient P^3
    bool coplanar = false;               // on a hyperplane section
    bool common_11_curve = false;        // split: some (1,1)-form vanishes at all
    bool general_position = false;       // 4 points, no pair on a ruling, no
                                         // common (1,1)-curve
};

GeometryFlags geometry_predicates(const std::vector<SurfacePoint>& pts,
                                  std::int64_t q);

}  // namespace mcount

#endif  // MCOUNT_QUADRICS_HPP
