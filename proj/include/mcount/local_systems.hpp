#ifndef MCOUNT_LOCAL_SYSTEMS_HPP
#define MCOUNT_LOCAL_SYSTEMS_HPP

/*
 * Frobenius traces on the compactly supported Euler characteristics of the
 * symplectic local systems V_lambda over M_4, |lambda| <= 3.
 *
 * Three ingredients:
 *  - a numeric Weyl-character oracle for Sp(8) with similitude q evaluated
 *    on rational eigenvalue frames {alpha_i, q/alpha_i} (q = r^2 keeps the
 *    half-integral similitude powers rational);
 *  - trace decompositions tr V_lambda = sum c * q^j * p1^a p2^b p3^c,
 *    where p_m is the m-th power sum of the Frobenius eigenvalues on
 *    H^1(C); the coefficients are solved for from the oracle and then
 *    re-validated on at least twenty fresh random frames;
 *  - the stack averages of the monomials p1^a p2^b p3^c (a+2b+3c <= 3)
 *    over M_4(F_q), obtained by inverting the relation between twisted
 *    n-pointed counts (n <= 3) and the extension point counts
 *    #C(F_{q^m}) = q^m + 1 - p_m.
 */

#include "mcount/partition.hpp"
#include "mcount/qpoly.hpp"
#include "mcount/rational.hpp"

#include <array>
#include <map>
#include <utility>

namespace mcount {

/// Exponent triple (a, b, c) of the monomial p1^a p2^b p3^c.
using PMonomial = std::array<int, 3>;

/// Stack averages over M_4(F_q) of the monomials of weight a+2b+3c <= 3,
/// as exact polynomials in q.
struct PowerSumFrame {
    std::map<PMonomial, TruncatedQPoly> averages;

    static PowerSumFrame derive();
};

/// tr V_lambda = sum over (monomial, j) of c * q^j * p1^a p2^b p3^c;
/// homogeneous of degree |lambda| with q of degree 2 and p_m of degree m.
struct SymplecticDecomposition {
    std::map<PartitionLabel, std::map<std::pair<PMonomial, int>, Rational>> traces;

    /// Evaluate tr V_lambda at numeric power sums and q.
    Rational evaluate(const PartitionLabel& lambda, const Rational& q,
                      const std::array<Rational, 3>& p) const;
};

/// Character of the irreducible Sp(8) representation with highest weight
/// lambda (|lambda| <= 3, at most 4 parts) at {x_i, 1/x_i}.
Rational weyl_character_sp8(const PartitionLabel& lambda,
                            const std::array<Rational, 4>& x);

/// Similitude-normalized trace: r^{|lambda|} times the Sp(8) character at
/// x_i = alpha_i / r, i.e. the trace on V_lambda for Frobenius eigenvalues
/// {alpha_i, r^2/alpha_i}.
Rational symplectic_trace_oracle(const PartitionLabel& lambda,
                                 const std::array<Rational, 4>& alphas,
                                 const Rational& r);

/// Solves for the decompositions and validates every one against the
/// oracle on at least 20 fresh random frames; a mismatch throws.
const SymplecticDecomposition& derive_decompositions();

/// Tr(F_q, H^*_c(M_4, V_lambda)) as an exact polynomial in q, |lambda| <= 3.
TruncatedQPoly trace_on_euler(const PartitionLabel& lambda);

}  // namespace mcount

#endif  // MCOUNT_LOCAL_SYSTEMS_HPP
