#ifndef MCOUNT_ZETA_HPP
#define MCOUNT_ZETA_HPP

/*
 * Inverse Hasse-Weil zeta coefficient calculus.
 *
 * For a space Y with Frobenius eigenvalues that are monomials ±q^i, the
 * inverse zeta function 1/Z(Y;t) = det(1 - tF | H^even)/det(1 - tF | H^odd)
 * expands as sum_d s_d(Y) t^d with exact q-polynomial coefficients. s_d(Y)
 * is the signed count of Frobenius-stable d-element subsets of Y(F_bar_q),
 * the quantity the sieve consumes.
 */

#include "mcount/qpoly.hpp"

#include <string>
#include <vector>

namespace mcount {

/// Frobenius eigenvalue of the restricted monomial form c * q^power, |c| = 1.
struct EigenvalueMonomial {
    int sign;   // +1 or -1
    int power;  // exponent of q
};

struct SpaceDescriptor {
    std::string name;
    std::vector<EigenvalueMonomial> even_eigenvalues;
    std::vector<EigenvalueMonomial> odd_eigenvalues;
    bool proper = false;
    int dimension = 0;

    /// #Y(F_{q^m}) as an exact polynomial in q (Lefschetz trace of F^m).
    TruncatedQPoly point_count(int m) const;
};

struct ZetaCoeffs {
    std::vector<TruncatedQPoly> coeffs;  // index d = 0, 1, ...

    TruncatedQPoly s(int d) const {
        return d < static_cast<int>(coeffs.size()) ? coeffs[d] : TruncatedQPoly::zero();
    }
};

/// Expands prod_even(1 - alpha t) / prod_odd(1 - beta t) to order max_d.
ZetaCoeffs inverse_zeta_coeffs(const SpaceDescriptor& space, int max_d = 6);

/// Convolution of coefficient lists (disjoint-union multiplicativity).
ZetaCoeffs zeta_product(const ZetaCoeffs& a, const ZetaCoeffs& b, int max_d = 6);

/// Multiplies the inverse zeta by 1/(1-t): new s_d = sum_{i<=d} old s_i.
ZetaCoeffs remove_rational_point(const ZetaCoeffs& a, int max_d = 6);

/// Building-block descriptors with the fixed eigenvalue data. Names:
/// point, A1, A2, Gm, P1, Pn(n), Qcone_smooth, Qnsp, Qspl.
SpaceDescriptor named_space(const std::string& name, int n = 0);

}  // namespace mcount

#endif  // MCOUNT_ZETA_HPP
