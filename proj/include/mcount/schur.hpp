#ifndef MCOUNT_SCHUR_HPP
#define MCOUNT_SCHUR_HPP

/*
 * SchurVector: an element sum_lambda P_lambda(q) s_lambda of the
 * representation ring of S_n (n <= 3) with TruncatedQPoly coefficients.
 * Equivariant point counts are stored in this basis; specializing through
 * the character table recovers the class function sigma -> #X^sigma(F_q).
 */

#include "mcount/partition.hpp"
#include "mcount/qpoly.hpp"

#include <map>

namespace mcount {

class SchurVector {
public:
    explicit SchurVector(int n = 0) : n_(n) {}

    int n() const { return n_; }
    const std::map<PartitionLabel, TruncatedQPoly>& terms() const { return terms_; }

    /// Coefficient polynomial of s_lambda (zero if absent).
    TruncatedQPoly term(const PartitionLabel& lambda) const;
    void set_term(const PartitionLabel& lambda, const TruncatedQPoly& p);

    SchurVector operator+(const SchurVector& o) const;
    SchurVector operator-(const SchurVector& o) const;
    bool operator==(const SchurVector& o) const {
        return n_ == o.n_ && canonical().terms_ == o.canonical().terms_;
    }

private:
    SchurVector canonical() const;  // drops zero terms

    int n_;
    std::map<PartitionLabel, TruncatedQPoly> terms_;
};

/// sum_lambda dim(V_lambda) * P_lambda: the plain count.
TruncatedQPoly schur_dimension_specialize(const SchurVector& v);

/// sum_lambda chi_lambda(sigma) * P_lambda: the twisted count #X^sigma.
TruncatedQPoly schur_character_specialize(const SchurVector& v,
                                          const PartitionLabel& sigma);

/// Inverse character transform: recovers Schur coordinates from the class
/// function sigma -> value. The map must cover every partition of n.
SchurVector schur_from_class_function(
    int n, const std::map<PartitionLabel, TruncatedQPoly>& values);

}  // namespace mcount

#endif  // MCOUNT_SCHUR_HPP
