#include "mcount/schur.hpp"

#include <stdexcept>

namespace mcount {

TruncatedQPoly SchurVector::term(const PartitionLabel& lambda) const {
    const auto it = terms_.find(lambda);
    return it == terms_.end() ? TruncatedQPoly::zero() : it->second;
}

void SchurVector::set_term(const PartitionLabel& lambda, const TruncatedQPoly& p) {
    if (lambda.n() != n_) throw std::invalid_argument("partition size mismatch");
    if (p.is_zero() && p.exact()) {
        terms_.erase(lambda);
    } else {
        terms_[lambda] = p;
    }
}

SchurVector SchurVector::canonical() const {
    SchurVector v(n_);
    for (const auto& [l, p] : terms_) v.set_term(l, p);
    return v;
}

SchurVector SchurVector::operator+(const SchurVector& o) const {
    if (n_ != o.n_) throw std::invalid_argument("SchurVector size mismatch");
    SchurVector v(n_);
    for (const auto& l : partitions_of(n_)) v.set_term(l, term(l) + o.term(l));
    return v;
}

SchurVector SchurVector::operator-(const SchurVector& o) const {
    if (n_ != o.n_) throw std::invalid_argument("SchurVector size mismatch");
    SchurVector v(n_);
    for (const auto& l : partitions_of(n_)) v.set_term(l, term(l) - o.term(l));
    return v;
}

TruncatedQPoly schur_dimension_specialize(const SchurVector& v) {
    return schur_character_specialize(v, PartitionLabel::all_ones(v.n()));
}

TruncatedQPoly schur_character_specialize(const SchurVector& v,
                                          const PartitionLabel& sigma) {
    if (sigma.n() != v.n()) throw std::invalid_argument("sigma must be a partition of n");
    TruncatedQPoly out;
    for (const auto& [lambda, p] : v.terms()) {
        out = out + p * Rational(sn_character(lambda, sigma));
    }
    return out;
}

SchurVector schur_from_class_function(
    int n, const std::map<PartitionLabel, TruncatedQPoly>& values) {
    const auto sigmas = partitions_of(n);
    for (const auto& s : sigmas) {
        if (!values.count(s)) {
            throw std::invalid_argument("class function missing value at " + s.to_string());
        }
    }
    // P_lambda = (1/n!) * sum_sigma |class(sigma)| chi_lambda(sigma) f(sigma).
    const Rational inv_fact(BigInt(1), factorial(n));
    SchurVector v(n);
    for (const auto& lambda : sigmas) {
        TruncatedQPoly acc;
        for (const auto& sigma : sigmas) {
            const Rational w =
                Rational(conjugacy_class_size(sigma) * sn_character(lambda, sigma));
            acc = acc + values.at(sigma) * w;
        }
        v.set_term(lambda, acc * inv_fact);
    }
    return v;
}

}  // namespace mcount
