#ifndef MCOUNT_PARTITION_HPP
#define MCOUNT_PARTITION_HPP

/*
 * PartitionLabel: partitions of n <= 4 used both as Frobenius orbit types
 * and as indices for Schur functions / S_n irreducibles, plus the
 * hard-coded S_n character tables for n <= 3.
 */

#include "mcount/rational.hpp"

#include <string>
#include <vector>

namespace mcount {

class PartitionLabel {
public:
    PartitionLabel() = default;  // empty partition of 0
    explicit PartitionLabel(std::vector<int> parts);

    static PartitionLabel all_ones(int n);
    /// Parses "2,1" style comma-joined parts ("" = empty partition).
    static PartitionLabel parse(const std::string& s);

    const std::vector<int>& parts() const { return parts_; }
    int n() const;                      // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    int sign_exponent() const { return length(); }  // (-1)^{l(lambda)} exponent
    std::string to_string() const;      // "2,1"

    bool operator==(const PartitionLabel& o) const { return parts_ == o.parts_; }
    bool operator<(const PartitionLabel& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;  // weakly decreasing, positive
};

/// All partitions of n in a fixed deterministic order (lexicographically
/// decreasing; [n] first, [1,...,1] last).
std::vector<PartitionLabel> partitions_of(int n);

/// Size of the conjugacy class of S_n with cycle type sigma.
BigInt conjugacy_class_size(const PartitionLabel& sigma);

/// Irreducible S_n character chi_lambda(sigma), n <= 3 (hard-coded tables).
/// lambda indexes the irreducible (s_lambda), sigma the cycle type.
int sn_character(const PartitionLabel& lambda, const PartitionLabel& sigma);

/// Dimension of the irreducible indexed by lambda (= chi_lambda(identity)).
int sn_dimension(const PartitionLabel& lambda);

BigInt factorial(int n);

}  // namespace mcount

#endif  // MCOUNT_PARTITION_HPP
