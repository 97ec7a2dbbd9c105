#include "mcount/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mcount {

PartitionLabel::PartitionLabel(std::vector<int> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    for (int p : parts_) {
        if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    }
    if (n() > 4) throw std::invalid_argument("partitions of n > 4 are unsupported");
}

PartitionLabel PartitionLabel::all_ones(int n) {
    return PartitionLabel(std::vector<int>(n, 1));
}

PartitionLabel PartitionLabel::parse(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) parts.push_back(std::stoi(tok));
    }
    return PartitionLabel(parts);
}

int PartitionLabel::n() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string PartitionLabel::to_string() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::vector<PartitionLabel> partitions_of(int n) {
    if (n < 0 || n > 4) throw std::invalid_argument("partitions_of supports 0 <= n <= 4");
    static const std::map<int, std::vector<std::vector<int>>> table = {
        {0, {{}}},
        {1, {{1}}},
        {2, {{2}, {1, 1}}},
        {3, {{3}, {2, 1}, {1, 1, 1}}},
        {4, {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}},
    };
    std::vector<PartitionLabel> out;
    for (const auto& p : table.at(n)) out.emplace_back(p);
    return out;
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt conjugacy_class_size(const PartitionLabel& sigma) {
    // n! / (prod parts * prod multiplicities!)
    BigInt denom = 1;
    std::map<int, int> mult;
    for (int p : sigma.parts()) {
        denom *= p;
        ++mult[p];
    }
    for (const auto& [part, m] : mult) denom *= factorial(m);
    return factorial(sigma.n()) / denom;
}

int sn_character(const PartitionLabel& lambda, const PartitionLabel& sigma) {
    if (lambda.n() != sigma.n()) {
        throw std::invalid_argument("character arguments index different S_n");
    }
    const int n = lambda.n();
    const std::string l = lambda.to_string(), s = sigma.to_string();
    switch (n) {
        case 0:
            return 1;
        case 1:
            return 1;
        case 2:
            if (l == "2") return 1;                    // trivial
            if (l == "1,1") return s == "2" ? -1 : 1;  // sign
            break;
        case 3:
            if (l == "3") return 1;  // trivial
            if (l == "2,1") {        // standard, dim 2
                if (s == "1,1,1") return 2;
                if (s == "2,1") return 0;
                return -1;  // 3-cycles
            }
            if (l == "1,1,1") {  // sign
                if (s == "2,1") return -1;
                return 1;
            }
            break;
        default:
            break;
    }
    throw std::invalid_argument("character table only hard-coded for n <= 3");
}

int sn_dimension(const PartitionLabel& lambda) {
    return sn_character(lambda, PartitionLabel::all_ones(lambda.n()));
}

}  // namespace mcount
