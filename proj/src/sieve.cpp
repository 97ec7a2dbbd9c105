#include "mcount/sieve.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>
#include <vector>

namespace mcount {

namespace {

using Row = std::array<std::uint8_t, 16>;

struct OrbitRows {
    std::vector<Row> eval;  // one vanishing row per point, expanded over F_p
    std::vector<Row> sing;  // three singularity rows per point, expanded
};

/// Precomputed condition rows for every closed point of each needed degree.
struct Precomp {
    int p = 0;
    std::map<int, std::vector<OrbitRows>> by_degree;
};

Precomp precompute(QuadricKind kind, std::int64_t q, const std::vector<int>& degrees) {
    Precomp pre;
    pre.p = static_cast<int>(q);
    const auto basis = CubicBasis::make(kind, q);
    for (int d : degrees) {
        if (pre.by_degree.count(d)) continue;
        auto& list = pre.by_degree[d];
        for (const auto& orbit : closed_points(kind, q, d)) {
            OrbitRows rows;
            for (const auto& pt : orbit) {
                const auto e = vanishing_conditions(basis, pt);
                const auto s = singularity_conditions(basis, pt);
                rows.eval.insert(rows.eval.end(), e.rows.begin(), e.rows.end());
                rows.sing.insert(rows.sing.end(), s.rows.begin(), s.rows.end());
            }
            list.push_back(std::move(rows));
        }
    }
    return pre;
}

/// All ways to pick distinct closed points matching the parts of lambda:
/// each selection is a list of (degree, orbit index).
std::vector<std::vector<std::pair<int, int>>> orbit_selections(
    const PartitionLabel& lambda, const Precomp& pre) {
    std::map<int, int> mult;
    for (int part : lambda.parts()) ++mult[part];
    std::vector<std::vector<std::pair<int, int>>> selections = {{}};
    for (const auto& [d, m] : mult) {
        const int n = static_cast<int>(pre.by_degree.at(d).size());
        if (m > n) return {};
        std::vector<std::vector<int>> combos;
        std::vector<int> idx(m);
        for (int i = 0; i < m; ++i) idx[i] = i;
        while (true) {
            combos.push_back(idx);
            int i = m - 1;
            while (i >= 0 && idx[i] == n - m + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
        }
        std::vector<std::vector<std::pair<int, int>>> next;
        for (const auto& sel : selections) {
            for (const auto& combo : combos) {
                auto extended = sel;
                for (int c : combo) extended.emplace_back(d, c);
                next.push_back(std::move(extended));
            }
        }
        selections = std::move(next);
    }
    return selections;
}

/// Number of ordered marked tuples represented by one unordered selection of
/// closed points: per cycle length c with multiplicity m, a factor c^m
/// (rotations) times m! (assignment of closed points to equal-length cycles).
BigInt twist_weight(const PartitionLabel& twist) {
    std::map<int, int> mult;
    for (int part : twist.parts()) ++mult[part];
    BigInt w = 1;
    for (const auto& [c, m] : mult) {
        for (int i = 0; i < m; ++i) w *= c;
        w *= factorial(m);
    }
    return w;
}

void validate(const SieveTermKey& key, std::int64_t q) {
    if (q != 2 && q != 3) throw std::invalid_argument("numeric sieve needs q in {2,3}");
    if (key.d < 0 || key.d > 3) throw std::invalid_argument("sieve depth d must be <= 3");
    const auto& f = key.family;
    if (f.n_marked < 0 || f.n_marked > 3 || f.twist.n() != f.n_marked) {
        throw std::invalid_argument("twist must be a partition of n_marked <= 3");
    }
    for (int part : f.twist.parts()) {
        if (part > 3) throw std::invalid_argument("twist parts must be <= 3");
    }
}

}  // namespace

FamilySpec FamilySpec::untwisted(QuadricKind kind, int n) {
    return {kind, n, PartitionLabel::all_ones(n)};
}

FamilySpec FamilySpec::twisted(QuadricKind kind, const PartitionLabel& twist) {
    return {kind, twist.n(), twist};
}

BigInt sieve_term_numeric(const SieveTermKey& key, std::int64_t q, int threads) {
    validate(key, q);
    const auto& family = key.family;

    std::vector<int> degrees;
    for (int part : family.twist.parts()) degrees.push_back(part);
    const auto z_types = partitions_of(key.d);
    for (const auto& lambda : z_types) {
        for (int part : lambda.parts()) degrees.push_back(part);
    }
    const auto pre = precompute(family.kind, q, degrees);

    const auto marked_sets = orbit_selections(family.twist, pre);
    const BigInt weight = twist_weight(family.twist);

    // (sign, singularity row block) per Frobenius-stable Z.
    std::vector<std::pair<int, std::vector<Row>>> z_blocks;
    if (key.d == 0) {
        z_blocks.push_back({1, {}});
    } else {
        for (const auto& lambda : partitions_of(key.d)) {
            const int sign = lambda.length() % 2 ? -1 : 1;
            for (const auto& zsel : orbit_selections(lambda, pre)) {
                std::vector<Row> rows;
                for (const auto& [d, i] : zsel) {
                    const auto& s = pre.by_degree.at(d)[i].sing;
                    rows.insert(rows.end(), s.begin(), s.end());
                }
                z_blocks.push_back({sign, std::move(rows)});
            }
        }
    }

    auto run_chunk = [&](size_t lo, size_t hi) {
        BigInt total = 0;
        LinearConditions c;
        c.p = pre.p;
        for (size_t mi = lo; mi < hi; ++mi) {
            std::vector<Row> eval_rows;
            for (const auto& [d, i] : marked_sets[mi]) {
                const auto& e = pre.by_degree.at(d)[i].eval;
                eval_rows.insert(eval_rows.end(), e.begin(), e.end());
            }
            for (const auto& [sign, z_rows] : z_blocks) {
                c.rows = z_rows;
                c.rows.insert(c.rows.end(), eval_rows.begin(), eval_rows.end());
                total += BigInt(sign) * count_fibers(c, family.kind, q);
            }
        }
        return total;
    };

    const size_t n = marked_sets.size();
    const size_t nthreads =
        std::max<size_t>(1, std::min<size_t>(threads, std::max<size_t>(n, 1)));
    BigInt total = 0;
    if (nthreads <= 1) {
        total = run_chunk(0, n);
    } else {
        std::vector<BigInt> partial(nthreads);
        std::vector<std::thread> pool;
        for (size_t t = 0; t < nthreads; ++t) {
            const size_t lo = n * t / nthreads, hi = n * (t + 1) / nthreads;
            pool.emplace_back([&, t, lo, hi] { partial[t] = run_chunk(lo, hi); });
        }
        for (auto& th : pool) th.join();
        for (const auto& part : partial) total += part;
    }
    return weight * total;
}

BigInt signed_general_position_quadruples(std::int64_t q) {
    if (q != 2 && q != 3) throw std::invalid_argument("supported at q in {2,3}");
    BigInt total = 0;
    for (const auto& lambda : partitions_of(4)) {
        const int sign = lambda.length() % 2 ? -1 : 1;
        for (const auto& cfg : frobenius_orbit_configs(QuadricKind::split, q, lambda)) {
            if (geometry_predicates(cfg.points, q).general_position) total += sign;
        }
    }
    return total;
}

BigInt truncated_smooth_count(const FamilySpec& family, int k, std::int64_t q,
                              int threads) {
    if (k < 0 || k > 3) throw std::invalid_argument("truncation depth must be <= 3");
    BigInt total = 0;
    for (int d = 0; d <= k; ++d) {
        total += sieve_term_numeric({family, d}, q, threads);
    }
    return total;
}

}  // namespace mcount
