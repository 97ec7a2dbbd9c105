#include "mcount/sieve.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mcount {

namespace {

using P = TruncatedQPoly;

/// Polynomial from (degree, coefficient) pairs.
P T(const std::vector<std::pair<int, long>>& terms) {
    P r;
    for (const auto& [d, c] : terms) r = r + P::monomial(d, Rational(c));
    return r;
}

P pn(int n) { return P::projective_count(n); }

P m(int d, long c = 1) { return P::monomial(d, Rational(c)); }

std::string table_key(QuadricKind kind, const PartitionLabel& twist, int d) {
    return to_string(kind) + "|" + twist.to_string() + "|" + std::to_string(d);
}

std::map<std::string, P> build_tables() {
    std::map<std::string, P> t;
    auto put = [&](QuadricKind kind, const PartitionLabel& twist,
                   const std::vector<P>& rows) {
        for (int d = 0; d < 4; ++d) t[table_key(kind, twist, d)] = rows[d];
    };
    const auto cone = QuadricKind::cone;
    const auto nsp = QuadricKind::nonsplit;
    const auto spl = QuadricKind::split;
    auto ones = [](int n) { return PartitionLabel::all_ones(n); };
    auto part = [](std::vector<int> v) { return PartitionLabel(std::move(v)); };
    // Floored rows trust coefficients of degree >= 6 only.
    auto fl6 = [](const P& p) { return p.truncated_to(6); };

    // --- Cone family (all rows exact) ---
    put(cone, ones(0),
        {m(15), T({{14, -1}, {13, -1}}), m(12), P::zero()});
    put(cone, ones(1),
        {T({{16, 1}, {15, 1}}), T({{15, -1}, {14, -3}, {13, -1}, {12, 1}}),
         T({{13, 2}, {12, 1}, {11, -1}}), P::zero()});
    put(cone, ones(2),
        {T({{17, 1}, {16, 2}, {14, -1}}),
         T({{16, -1}, {15, -5}, {14, -3}, {13, 3}, {12, 2}}),
         T({{14, 3}, {13, 4}, {12, -3}, {11, -3}, {10, 1}}),
         T({{12, -1}, {11, 1}, {10, 1}, {9, -1}})});
    put(cone, ones(3),
        {T({{18, 1}, {17, 3}, {15, -5}, {14, -1}, {13, 2}}),
         T({{17, -1}, {16, -7}, {15, -6}, {14, 12}, {13, 7}, {12, -5}}),
         T({{15, 4}, {14, 9}, {13, -10}, {12, -9}, {11, 6}}),
         T({{13, -3}, {12, 5}, {11, -5}, {10, 7}, {9, 2}, {8, -12}, {7, 6}})});

    // --- Nonsplit family (all rows exact) ---
    put(nsp, ones(0),
        {pn(15), T({{2, -1}, {0, -1}}) * pn(12), P::zero(),
         T({{4, 1}, {2, 1}}) * pn(6)});
    put(nsp, ones(1),
        {T({{2, 1}, {0, 1}}) * pn(14),
         -(T({{4, 1}, {2, 1}}) * pn(11)) - T({{2, 1}, {0, 1}}) * pn(12),
         T({{13, 1}, {11, 1}}),
         T({{6, 1}, {4, 1}}) * pn(5) + T({{4, 1}, {2, 1}}) * pn(6)});
    put(nsp, ones(2),
        {T({{4, 1}, {2, 1}}) * pn(13),
         T({{6, -1}, {2, 1}}) * pn(10) - T({{4, 2}, {2, 2}}) * pn(11),
         T({{14, 2}, {13, 1}, {12, 1}, {11, 1}, {10, -1}}),
         T({{11, 3}, {10, 3}, {9, 5}, {8, 5}, {7, 3}, {6, 3}, {5, 1}, {4, 1}})});
    put(nsp, ones(3),
        {T({{6, 1}, {2, -1}}) * pn(12),
         T({{8, -1}, {6, 2}, {4, 1}, {2, -2}}) * pn(9) -
             T({{6, 3}, {2, -3}}) * pn(10),
         T({{15, 3}, {14, 3}, {13, -3}, {11, -3}, {10, -3}, {9, 3}}),
         T({{13, -2}, {12, 6}, {11, 2}, {10, 2}, {9, 3}, {8, -5}, {7, -2}, {6, -2},
            {5, -1}, {4, -1}})});

    // --- Split family (floor 6 rows where only an o(q^6) form is known) ---
    const P qp1sq = T({{2, 1}, {1, 2}, {0, 1}});  // (q+1)^2
    const P q2p2q = T({{2, 1}, {1, 2}});          // q^2 + 2q
    put(spl, ones(0),
        {pn(15), T({{2, -1}, {1, -2}, {0, -1}}) * pn(12),
         T({{3, 2}, {2, 2}, {1, 2}}) * pn(9),
         T({{4, -1}, {3, -2}, {2, -1}}) * pn(6)});
    put(spl, ones(1),
        {qp1sq * pn(14), -(qp1sq * (q2p2q * pn(11) + pn(12))),
         fl6(T({{13, 3}, {12, 12}, {11, 21}, {10, 24}, {9, 24}, {8, 24}, {7, 24},
                {6, 24}})),
         fl6(T({{11, -3}, {10, -10}, {9, -15}, {8, -16}, {7, -16}, {6, -16}}))});
    put(spl, ones(2),
        {qp1sq * q2p2q * pn(13),
         -(qp1sq * q2p2q * ((q2p2q - m(0)) * pn(10) + pn(11) * Rational(2))),
         fl6(T({{14, 4}, {13, 27}, {12, 61}, {11, 75}, {10, 73}, {9, 72}, {8, 72},
                {7, 72}, {6, 70}})),
         fl6(T({{12, -10}, {11, -31}, {10, -45}, {9, -49}, {8, -49}, {7, -47},
                {6, -41}}))});
    put(spl, ones(3),
        {qp1sq * q2p2q * (q2p2q - m(0)) * pn(12),
         fl6(T({{17, -1}, {16, -12}, {15, -54}, {14, -106}, {13, -117}, {12, -102},
                {11, -96}, {10, -96}, {9, -96}, {8, -96}, {7, -95}, {6, -87}})),
         fl6(T({{15, 5}, {14, 53}, {13, 151}, {12, 190}, {11, 153}, {10, 141},
                {9, 147}, {8, 142}, {7, 128}, {6, 90}})),
         fl6(T({{13, -30}, {12, -96}, {11, -116}, {10, -94}, {9, -97}, {8, -93},
                {7, -62}, {6, -24}}))});

    // --- Cone family, twisted marked points (all rows exact) ---
    put(cone, part({2}),
        {T({{17, 1}, {14, -1}}), T({{16, -1}, {15, -1}, {14, 1}, {13, 1}}),
         T({{14, 1}, {13, -2}, {12, 1}, {11, 1}, {10, -1}}),
         T({{12, 1}, {11, -1}, {10, -1}, {9, 1}})});
    put(cone, part({2, 1}),
        {T({{18, 1}, {17, 1}, {15, -1}, {14, -1}}),
         T({{17, -1}, {16, -3}, {14, 4}, {13, 1}, {12, -1}}),
         T({{15, 2}, {14, -1}, {13, -4}, {12, 3}, {11, 2}, {10, -2}}),
         T({{13, 1}, {12, 1}, {11, -5}, {10, 1}, {9, 4}, {8, -2}})});
    put(cone, part({3}),
        {T({{18, 1}, {15, 1}, {14, -1}, {13, -1}}),
         T({{17, -1}, {16, -1}, {13, 1}, {12, 1}}), T({{15, 1}, {13, -1}}),
         T({{12, -1}, {11, 1}, {10, 1}, {9, -1}})});

    // --- Nonsplit family, twisted marked points ---
    put(nsp, part({2}),
        {T({{4, 1}, {2, 1}}) * pn(13),
         -(T({{2, 1}, {0, 1}}) * T({{4, 1}, {2, 1}}) * pn(10)),
         T({{13, -1}, {12, -1}, {11, -1}, {10, -1}}),
         fl6(T({{12, 4}, {11, 3}, {10, 5}, {9, 5}, {8, 3}, {7, 3}, {6, 3}}))});
    put(nsp, part({2, 1}),
        {T({{2, 1}, {0, 1}}) * T({{4, 1}, {2, 1}}) * pn(12),
         -(T({{2, 1}, {0, 1}}) * T({{4, 1}, {2, 1}}) * pn(10)) -
             T({{2, 1}, {0, 1}}) * T({{6, 1}, {4, 1}}) * pn(9),
         T({{15, 1}, {14, -1}, {13, 1}, {12, -2}, {11, -1}, {10, -1}, {9, -1}}),
         fl6(T({{13, 4}, {12, 6}, {11, 8}, {10, 10}, {9, 7}, {8, 7}, {7, 4},
                {6, 4}}))});
    put(nsp, part({3}),
        {fl6(T({{18, 1}, {17, 1}, {16, 1}, {15, 1}})),
         fl6(T({{17, -1}, {16, -1}, {15, -2}, {14, -2}, {13, -1}, {12, -1}, {7, 1},
                {6, 1}})),
         P::zero(),
         fl6(T({{13, 1}, {11, 2}, {10, 2}, {8, 1}, {7, -2}, {6, -2}}))});

    // --- Split family, twisted marked points (all rows floor 6) ---
    put(spl, part({2}),
        {fl6(T({{17, 1}, {16, 1}, {15, 2}})),
         fl6(T({{16, -1}, {15, -3}, {14, -5}, {13, -5}, {12, -2}})),
         fl6(T({{14, 2}, {13, 5}, {12, 11}, {11, 5}, {10, 1}, {6, -2}})),
         fl6(T({{12, -2}, {11, -7}, {10, -7}, {9, -1}, {8, 1}, {7, 1}, {6, 3}}))});
    put(spl, part({2, 1}),
        {fl6(T({{18, 1}, {17, 3}, {16, 5}, {15, 5}, {14, 2}})),
         fl6(T({{17, -1}, {16, -6}, {15, -16}, {14, -22}, {13, -15}, {12, -4},
                {7, 1}, {6, 5}})),
         fl6(T({{15, 3}, {14, 17}, {13, 35}, {12, 32}, {11, 11}, {10, -1}, {9, -1},
                {8, -2}, {7, -8}, {6, -18}})),
         fl6(T({{13, -8}, {12, -24}, {11, -26}, {10, -10}, {9, 3}, {8, 7}, {7, 12},
                {6, 18}}))});
    put(spl, part({3}),
        {fl6(T({{18, 1}, {17, 1}, {16, 1}, {15, 3}, {14, 2}})),
         fl6(T({{17, -1}, {16, -3}, {15, -6}, {14, -10}, {13, -9}, {12, -3}, {7, 1},
                {6, 3}})),
         fl6(T({{15, 2}, {14, 8}, {13, 16}, {12, 16}, {11, 6}, {8, -2}, {7, -4},
                {6, -6}})),
         fl6(T({{13, -3}, {12, -12}, {11, -14}, {10, -4}, {9, 2}, {8, 3}, {7, 4},
                {6, 6}}))});
    return t;
}

}  // namespace

TruncatedQPoly sieve_term_symbolic(const SieveTermKey& key) {
    static const std::map<std::string, P> tables = build_tables();
    const auto it =
        tables.find(table_key(key.family.kind, key.family.twist, key.d));
    if (it == tables.end()) throw std::out_of_range("no tabulated sieve term");
    return it->second;
}

}  // namespace mcount
