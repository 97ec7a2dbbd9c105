#include "mcount/hyperelliptic.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace mcount;

namespace {

using P = TruncatedQPoly;

P T(const std::vector<std::pair<int, long>>& terms) {
    P r;
    for (const auto& [d, c] : terms) r = r + P::monomial(d, Rational(c));
    return r;
}

}  // namespace

TEST_CASE("closed-form counts for genus 4") {
    CHECK(hyperelliptic_count(4, 0) == T({{7, 1}}));
    CHECK(hyperelliptic_count(4, 1) == T({{8, 1}, {7, 1}}));
    CHECK(hyperelliptic_count(4, 2) == T({{9, 1}, {8, 2}, {0, -1}}));
    CHECK(hyperelliptic_count(4, 3) == T({{10, 1}, {9, 3}, {8, -1}, {1, -3}}));
    CHECK(hyperelliptic_count(2, 0) == T({{3, 1}}));
    CHECK_THROWS_AS(hyperelliptic_count(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(hyperelliptic_count(4, 4), std::invalid_argument);
}

TEST_CASE("equivariant table: character specializations") {
    // Identity classes recover the plain counts.
    CHECK(hyperelliptic_equivariant(4, PartitionLabel({1, 1})) ==
          hyperelliptic_count(4, 2));
    CHECK(hyperelliptic_equivariant(4, PartitionLabel({1, 1, 1})) ==
          hyperelliptic_count(4, 3));
    CHECK(hyperelliptic_equivariant(4, PartitionLabel({2})) == T({{9, 1}, {0, -1}}));
    CHECK(hyperelliptic_equivariant(4, PartitionLabel({2, 1})) ==
          T({{10, 1}, {9, 1}, {8, -1}, {1, -1}}));
    CHECK(hyperelliptic_equivariant(4, PartitionLabel({3})) == T({{10, 1}, {8, -1}}));
    for (int n : {2, 3}) {
        CHECK(schur_dimension_specialize(hyperelliptic_equivariant_vector(n)) ==
              hyperelliptic_count(4, n));
    }
    CHECK_THROWS_AS(hyperelliptic_equivariant(3, PartitionLabel({2})),
                    std::invalid_argument);
    CHECK_THROWS_AS(hyperelliptic_equivariant(4, PartitionLabel({1})),
                    std::invalid_argument);
}

TEST_CASE("table construction") {
    const auto t4 = HyperellipticTable::make(4);
    CHECK(t4.g == 4);
    for (int n = 0; n <= 3; ++n) {
        CHECK(t4.entries.at(PartitionLabel::all_ones(n)) == hyperelliptic_count(4, n));
    }
    CHECK(t4.entries.count(PartitionLabel({2})) == 1);
    CHECK(t4.entries.count(PartitionLabel({3})) == 1);
    const auto t2 = HyperellipticTable::make(2);
    CHECK(t2.entries.size() == 4);  // untwisted only below genus 4
}

TEST_CASE("census sizes match the squarefree-count formula") {
    // #P_g = (q-1)(q^{2g+2} - q^{2g})
    CHECK(census_polynomial_count(2, 3) == BigInt(2) * (BigInt(729) - BigInt(81)));
    CHECK(census_polynomial_count(3, 3) == BigInt(2) * (BigInt(6561) - BigInt(729)));
    CHECK(census_polynomial_count(4, 3) == BigInt(2) * (BigInt(59049) - BigInt(6561)));
    CHECK(census_polynomial_count(2, 5) ==
          BigInt(4) * (BigInt(15625) - BigInt(625)));
}

TEST_CASE("census moments at q = 3: odd moments vanish, k = 2 is q^8 - 1") {
    const auto mom = census_moments(4, 3, 3);
    CHECK(mom[0] == Rational(2187));  // #H_4(F_3) = 3^7
    CHECK(mom[1] == Rational(0));
    CHECK(mom[2] == Rational(6560));  // 3^8 - 1
    CHECK(mom[3] == Rational(0));
    CHECK_THROWS_AS(census_moments(4, 4, 1), std::invalid_argument);   // even q
    CHECK_THROWS_AS(census_moments(4, 7, 1), std::invalid_argument);   // too large
    CHECK_THROWS_AS(census_moments(4, 3, 4), std::invalid_argument);
}

TEST_CASE("census moments at q = 5, k <= 2") {
    const auto mom = census_moments(4, 5, 2);
    CHECK(mom[0] == Rational(78125));    // 5^7
    CHECK(mom[1] == Rational(0));
    CHECK(mom[2] == Rational(390624));  // 5^8 - 1
}

TEST_CASE("census twisted counts at q = 3 match every closed form") {
    const auto tw = census_twisted_counts(4, 3);
    auto closed = [](const P& p) { return p.evaluate(Rational(3)); };
    CHECK(tw.at(PartitionLabel()) == closed(hyperelliptic_count(4, 0)));
    CHECK(tw.at(PartitionLabel({1})) == closed(hyperelliptic_count(4, 1)));
    CHECK(tw.at(PartitionLabel({1, 1})) == closed(hyperelliptic_count(4, 2)));
    CHECK(tw.at(PartitionLabel({1, 1, 1})) == closed(hyperelliptic_count(4, 3)));
    CHECK(tw.at(PartitionLabel({2})) == Rational(19682));  // 3^9 - 1
    CHECK(tw.at(PartitionLabel({2, 1})) ==
          closed(hyperelliptic_equivariant(4, PartitionLabel({2, 1}))));
    CHECK(tw.at(PartitionLabel({3})) ==
          closed(hyperelliptic_equivariant(4, PartitionLabel({3}))));
    // Proof identity: #H_{g,2} = (q^2+q) #H_g + second moment.
    const auto mom = census_moments(4, 3, 2);
    CHECK(tw.at(PartitionLabel({1, 1})) == Rational(12) * mom[0] + mom[2]);
}

TEST_CASE("quadratic-twist involution on curve counts") {
    // For a nonsquare t, #C_f(F_q) + #C_{tf}(F_q) = 2(q+1). t = 2 over F_3.
    int checked = 0;
    std::vector<int> coeffs(11, 0);
    for (int c10 : {0, 1, 2}) {
        for (int c9 : {1, 2}) {
            for (int c1 : {0, 1, 2}) {
                for (int c0 : {0, 1, 2}) {
                    coeffs.assign(11, 0);
                    coeffs[10] = c10;
                    coeffs[9] = c9;
                    coeffs[3] = 1;
                    coeffs[1] = c1;
                    coeffs[0] = c0;
                    if (!squarefree_poly(3, coeffs)) continue;
                    auto twisted = coeffs;
                    for (auto& c : twisted) c = (2 * c) % 3;
                    REQUIRE(squarefree_poly(3, twisted));
                    CHECK(curve_point_count(4, 3, coeffs, 1) +
                              curve_point_count(4, 3, twisted, 1) ==
                          8);
                    ++checked;
                }
            }
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("squarefree test basics") {
    // (x+1)^2 = x^2 + 2x + 1 over F_3.
    CHECK_FALSE(squarefree_poly(3, {1, 2, 1}));
    // x(x+1)(x+2) = x^3 + 2x.
    CHECK(squarefree_poly(3, {0, 2, 0, 1}));
    CHECK(squarefree_poly(3, {1}));
    CHECK_FALSE(squarefree_poly(3, {0}));
    // x^3 over F_3 has zero derivative.
    CHECK_FALSE(squarefree_poly(3, {0, 0, 0, 1}));
}

TEST_CASE("point counts over extensions are arithmetically consistent") {
    const std::vector<int> coeffs = {1, 1, 0, 1, 0, 0, 0, 0, 0, 1, 0};  // deg 9
    REQUIRE(squarefree_poly(3, coeffs));
    const auto a1 = curve_point_count(4, 3, coeffs, 1);
    const auto a2 = curve_point_count(4, 3, coeffs, 2);
    const auto a3 = curve_point_count(4, 3, coeffs, 3);
    CHECK((a2 - a1) % 2 == 0);
    CHECK((a3 - a1) % 3 == 0);
    // Weil bounds for genus 4.
    CHECK(a1 >= 4 - 8);  // q+1-2g sqrt(q) > -4
    CHECK(a1 <= 4 + 14);
    CHECK(a2 >= 10 - 24);
    CHECK(a2 <= 10 + 24);
}

TEST_CASE("census thread count does not change results") {
    CHECK(census_moments(4, 3, 3, 4) == census_moments(4, 3, 3, 1));
    CHECK(census_twisted_counts(4, 3, 4) == census_twisted_counts(4, 3, 1));
}
