#include "mcount/assembly.hpp"

#include "mcount/hyperelliptic.hpp"
#include "mcount/sieve.hpp"

#include <stdexcept>

namespace mcount {

namespace {

using P = TruncatedQPoly;

P T(const std::vector<std::pair<int, long>>& terms) {
    P r;
    for (const auto& [d, c] : terms) r = r + P::monomial(d, Rational(c));
    return r;
}

void check_twist(int n, const PartitionLabel& twist) {
    if (n < 0 || n > 3) throw std::invalid_argument("marked points must be 0..3");
    if (twist.n() != n) throw std::invalid_argument("twist must be a partition of n");
}

}  // namespace

const BoundaryData& BoundaryData::get() {
    static const BoundaryData data = [] {
        BoundaryData b;
        b.plain[0] = T({{8, 3}, {7, 12}, {6, 33}, {5, 50}, {4, 50}, {3, 32}, {2, 13},
                        {1, 4}, {0, 1}});
        b.plain[1] = T({{9, 4}, {8, 28}, {7, 94}, {6, 192}, {5, 240}, {4, 191},
                        {3, 93}, {2, 31}, {1, 6}, {0, 1}});
        b.plain[2] = T({{10, 8}, {9, 72}, {8, 321}, {7, 842}, {6, 1362}, {5, 1362},
                        {4, 838}, {3, 321}, {2, 78}, {1, 11}, {0, 1}});
        b.plain[3] = T({{11, 17}, {10, 200}, {9, 1172}, {8, 3990}, {7, 8292},
                        {6, 10606}, {5, 8296}, {4, 3977}, {3, 1179}, {2, 205},
                        {1, 19}, {0, 2}});
        SchurVector b2(2);
        b2.set_term(PartitionLabel({2}),
                    T({{10, 7}, {9, 52}, {8, 222}, {7, 563}, {6, 901}, {5, 901},
                       {4, 561}, {3, 221}, {2, 56}, {1, 9}, {0, 1}}));
        b2.set_term(PartitionLabel({1, 1}),
                    T({{10, 1}, {9, 20}, {8, 99}, {7, 279}, {6, 461}, {5, 461},
                       {4, 277}, {3, 100}, {2, 22}, {1, 2}}));
        b.equivariant[2] = b2;
        SchurVector b3(3);
        b3.set_term(PartitionLabel({3}),
                    T({{11, 9}, {10, 84}, {9, 426}, {8, 1351}, {7, 2692}, {6, 3415},
                       {5, 2694}, {4, 1347}, {3, 425}, {2, 85}, {1, 11}, {0, 1}}));
        b3.set_term(PartitionLabel({2, 1}),
                    T({{11, 4}, {10, 56}, {9, 350}, {8, 1224}, {7, 2577}, {6, 3304},
                       {5, 2578}, {4, 1220}, {3, 353}, {2, 58}, {1, 5}, {0, 1}}));
        b3.set_term(PartitionLabel({1, 1, 1}),
                    T({{10, 4}, {9, 46}, {8, 191}, {7, 446}, {6, 583}, {5, 446},
                       {4, 190}, {3, 48}, {2, 4}, {1, -2}, {0, -1}}));
        b.equivariant[3] = b3;
        return b;
    }();
    return data;
}

const EulerData& EulerData::get() {
    static const EulerData data = [] {
        EulerData e;
        e.chi_m43 = -10;
        e.chi_equivariant_m43[PartitionLabel({3})] = 2;
        e.chi_equivariant_m43[PartitionLabel({2, 1})] = -6;
        e.chi_equivariant_m43[PartitionLabel({1, 1, 1})] = 0;
        return e;
    }();
    return data;
}

Rational EulerData::chi_value(const PartitionLabel& twist) const {
    Rational total = 0;
    for (const auto& [lambda, c] : chi_equivariant_m43) {
        total += c * Rational(sn_character(lambda, twist));
    }
    return total;
}

const AutOrders& AutOrders::get() {
    static const AutOrders data = [] {
        AutOrders a;
        a.cone = T({{7, 1}, {6, -1}, {5, -1}, {4, 1}});
        a.nonsplit = T({{6, 2}, {2, -2}});           // 2(q^6 - q^2)
        a.split = T({{6, 2}, {4, -4}, {2, 2}});      // 2(q^3 - q)^2
        return a;
    }();
    return data;
}

int assembly_floor(int n) {
    switch (n) {
        case 0:
        case 1: return 5;
        case 2: return 6;
        case 3: return 7;
        default: throw std::invalid_argument("marked points must be 0..3");
    }
}

TruncatedQPoly boundary_poly(int n, const PartitionLabel& twist) {
    check_twist(n, twist);
    if (n <= 1) return BoundaryData::get().plain.at(n);
    return schur_character_specialize(BoundaryData::get().equivariant.at(n), twist);
}

TruncatedQPoly nonhyperelliptic_open_count(int n, const PartitionLabel& twist) {
    check_twist(n, twist);
    const auto& aut = AutOrders::get();
    const int floor = assembly_floor(n);
    P total;
    const std::vector<std::pair<QuadricKind, const P*>> kinds = {
        {QuadricKind::cone, &aut.cone},
        {QuadricKind::nonsplit, &aut.nonsplit},
        {QuadricKind::split, &aut.split}};
    for (const auto& [kind, order] : kinds) {
        P sum;
        for (int d = 0; d <= 3; ++d) {
            sum = sum + sieve_term_symbolic({FamilySpec::twisted(kind, twist), d});
        }
        total = total + poly_div_exact_series(sum, *order, floor);
    }
    return total.truncated_to(floor);
}

TruncatedQPoly open_count(int n, const PartitionLabel& twist) {
    check_twist(n, twist);
    const P hyper = (twist == PartitionLabel::all_ones(n))
                        ? hyperelliptic_count(4, n)
                        : hyperelliptic_equivariant(4, twist);
    return nonhyperelliptic_open_count(n, twist) + hyper;
}

TruncatedQPoly euler_pin(const TruncatedQPoly& closed_with_hole, int hole_degree,
                         int n, const PartitionLabel& twist) {
    check_twist(n, twist);
    if (n != 3) throw std::invalid_argument("Euler datum is available for n = 3 only");
    const Rational chi = EulerData::get().chi_value(twist);
    // (closed - boundary)(1) = chi; the hole currently contributes 0.
    const Rational rest = closed_with_hole.evaluate(1) -
                          boundary_poly(n, twist).evaluate(1);
    return closed_with_hole.with_coeff(hole_degree, chi - rest);
}

TruncatedQPoly closed_count(int n, const PartitionLabel& twist) {
    check_twist(n, twist);
    const auto approx = open_count(n, twist) + boundary_poly(n, twist);
    const auto completed = palindrome_complete(approx, 9 + n);
    if (!completed.hole) return completed.poly;
    return euler_pin(completed.poly, *completed.hole, n, twist);
}

EquivariantCounts equivariant_closed_and_open(int n) {
    if (n != 2 && n != 3) throw std::invalid_argument("equivariant pipeline needs n = 2 or 3");
    std::map<PartitionLabel, TruncatedQPoly> closed_classes;
    for (const auto& twist : partitions_of(n)) {
        closed_classes[twist] = closed_count(n, twist);
    }
    EquivariantCounts out;
    out.closed = schur_from_class_function(n, closed_classes);
    out.open = out.closed - BoundaryData::get().equivariant.at(n);
    return out;
}

}  // namespace mcount
