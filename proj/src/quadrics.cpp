#include "mcount/quadrics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mcount {

namespace {

FieldElement fe_pow(const FieldElement& a, int e) {
    FieldElement r = FieldElement::one(a.spec());
    for (int i = 0; i < e; ++i) r = r * a;
    return r;
}

/// Points of P^1(K) in normalized form (1, t) for t in K, then (0, 1).
std::vector<std::array<FieldElement, 2>> projective_line(const FieldSpec& field) {
    std::vector<std::array<FieldElement, 2>> pts;
    const auto one = FieldElement::one(field);
    for (const auto& t : enumerate_field(field)) pts.push_back({one, t});
    pts.push_back({FieldElement::zero(field), one});
    return pts;
}

/// Split/nonsplit monomial exponents for index 4a + c:
/// x0^a x1^{3-a} y0^c y1^{3-c}.
std::array<int, 4> split_mono_exps(int idx) {
    const int a = idx / 4, c = idx % 4;
    return {a, 3 - a, c, 3 - c};
}

/// Cone monomials x0^i x1^j y^b with i + j + 2b = 6, b ascending then i
/// descending; index 15 is y^3.
const std::vector<std::array<int, 3>>& cone_monos() {
    static const std::vector<std::array<int, 3>> table = [] {
        std::vector<std::array<int, 3>> t;
        for (int b = 0; b <= 3; ++b) {
            for (int i = 6 - 2 * b; i >= 0; --i) t.push_back({i, 6 - 2 * b - i, b});
        }
        return t;
    }();
    return table;
}

FieldElement eval_mono(const std::vector<int>& exps,
                       const std::vector<FieldElement>& coords) {
    FieldElement r = FieldElement::one(coords[0].spec());
    for (size_t v = 0; v < exps.size(); ++v) r = r * fe_pow(coords[v], exps[v]);
    return r;
}

/// d/d(coords[var]) of the monomial, evaluated at coords. The numeric
/// exponent is reduced mod p, so this is correct in every characteristic.
FieldElement eval_mono_deriv(std::vector<int> exps,
                             const std::vector<FieldElement>& coords, int var) {
    const int e = exps[var];
    if (e == 0) return FieldElement::zero(coords[0].spec());
    exps[var] -= 1;
    const int p = coords[0].spec().p();
    FieldElement scale = FieldElement::zero(coords[0].spec());
    const auto one = FieldElement::one(coords[0].spec());
    for (int i = 0; i < e % p; ++i) scale = scale + one;
    return scale * eval_mono(exps, coords);
}

std::vector<int> mono_exps(QuadricKind kind, int idx) {
    if (kind == QuadricKind::cone) {
        const auto& m = cone_monos()[idx];
        return {m[0], m[1], m[2]};
    }
    const auto m = split_mono_exps(idx);
    return {m[0], m[1], m[2], m[3]};
}

/// Chart-local coordinate variables at a normalized point: the variables
/// allowed to move while the chart's unit coordinates stay fixed.
std::vector<int> local_vars(const SurfacePoint& pt) {
    const auto& one = FieldElement::one(pt.coords[0].spec());
    if (pt.kind == QuadricKind::cone) {
        return pt.coords[0] == one ? std::vector<int>{1, 2} : std::vector<int>{0, 2};
    }
    std::vector<int> vars;
    vars.push_back(pt.coords[0] == one ? 1 : 0);
    vars.push_back(pt.coords[2] == one ? 3 : 2);
    return vars;
}

/// Evaluates one basis element (or its chart derivative, var >= 0) at pt.
FieldElement eval_basis_element(const CubicBasis& basis,
                                const std::vector<CubicBasis::Term>& elem,
                                const SurfacePoint& pt, int var) {
    const auto& field = pt.coords[0].spec();
    FieldElement total = FieldElement::zero(field);
    for (const auto& term : elem) {
        const auto exps = mono_exps(basis.kind, term.mono);
        const auto val = var < 0 ? eval_mono(exps, pt.coords)
                                 : eval_mono_deriv(exps, pt.coords, var);
        total = total + embed(term.coeff, field) * val;
    }
    return total;
}

/// Expands rows with extension-field entries into prime-field rows, one per
/// F_p-coordinate of the extension.
LinearConditions expand_rows(const std::vector<std::array<FieldElement, 16>>& rows,
                             int p) {
    LinearConditions out;
    out.p = p;
    for (const auto& row : rows) {
        const int m = row[0].spec().k();
        for (int i = 0; i < m; ++i) {
            std::array<std::uint8_t, 16> prow{};
            for (int j = 0; j < 16; ++j) prow[j] = row[j].coords()[i];
            out.rows.push_back(prow);
        }
    }
    return out;
}

/// In-place Gaussian elimination over F_p; returns the rank. If probe is
/// non-null, also reports whether probe lies in the row span.
int fp_rank(std::vector<std::array<std::uint8_t, 16>> rows, int p,
            const std::array<std::uint8_t, 16>* probe = nullptr,
            bool* probe_in_span = nullptr) {
    std::vector<std::uint8_t> inv(p, 0);
    for (int a = 1; a < p; ++a) {
        for (int b = 1; b < p; ++b) {
            if (a * b % p == 1) inv[a] = static_cast<std::uint8_t>(b);
        }
    }
    int rank = 0;
    std::vector<std::pair<int, std::array<std::uint8_t, 16>>> pivots;
    auto reduce = [&](std::array<std::uint8_t, 16> row) {
        for (const auto& [col, prow] : pivots) {
            if (row[col] == 0) continue;
            const int f = row[col];
            for (int j = 0; j < 16; ++j) {
                row[j] = static_cast<std::uint8_t>((row[j] + (p - f) * prow[j]) % p);
            }
        }
        return row;
    };
    for (auto& raw : rows) {
        auto row = reduce(raw);
        int col = -1;
        for (int j = 0; j < 16; ++j) {
            if (row[j] != 0) {
                col = j;
                break;
            }
        }
        if (col < 0) continue;
        const int f = inv[row[col]];
        for (int j = 0; j < 16; ++j) {
            row[j] = static_cast<std::uint8_t>(row[j] * f % p);
        }
        pivots.emplace_back(col, row);
        ++rank;
    }
    if (probe != nullptr) {
        const auto r = reduce(*probe);
        *probe_in_span =
            std::all_of(r.begin(), r.end(), [](std::uint8_t v) { return v == 0; });
    }
    return rank;
}

int rank_field_matrix(std::vector<std::vector<FieldElement>> rows) {
    int rank = 0;
    const size_t cols = rows.empty() ? 0 : rows[0].size();
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
        size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[pivot_row]);
        const auto piv_inv = rows[pivot_row][col].inverse();
        for (size_t r = pivot_row + 1; r < rows.size(); ++r) {
            if (rows[r][col].is_zero()) continue;
            const auto f = rows[r][col] * piv_inv;
            for (size_t j = col; j < cols; ++j) {
                rows[r][j] = rows[r][j] - f * rows[pivot_row][j];
            }
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

const FieldSpec& coordinate_field(QuadricKind kind, const PrimePower& base, int k) {
    const int factor = kind == QuadricKind::nonsplit ? 2 : 1;
    return FieldSpec::get(base.p, base.e * k * factor);
}

}  // namespace

std::string to_string(QuadricKind kind) {
    switch (kind) {
        case QuadricKind::cone: return "cone";
        case QuadricKind::nonsplit: return "nonsplit";
        case QuadricKind::split: return "split";
    }
    throw std::logic_error("bad kind");
}

QuadricKind quadric_kind_from_string(const std::string& s) {
    if (s == "cone") return QuadricKind::cone;
    if (s == "nonsplit") return QuadricKind::nonsplit;
    if (s == "split") return QuadricKind::split;
    throw std::invalid_argument("unknown quadric kind: " + s);
}

PrimePower parse_prime_power(std::int64_t q) {
    switch (q) {
        case 2: return {2, 1, 2};
        case 3: return {3, 1, 3};
        case 4: return {2, 2, 4};
        case 5: return {5, 1, 5};
        default: throw std::invalid_argument("unsupported q");
    }
}

bool SurfacePoint::operator==(const SurfacePoint& o) const {
    if (kind != o.kind || coords.size() != o.coords.size()) return false;
    for (size_t i = 0; i < coords.size(); ++i) {
        if (!(coords[i].spec() == o.coords[i].spec()) ||
            coords[i].index() != o.coords[i].index()) {
            return false;
        }
    }
    return true;
}

bool SurfacePoint::operator<(const SurfacePoint& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (coords.size() != o.coords.size()) return coords.size() < o.coords.size();
    for (size_t i = 0; i < coords.size(); ++i) {
        const auto a = coords[i].index(), b = o.coords[i].index();
        if (a != b) return a < b;
    }
    return false;
}

std::string SurfacePoint::to_string() const {
    std::string s = mcount::to_string(kind) + "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ", ";
        s += coords[i].to_string();
    }
    return s + ")";
}

SurfacePoint frobenius_point(const SurfacePoint& pt, const PrimePower& base) {
    SurfacePoint out;
    out.kind = pt.kind;
    if (pt.kind == QuadricKind::nonsplit) {
        out.coords = {frobenius(pt.coords[2], base.e), frobenius(pt.coords[3], base.e),
                      frobenius(pt.coords[0], base.e), frobenius(pt.coords[1], base.e)};
    } else {
        for (const auto& c : pt.coords) out.coords.push_back(frobenius(c, base.e));
    }
    return out;
}

int point_degree(const SurfacePoint& pt, const PrimePower& base) {
    SurfacePoint it = frobenius_point(pt, base);
    for (int d = 1; d <= 24; ++d) {
        if (it == pt) return d;
        it = frobenius_point(it, base);
    }
    throw std::logic_error("point degree exceeds supported bound");
}

SurfacePoint embed_point(const SurfacePoint& pt, const FieldSpec& target) {
    SurfacePoint out;
    out.kind = pt.kind;
    for (const auto& c : pt.coords) out.coords.push_back(embed(c, target));
    return out;
}

std::vector<SurfacePoint> enumerate_points(QuadricKind kind, std::int64_t q, int k) {
    const auto base = parse_prime_power(q);
    const int kmax = q <= 3 ? 4 : 3;
    if (k < 1 || k > kmax) throw std::invalid_argument("unsupported extension degree");
    std::vector<SurfacePoint> pts;
    if (kind == QuadricKind::cone) {
        const auto& field = coordinate_field(kind, base, k);
        const auto one = FieldElement::one(field);
        const auto zero = FieldElement::zero(field);
        for (const auto& s : enumerate_field(field)) {
            for (const auto& y : enumerate_field(field)) {
                pts.push_back({kind, {one, s, y}});
            }
        }
        for (const auto& y : enumerate_field(field)) pts.push_back({kind, {zero, one, y}});
        return pts;
    }
    if (kind == QuadricKind::split) {
        const auto& field = coordinate_field(kind, base, k);
        const auto line = projective_line(field);
        for (const auto& x : line) {
            for (const auto& y : line) pts.push_back({kind, {x[0], x[1], y[0], y[1]}});
        }
        return pts;
    }
    // Nonsplit: fixed points of the k-th power of the twisted Frobenius.
    const auto& field = coordinate_field(kind, base, k);  // F_{q^{2k}}
    if (k % 2 == 1) {
        // (x, x^{q^k}) for x in P^1(F_{q^{2k}}).
        for (const auto& x : projective_line(field)) {
            pts.push_back({kind,
                           {x[0], x[1], frobenius(x[0], base.e * k),
                            frobenius(x[1], base.e * k)}});
        }
        return pts;
    }
    // Even k: P^1(F_{q^k})^2, embedded into F_{q^{2k}}.
    const auto& small = FieldSpec::get(base.p, base.e * k);
    const auto line = projective_line(small);
    for (const auto& x : line) {
        for (const auto& y : line) {
            pts.push_back({kind,
                           {embed(x[0], field), embed(x[1], field), embed(y[0], field),
                            embed(y[1], field)}});
        }
    }
    return pts;
}

std::vector<std::vector<SurfacePoint>> closed_points(QuadricKind kind, std::int64_t q,
                                                     int d) {
    const auto base = parse_prime_power(q);
    std::vector<std::vector<SurfacePoint>> orbits;
    std::set<SurfacePoint> seen;
    for (const auto& pt : enumerate_points(kind, q, d)) {
        if (seen.count(pt) || point_degree(pt, base) != d) continue;
        std::vector<SurfacePoint> orbit = {pt};
        for (int i = 1; i < d; ++i) orbit.push_back(frobenius_point(orbit.back(), base));
        const auto least = std::min_element(orbit.begin(), orbit.end());
        std::rotate(orbit.begin(), least, orbit.end());
        for (const auto& o : orbit) seen.insert(o);
        orbits.push_back(std::move(orbit));
    }
    std::sort(orbits.begin(), orbits.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return orbits;
}

std::vector<OrbitConfig> frobenius_orbit_configs(QuadricKind kind, std::int64_t q,
                                                 const PartitionLabel& lambda) {
    std::map<int, int> mult;
    for (int part : lambda.parts()) {
        if (part > 4) throw std::invalid_argument("orbit parts must be <= 4");
        ++mult[part];
    }
    std::vector<OrbitConfig> configs = {{{}, lambda}};
    for (const auto& [d, m] : mult) {
        const auto orbits = closed_points(kind, q, d);
        // All m-subsets of the degree-d closed points.
        std::vector<std::vector<int>> choices;
        std::vector<int> idx(m);
        std::iota(idx.begin(), idx.end(), 0);
        const int n = static_cast<int>(orbits.size());
        if (m > n) return {};
        while (true) {
            choices.push_back(idx);
            int i = m - 1;
            while (i >= 0 && idx[i] == n - m + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
        }
        std::vector<OrbitConfig> next;
        for (const auto& cfg : configs) {
            for (const auto& choice : choices) {
                OrbitConfig extended = cfg;
                for (int c : choice) {
                    extended.points.insert(extended.points.end(), orbits[c].begin(),
                                           orbits[c].end());
                }
                next.push_back(std::move(extended));
            }
        }
        configs = std::move(next);
    }
    return configs;
}

CubicBasis CubicBasis::make(QuadricKind kind, std::int64_t q) {
    CubicBasis basis;
    basis.kind = kind;
    basis.base = parse_prime_power(q);
    if (kind != QuadricKind::nonsplit) {
        const auto& field = FieldSpec::get(basis.base.p, basis.base.e);
        const auto one = FieldElement::one(field);
        for (int idx = 0; idx < 16; ++idx) basis.elements.push_back({{idx, one}});
        return basis;
    }
    // Nonsplit: F_q-fixed subspace of the F_{q^2} monomial span under
    // conjugate-swap. Swap exchanges the exponent pair (a, c) -> (c, a).
    const auto& field2 = FieldSpec::get(basis.base.p, 2 * basis.base.e);
    const auto one = FieldElement::one(field2);
    // Generator of F_{q^2} over F_q: the polynomial-basis element, which has
    // degree 2 by construction of the modulus.
    std::vector<std::uint8_t> gen_coords(field2.k(), 0);
    gen_coords[1] = 1;
    const FieldElement g(field2, gen_coords);
    const FieldElement gq = frobenius(g, basis.base.e);
    for (int a = 0; a < 4; ++a) {
        for (int c = 0; c <= a; ++c) {
            const int m = 4 * a + c, mswap = 4 * c + a;
            if (a == c) {
                basis.elements.push_back({{m, one}});
            } else {
                basis.elements.push_back({{m, one}, {mswap, one}});
                basis.elements.push_back({{m, g}, {mswap, gq}});
            }
        }
    }
    return basis;
}

void LinearConditions::append(const LinearConditions& o) {
    if (p == 0) p = o.p;
    if (p != o.p) throw std::invalid_argument("mixed characteristics");
    rows.insert(rows.end(), o.rows.begin(), o.rows.end());
}

int LinearConditions::rank() const { return fp_rank(rows, p); }

LinearConditions vanishing_conditions(const CubicBasis& basis, const SurfacePoint& pt) {
    if (basis.base.e != 1) {
        throw std::invalid_argument("condition rows require prime q");
    }
    std::array<FieldElement, 16> row;
    for (int j = 0; j < 16; ++j) {
        row[j] = eval_basis_element(basis, basis.elements[j], pt, -1);
    }
    return expand_rows({row}, basis.base.p);
}

LinearConditions singularity_conditions(const CubicBasis& basis,
                                        const SurfacePoint& pt) {
    if (basis.base.e != 1) {
        throw std::invalid_argument("condition rows require prime q");
    }
    const auto vars = local_vars(pt);
    std::vector<std::array<FieldElement, 16>> rows(3);
    for (int j = 0; j < 16; ++j) {
        rows[0][j] = eval_basis_element(basis, basis.elements[j], pt, -1);
        rows[1][j] = eval_basis_element(basis, basis.elements[j], pt, vars[0]);
        rows[2][j] = eval_basis_element(basis, basis.elements[j], pt, vars[1]);
    }
    return expand_rows(rows, basis.base.p);
}

BigInt count_fibers(const LinearConditions& conditions, QuadricKind kind,
                    std::int64_t q) {
    const int p = conditions.p == 0 ? static_cast<int>(q) : conditions.p;
    auto qpow = [&](int e) {
        BigInt r = 1;
        for (int i = 0; i < e; ++i) r *= q;
        return r;
    };
    if (kind == QuadricKind::cone) {
        std::array<std::uint8_t, 16> vertex{};
        vertex[15] = 1;
        bool in_span = false;
        const int r = fp_rank(conditions.rows, p, &vertex, &in_span);
        if (in_span) return 0;
        return qpow(15 - r);
    }
    const int r = fp_rank(conditions.rows, p);
    return (qpow(16 - r) - 1) / (q - 1);
}

GeometryFlags geometry_predicates(const std::vector<SurfacePoint>& pts,
                                  std::int64_t /*q*/) {
    GeometryFlags flags;
    if (pts.empty()) return flags;
    const QuadricKind kind = pts[0].kind;
    int lcm_k = 1;
    const int p = pts[0].coords[0].spec().p();
    for (const auto& pt : pts) lcm_k = std::lcm(lcm_k, pt.coords[0].spec().k());
    const auto& field = FieldSpec::get(p, lcm_k);
    std::vector<SurfacePoint> emb;
    for (const auto& pt : pts) emb.push_back(embed_point(pt, field));

    auto same_factor = [](const SurfacePoint& a, const SurfacePoint& b, int off) {
        return a.coords[off] == b.coords[off] && a.coords[off + 1] == b.coords[off + 1];
    };
    for (size_t i = 0; i < emb.size() && !flags.pair_on_common_ruling; ++i) {
        for (size_t j = i + 1; j < emb.size(); ++j) {
            const bool hit = kind == QuadricKind::cone
                                 ? same_factor(emb[i], emb[j], 0)
                                 : same_factor(emb[i], emb[j], 0) ||
                                       same_factor(emb[i], emb[j], 2);
            if (hit) {
                flags.pair_on_common_ruling = true;
                break;
            }
        }
    }

    // Coordinates in the ambient P^3 (Segre for the smooth quadrics, the
    // weighted-degree-2 embedding for the cone).
    std::vector<std::vector<FieldElement>> amb;
    for (const auto& pt : emb) {
        const auto& c = pt.coords;
        if (kind == QuadricKind::cone) {
            amb.push_back({c[0] * c[0], c[0] * c[1], c[1] * c[1], c[2]});
        } else {
            amb.push_back({c[0] * c[2], c[0] * c[3], c[1] * c[2], c[1] * c[3]});
        }
    }
    const int ambient_rank = rank_field_matrix(amb);
    flags.collinear = ambient_rank <= 2;
    flags.coplanar = ambient_rank <= 3;

    if (kind != QuadricKind::cone) {
        // A (1,1)-form a x0 y0 + b x0 y1 + c x1 y0 + d x1 y1 vanishing at
        // all points exists iff the bilinear value matrix drops rank.
        std::vector<std::vector<FieldElement>> bil;
        for (const auto& pt : emb) {
            const auto& c = pt.coords;
            bil.push_back({c[0] * c[2], c[0] * c[3], c[1] * c[2], c[1] * c[3]});
        }
        const int bilinear_rank = rank_field_matrix(bil);
        flags.common_11_curve = bilinear_rank < 4;
        flags.general_position =
            pts.size() == 4 && !flags.pair_on_common_ruling && !flags.common_11_curve;
    }
    return flags;
}

}  // namespace mcount
