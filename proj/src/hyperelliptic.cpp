#include "mcount/hyperelliptic.hpp"

#include "mcount/finitefield.hpp"

#include <array>
#include <memory>
#include <stdexcept>
#include <thread>
#include <utility>

namespace mcount {

namespace {

using P = TruncatedQPoly;

P T(const std::vector<std::pair<int, long>>& terms) {
    P r;
    for (const auto& [d, c] : terms) r = r + P::monomial(d, Rational(c));
    return r;
}

std::pair<int, int> odd_prime_power(std::int64_t q) {
    for (int p : {3, 5, 7, 11, 13}) {
        if (q % p == 0) {
            int e = 0;
            std::int64_t m = 1;
            while (m < q) {
                m *= p;
                ++e;
            }
            if (m != q) throw std::invalid_argument("q must be an odd prime power");
            return {p, e};
        }
    }
    throw std::invalid_argument("q must be odd");
}

BigInt group_order(std::int64_t q) {
    return BigInt(q * q - 1) * BigInt(q * q - q);
}

/// Shared census state for one (g, q): the squarefree sieve and base tables.
struct Census {
    int g = 0;
    int q = 0;  // field order (table size)
    int N = 0;  // top degree 2g+2; coefficient vectors have N+1 digits
    const TableField* t1 = nullptr;
    std::vector<std::size_t> powq;       // powq[j] = q^j
    std::vector<bool> not_squarefree;    // indexed by packed coefficient vector
    std::vector<std::int8_t> chi;        // quadratic character by field index
    std::vector<std::vector<std::uint16_t>> pw;  // pw[x][j] = x^j
};

std::vector<std::int8_t> quadratic_character(const TableField& t) {
    const int q = t.n();
    std::vector<std::int8_t> chi(q, 0);
    const int e = (q - 1) / 2;
    for (int v = 1; v < q; ++v) {
        std::uint16_t u = t.one();
        for (int i = 0; i < e; ++i) u = t.mul(u, static_cast<std::uint16_t>(v));
        chi[v] = (u == t.one()) ? 1 : -1;
    }
    return chi;
}

/// Marks every multiple of the square of a positive-degree polynomial.
std::vector<bool> squarefree_sieve(const TableField& t, int g, std::size_t total) {
    const int q = t.n();
    const int N = 2 * g + 2;
    std::vector<bool> non(total, false);
    for (int d = 1; d <= g + 1; ++d) {
        std::vector<std::uint16_t> g1(d + 1, 0);
        g1[d] = t.one();
        const int hlen = N + 1 - 2 * d;
        std::vector<std::uint16_t> sq(2 * d + 1), h(hlen), prod(N + 1);
        while (true) {
            std::fill(sq.begin(), sq.end(), 0);
            for (int i = 0; i <= d; ++i) {
                for (int j = 0; j <= d; ++j) {
                    sq[i + j] = t.add(sq[i + j], t.mul(g1[i], g1[j]));
                }
            }
            std::fill(h.begin(), h.end(), 0);
            while (true) {
                std::fill(prod.begin(), prod.end(), 0);
                for (int i = 0; i <= 2 * d; ++i) {
                    if (!sq[i]) continue;
                    for (int j = 0; j < hlen; ++j) {
                        if (h[j]) prod[i + j] = t.add(prod[i + j], t.mul(sq[i], h[j]));
                    }
                }
                std::size_t idx = 0;
                for (int j = N; j >= 0; --j) idx = idx * q + prod[j];
                non[idx] = true;
                int i = 0;
                while (i < hlen && h[i] == q - 1) h[i++] = 0;
                if (i == hlen) break;
                ++h[i];
            }
            int i = 0;
            while (i < d && g1[i] == q - 1) g1[i++] = 0;
            if (i == d) break;
            ++g1[i];
        }
    }
    return non;
}

const Census& census_for(int g, std::int64_t q) {
    static std::map<std::pair<int, std::int64_t>, std::unique_ptr<Census>> cache;
    auto& slot = cache[{g, q}];
    if (slot) return *slot;
    if (g < 2) throw std::invalid_argument("census needs genus >= 2");
    const auto [p, e] = odd_prime_power(q);
    const int N = 2 * g + 2;
    long double size = 1;
    for (int j = 0; j <= N; ++j) size *= static_cast<long double>(q);
    if (size > 2.5e8L) throw std::invalid_argument("census space too large to enumerate");

    auto cx = std::make_unique<Census>();
    cx->g = g;
    cx->q = static_cast<int>(q);
    cx->N = N;
    cx->t1 = &TableField::get(p, e);
    cx->powq.resize(N + 2);
    cx->powq[0] = 1;
    for (int j = 1; j <= N + 1; ++j) cx->powq[j] = cx->powq[j - 1] * cx->q;
    cx->not_squarefree = squarefree_sieve(*cx->t1, g, cx->powq[N + 1]);
    cx->chi = quadratic_character(*cx->t1);
    cx->pw.assign(cx->q, std::vector<std::uint16_t>(N + 1, cx->t1->one()));
    for (int x = 0; x < cx->q; ++x) {
        for (int j = 1; j <= N; ++j) {
            cx->pw[x][j] = cx->t1->mul(cx->pw[x][j - 1], static_cast<std::uint16_t>(x));
        }
    }
    slot = std::move(cx);
    return *slot;
}

struct MomentScratch {
    const Census* cx = nullptr;
    int kmax = 0;
    int chi_inf = 0;
    std::array<long long, 4> sums{};
    std::vector<std::vector<std::uint16_t>> vals;  // per recursion level
};

void moment_rec(MomentScratch& s, int level, std::size_t base,
                const std::vector<std::uint16_t>& vals) {
    const auto& cx = *s.cx;
    const auto& t = *cx.t1;
    if (level == 0) {
        for (int c0 = 0; c0 < cx.q; ++c0) {
            if (cx.not_squarefree[base + c0]) continue;
            long long tf = s.chi_inf;
            for (int x = 0; x < cx.q; ++x) {
                tf += cx.chi[t.add(vals[x], static_cast<std::uint16_t>(c0))];
            }
            long long pw = 1;
            for (int k = 0; k <= s.kmax; ++k) {
                s.sums[k] += pw;
                pw *= tf;
            }
        }
        return;
    }
    auto& next = s.vals[level];
    for (int c = 0; c < cx.q; ++c) {
        for (int x = 0; x < cx.q; ++x) {
            next[x] = t.add(vals[x],
                            t.mul(static_cast<std::uint16_t>(c), cx.pw[x][level]));
        }
        moment_rec(s, level - 1, base + c * cx.powq[level], next);
    }
}

/// One census subtree: the top two coefficients fixed (not both zero).
struct Prefix {
    int c_top = 0;   // degree 2g+2 coefficient
    int c_next = 0;  // degree 2g+1 coefficient
};

std::vector<Prefix> census_prefixes(int q) {
    std::vector<Prefix> out;
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            if (a == 0 && b == 0) continue;  // degree < 2g+1: outside P_g
            out.push_back({a, b});
        }
    }
    return out;
}

std::array<long long, 4> moments_for_prefixes(const Census& cx, int kmax,
                                              const std::vector<Prefix>& jobs) {
    const auto& t = *cx.t1;
    MomentScratch s;
    s.cx = &cx;
    s.kmax = kmax;
    s.vals.assign(cx.N + 1, std::vector<std::uint16_t>(cx.q, 0));
    std::vector<std::uint16_t> top(cx.q);
    std::array<long long, 4> sums{};
    for (const auto& job : jobs) {
        s.chi_inf = job.c_top ? cx.chi[job.c_top] : 0;
        for (int x = 0; x < cx.q; ++x) {
            top[x] = t.add(t.mul(static_cast<std::uint16_t>(job.c_top), cx.pw[x][cx.N]),
                           t.mul(static_cast<std::uint16_t>(job.c_next),
                                 cx.pw[x][cx.N - 1]));
        }
        s.sums = {};
        moment_rec(s, cx.N - 2, job.c_top * cx.powq[cx.N] + job.c_next * cx.powq[cx.N - 1],
                   top);
        for (int k = 0; k <= kmax; ++k) sums[k] += s.sums[k];
    }
    return sums;
}

/// Extension-field evaluation tables for one m <= 3.
struct ExtTables {
    const TableField* t = nullptr;
    std::vector<std::uint16_t> emb;              // base-field index -> extension index
    std::vector<std::vector<std::uint16_t>> pw;  // pw[x][j] = x^j
    std::vector<std::int64_t> sqrt_count;        // #{y : y^2 = v}
};

ExtTables ext_tables(int p, int e, int m, int n_coeffs) {
    ExtTables out;
    out.t = &TableField::get(p, e * m);
    const int n = out.t->n();
    out.emb = embedding_table(FieldSpec::get(p, e), out.t->spec());
    out.pw.assign(n, std::vector<std::uint16_t>(n_coeffs, out.t->one()));
    for (int x = 0; x < n; ++x) {
        for (int j = 1; j < n_coeffs; ++j) {
            out.pw[x][j] = out.t->mul(out.pw[x][j - 1], static_cast<std::uint16_t>(x));
        }
    }
    out.sqrt_count.assign(n, 0);
    for (int y = 0; y < n; ++y) {
        ++out.sqrt_count[out.t->mul(static_cast<std::uint16_t>(y),
                                    static_cast<std::uint16_t>(y))];
    }
    return out;
}

struct TwistedSums {
    // Indexed by partitions of 0..3 in the order: [], [1], [1,1], [2],
    // [1,1,1], [2,1], [3].
    std::array<long long, 7> n{};
};

TwistedSums twisted_for_range(const Census& cx, const std::array<ExtTables, 3>& ext,
                              std::size_t lo, std::size_t hi) {
    TwistedSums out;
    const int nd = cx.N + 1;
    std::vector<int> digits(nd);
    std::size_t rem = lo;
    for (int j = 0; j < nd; ++j) {
        digits[j] = static_cast<int>(rem % cx.q);
        rem /= cx.q;
    }
    std::vector<std::uint16_t> ec(nd);
    for (std::size_t i = lo; i < hi; ++i) {
        const bool in_pg =
            !cx.not_squarefree[i] && (digits[cx.N] != 0 || digits[cx.N - 1] != 0);
        if (in_pg) {
            std::array<long long, 4> a{};  // a[m] = #C_f(F_{q^m})
            for (int m = 1; m <= 3; ++m) {
                const auto& x = ext[m - 1];
                for (int j = 0; j < nd; ++j) ec[j] = x.emb[digits[j]];
                long long count = 0;
                const int n = x.t->n();
                for (int v = 0; v < n; ++v) {
                    std::uint16_t acc = ec[0];
                    for (int j = 1; j < nd; ++j) {
                        if (ec[j]) acc = x.t->add(acc, x.t->mul(ec[j], x.pw[v][j]));
                    }
                    count += x.sqrt_count[acc];
                }
                count += digits[cx.N] ? x.sqrt_count[ec[cx.N]] : 1;
                a[m] = count;
            }
            const long long a1 = a[1], b2o = a[2] - a[1], b3o = a[3] - a[1];
            out.n[0] += 1;
            out.n[1] += a1;
            out.n[2] += a1 * (a1 - 1);
            out.n[3] += b2o;
            out.n[4] += a1 * (a1 - 1) * (a1 - 2);
            out.n[5] += b2o * a1;
            out.n[6] += b3o;
        }
        int j = 0;
        while (j < nd && digits[j] == cx.q - 1) digits[j++] = 0;
        if (j < nd) ++digits[j];
    }
    return out;
}

}  // namespace

TruncatedQPoly hyperelliptic_count(int g, int n) {
    if (g < 2) throw std::invalid_argument("genus must be >= 2");
    if (n < 0 || n > 3) throw std::invalid_argument("marked points must be 0..3");
    switch (n) {
        case 0: return T({{2 * g - 1, 1}});
        case 1: return T({{2 * g, 1}, {2 * g - 1, 1}});
        case 2: return T({{2 * g + 1, 1}, {2 * g, 2}, {0, -1}});
        default: return T({{2 * g + 2, 1}, {2 * g + 1, 3}, {2 * g, -1}, {1, -3}});
    }
}

SchurVector hyperelliptic_equivariant_vector(int n) {
    if (n == 2) {
        SchurVector v(2);
        v.set_term(PartitionLabel({2}), T({{9, 1}, {8, 1}, {0, -1}}));
        v.set_term(PartitionLabel({1, 1}), T({{8, 1}}));
        return v;
    }
    if (n == 3) {
        SchurVector v(3);
        v.set_term(PartitionLabel({3}), T({{10, 1}, {9, 1}, {8, -1}, {1, -1}}));
        v.set_term(PartitionLabel({2, 1}), T({{9, 1}, {1, -1}}));
        return v;
    }
    throw std::invalid_argument("equivariant table covers n = 2, 3");
}

TruncatedQPoly hyperelliptic_equivariant(int g, const PartitionLabel& twist) {
    if (g != 4) throw std::invalid_argument("equivariant table is for genus 4");
    const int n = twist.n();
    if (n != 2 && n != 3) throw std::invalid_argument("twist must have size 2 or 3");
    return schur_character_specialize(hyperelliptic_equivariant_vector(n), twist);
}

HyperellipticTable HyperellipticTable::make(int g) {
    HyperellipticTable t;
    t.g = g;
    for (int n = 0; n <= 3; ++n) {
        t.entries[PartitionLabel::all_ones(n)] = hyperelliptic_count(g, n);
    }
    if (g == 4) {
        for (const auto& twist :
             {PartitionLabel({2}), PartitionLabel({2, 1}), PartitionLabel({3})}) {
            t.entries[twist] = hyperelliptic_equivariant(g, twist);
        }
    }
    return t;
}

BigInt census_polynomial_count(int g, std::int64_t q) {
    return BigInt(census_moments(g, q, 0)[0]) * group_order(q);
}

std::vector<Rational> census_moments(int g, std::int64_t q, int k_max, int threads) {
    if (k_max < 0 || k_max > 3) throw std::invalid_argument("k_max must be 0..3");
    const auto& cx = census_for(g, q);
    const auto prefixes = census_prefixes(cx.q);
    std::array<long long, 4> sums{};
    const std::size_t nthreads = std::max<std::size_t>(
        1, std::min<std::size_t>(threads, prefixes.size()));
    if (nthreads <= 1) {
        sums = moments_for_prefixes(cx, k_max, prefixes);
    } else {
        std::vector<std::array<long long, 4>> partial(nthreads);
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < nthreads; ++t) {
            const std::size_t lo = prefixes.size() * t / nthreads;
            const std::size_t hi = prefixes.size() * (t + 1) / nthreads;
            pool.emplace_back([&, t, lo, hi] {
                partial[t] = moments_for_prefixes(
                    cx, k_max,
                    std::vector<Prefix>(prefixes.begin() + lo, prefixes.begin() + hi));
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& part : partial) {
            for (int k = 0; k <= k_max; ++k) sums[k] += part[k];
        }
    }
    std::vector<Rational> out;
    for (int k = 0; k <= k_max; ++k) {
        out.push_back(Rational(BigInt(sums[k]), group_order(q)));
    }
    return out;
}

std::map<PartitionLabel, Rational> census_twisted_counts(int g, std::int64_t q,
                                                         int threads) {
    const auto& cx = census_for(g, q);
    const auto [p, e] = odd_prime_power(q);
    if (FieldSpec::get(p, e * 3).order() > 2048) {
        throw std::invalid_argument("extension fields too large for tables");
    }
    const std::array<ExtTables, 3> ext = {ext_tables(p, e, 1, cx.N + 1),
                                          ext_tables(p, e, 2, cx.N + 1),
                                          ext_tables(p, e, 3, cx.N + 1)};
    const std::size_t total = cx.powq[cx.N + 1];
    TwistedSums sums;
    const std::size_t nthreads =
        std::max<std::size_t>(1, std::min<std::size_t>(threads, 64));
    if (nthreads <= 1) {
        sums = twisted_for_range(cx, ext, 0, total);
    } else {
        std::vector<TwistedSums> partial(nthreads);
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < nthreads; ++t) {
            const std::size_t lo = total * t / nthreads;
            const std::size_t hi = total * (t + 1) / nthreads;
            pool.emplace_back(
                [&, t, lo, hi] { partial[t] = twisted_for_range(cx, ext, lo, hi); });
        }
        for (auto& th : pool) th.join();
        for (const auto& part : partial) {
            for (int i = 0; i < 7; ++i) sums.n[i] += part.n[i];
        }
    }
    const std::vector<PartitionLabel> keys = {
        PartitionLabel(),           PartitionLabel({1}),    PartitionLabel({1, 1}),
        PartitionLabel({2}),        PartitionLabel({1, 1, 1}),
        PartitionLabel({2, 1}),     PartitionLabel({3})};
    std::map<PartitionLabel, Rational> out;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        out[keys[i]] = Rational(BigInt(sums.n[i]), group_order(q));
    }
    return out;
}

bool squarefree_poly(std::int64_t q, const std::vector<int>& coeffs) {
    const auto [p, e] = odd_prime_power(q);
    const auto& t = TableField::get(p, e);
    auto degree = [](const std::vector<std::uint16_t>& f) {
        for (int j = static_cast<int>(f.size()) - 1; j >= 0; --j) {
            if (f[j]) return j;
        }
        return -1;
    };
    std::vector<std::uint16_t> a(coeffs.begin(), coeffs.end());
    std::vector<std::uint16_t> b(a.size(), 0);  // derivative
    for (std::size_t j = 1; j < a.size(); ++j) {
        std::uint16_t v = 0;
        for (std::size_t i = 0; i < j % p; ++i) v = t.add(v, a[j]);
        b[j - 1] = v;
    }
    int da = degree(a), db = degree(b);
    if (da <= 0) return da == 0;  // nonzero constants are squarefree
    if (db < 0) return false;     // f' = 0 in char p forces a p-th power factor
    while (db >= 0) {
        // a mod b
        while (da >= db) {
            const std::uint16_t factor = t.div(a[da], b[db]);
            for (int j = 0; j <= db; ++j) {
                a[da - db + j] = t.sub(a[da - db + j], t.mul(factor, b[j]));
            }
            da = degree(a);
            if (da < 0) break;
        }
        std::swap(a, b);
        std::swap(da, db);
    }
    return da == 0;  // gcd(f, f') constant
}

std::int64_t curve_point_count(int g, std::int64_t q, const std::vector<int>& coeffs,
                               int m) {
    if (m < 1 || m > 3) throw std::invalid_argument("extension degree m must be 1..3");
    if (coeffs.size() != static_cast<std::size_t>(2 * g + 3)) {
        throw std::invalid_argument("need 2g+3 coefficients");
    }
    if (coeffs[2 * g + 2] == 0 && coeffs[2 * g + 1] == 0) {
        throw std::invalid_argument("degree must be 2g+2 or 2g+1");
    }
    const auto [p, e] = odd_prime_power(q);
    const auto x = ext_tables(p, e, m, static_cast<int>(coeffs.size()));
    std::vector<std::uint16_t> ec(coeffs.size());
    for (std::size_t j = 0; j < coeffs.size(); ++j) ec[j] = x.emb[coeffs[j]];
    std::int64_t count = 0;
    for (int v = 0; v < x.t->n(); ++v) {
        std::uint16_t acc = ec[0];
        for (std::size_t j = 1; j < coeffs.size(); ++j) {
            if (ec[j]) acc = x.t->add(acc, x.t->mul(ec[j], x.pw[v][j]));
        }
        count += x.sqrt_count[acc];
    }
    count += coeffs[2 * g + 2] ? x.sqrt_count[ec[2 * g + 2]] : 1;
    return count;
}

}  // namespace mcount
