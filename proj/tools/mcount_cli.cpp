// Command-line surface: point-count tables, verification suites, reports.
//
// Exit codes: 0 success (all verifications pass), 1 verification mismatch,
// 2 usage error.

#include "mcount/assembly.hpp"
#include "mcount/hyperelliptic.hpp"
#include "mcount/json_io.hpp"
#include "mcount/local_systems.hpp"
#include "mcount/partition.hpp"
#include "mcount/qpoly.hpp"
#include "mcount/quadrics.hpp"
#include "mcount/schur.hpp"
#include "mcount/sieve.hpp"
#include "mcount/zeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using mcount::BigInt;
using mcount::PartitionLabel;
using mcount::Rational;
using mcount::TruncatedQPoly;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
    std::string format = "json";
    std::string out;
    int threads = 0;  // 0 = resolve from MCOUNT_THREADS or default to 1
};

int resolve_threads(const CommonOpts& opts) {
    if (opts.threads > 0) return opts.threads;
    if (const char* env = std::getenv("MCOUNT_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "latex", "pretty"}));
    cmd->add_option("--out", opts.out, "Write the report to FILE instead of stdout");
    cmd->add_option("--threads", opts.threads,
                    "Worker threads (default: MCOUNT_THREADS or 1)");
}

void emit(const std::string& text, const CommonOpts& opts) {
    if (opts.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opts.out, std::ios::binary);
    if (!f) throw CLI::ValidationError("--out", "cannot open " + opts.out);
    f << text;
}

PartitionLabel parse_twist(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        parts.push_back(std::stoi(item));
    }
    return PartitionLabel(parts);
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string latex_poly(const std::string& s) {
    // q^10 -> q^{10} so the exponent renders as a unit.
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += s[i];
        if (s[i] == '^') {
            std::size_t j = i + 1;
            std::string digits;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
                digits += s[j++];
            }
            out += "{" + digits + "}";
            i = j - 1;
        }
    }
    return out;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

/// Render a labelled list of polynomial strings in the selected format.
std::string render_rows(const std::string& title,
                        const std::vector<std::pair<std::string, std::string>>& rows,
                        const std::string& format, const Json& as_json) {
    if (format == "json") return json_text(as_json);
    std::ostringstream os;
    if (format == "csv") {
        os << "label,polynomial\n";
        for (const auto& [label, poly] : rows) {
            os << label << ",\"" << poly << "\"\n";
        }
    } else if (format == "latex") {
        os << "% " << title << "\n\\begin{tabular}{ll}\n";
        for (const auto& [label, poly] : rows) {
            os << "  " << label << " & $" << latex_poly(poly) << "$ \\\\\n";
        }
        os << "\\end{tabular}\n";
    } else {  // pretty
        os << title << "\n";
        for (const auto& [label, poly] : rows) {
            os << "  " << label << ": " << poly << "\n";
        }
    }
    return os.str();
}

TruncatedQPoly open_poly(int n, const PartitionLabel& twist) {
    return mcount::closed_count(n, twist) - mcount::boundary_poly(n, twist);
}

TruncatedQPoly space_poly(const std::string& space, int n,
                          const PartitionLabel& twist) {
    if (space == "closed") return mcount::closed_count(n, twist);
    if (space == "open") return open_poly(n, twist);
    if (space == "boundary") return mcount::boundary_poly(n, twist);
    // hyperelliptic
    return twist == PartitionLabel::all_ones(n)
               ? mcount::hyperelliptic_count(4, n)
               : mcount::hyperelliptic_equivariant(4, twist);
}

std::string partition_label_str(const PartitionLabel& p) {
    const std::string s = p.to_string();
    return s.empty() ? "-" : s;
}

// ---------------------------------------------------------------- tables --

struct TablesOpts {
    CommonOpts common;
    std::string space = "closed";
    int marked = -1;  // -1 = all 0..3
    std::string twist;
    bool equivariant = false;
    bool betti = false;
};

std::string tables_report(const TablesOpts& opts) {
    Json j;
    j["space"] = opts.space;
    std::vector<std::pair<std::string, std::string>> rows;

    if (opts.betti) {
        const auto betti =
            mcount::betti_poincare_poly(mcount::closed_count(
                opts.marked < 0 ? 0 : opts.marked,
                PartitionLabel::all_ones(opts.marked < 0 ? 0 : opts.marked)));
        std::string s = betti.to_string();
        for (auto& c : s) {
            if (c == 'q') c = 't';
        }
        j["marked"] = opts.marked < 0 ? 0 : opts.marked;
        j["betti"] = s;
        rows.push_back({"betti", s});
        return render_rows("Betti Poincare polynomial", rows, opts.common.format, j);
    }

    if (opts.equivariant) {
        const int n = opts.marked;
        if (n != 2 && n != 3) {
            throw CLI::ValidationError("--equivariant", "requires --marked 2 or 3");
        }
        mcount::SchurVector v(n);
        if (opts.space == "closed") {
            v = mcount::equivariant_closed_and_open(n).closed;
        } else if (opts.space == "open") {
            v = mcount::equivariant_closed_and_open(n).open;
        } else if (opts.space == "boundary") {
            v = mcount::BoundaryData::get().equivariant.at(n);
        } else {
            v = mcount::hyperelliptic_equivariant_vector(n);
        }
        j["marked"] = n;
        Json terms = Json::array();
        for (const auto& [lambda, poly] : v.terms()) {
            terms.push_back({{"lambda", lambda.to_string()},
                             {"coefficient", poly.to_string()}});
            rows.push_back({"s_" + lambda.to_string(), poly.to_string()});
        }
        j["schur"] = terms;
        return render_rows("Equivariant " + opts.space + " count, n = " +
                               std::to_string(n),
                           rows, opts.common.format, j);
    }

    Json out_rows = Json::array();
    std::vector<int> ns;
    if (opts.marked >= 0) {
        ns.push_back(opts.marked);
    } else {
        ns = {0, 1, 2, 3};
    }
    for (int n : ns) {
        const PartitionLabel twist =
            opts.twist.empty() ? PartitionLabel::all_ones(n) : parse_twist(opts.twist);
        const auto poly = space_poly(opts.space, n, twist);
        Json row;
        row["marked"] = n;
        if (!opts.twist.empty()) row["twist"] = twist.to_string();
        row["count"] = poly.to_string();
        out_rows.push_back(row);
        rows.push_back({"n=" + std::to_string(n) +
                            (opts.twist.empty() ? "" : " twist=" + twist.to_string()),
                        poly.to_string()});
    }
    j["rows"] = out_rows;
    return render_rows("Point counts: " + opts.space, rows, opts.common.format, j);
}

// ---------------------------------------------------------- local-systems --

std::string local_systems_report(const CommonOpts& common) {
    const std::vector<PartitionLabel> lambdas = {
        PartitionLabel({1}),       PartitionLabel({2}),    PartitionLabel({1, 1}),
        PartitionLabel({3}),       PartitionLabel({2, 1}), PartitionLabel({1, 1, 1})};
    Json j;
    Json out_rows = Json::array();
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& lambda : lambdas) {
        const auto trace = mcount::trace_on_euler(lambda);
        out_rows.push_back(
            {{"lambda", lambda.to_string()}, {"trace", trace.to_string()}});
        rows.push_back({"V_" + lambda.to_string(), trace.to_string()});
    }
    j["rows"] = out_rows;
    return render_rows("Traces on H*_c(M_4, V_lambda)", rows, common.format, j);
}

// ------------------------------------------------------------- verifiers --

struct CheckList {
    Json checks = Json::array();
    bool all_match = true;

    void add(const std::string& name, const std::string& expected,
             const std::string& actual) {
        const bool match = expected == actual;
        checks.push_back({{"check", name},
                          {"expected", expected},
                          {"actual", actual},
                          {"match", match}});
        all_match = all_match && match;
    }
};

std::string render_checks(const std::string& title, Json j, const CheckList& list,
                          const CommonOpts& common) {
    j["checks"] = list.checks;
    j["all_match"] = list.all_match;
    if (common.format == "json") return json_text(j);
    std::ostringstream os;
    if (common.format == "csv") {
        os << "check,expected,actual,match\n";
        for (const auto& c : list.checks) {
            os << c["check"].get<std::string>() << ",\""
               << c["expected"].get<std::string>() << "\",\""
               << c["actual"].get<std::string>() << "\","
               << (c["match"].get<bool>() ? "true" : "false") << "\n";
        }
    } else {
        os << title << "\n";
        for (const auto& c : list.checks) {
            os << "  [" << (c["match"].get<bool>() ? "ok" : "FAIL") << "] "
               << c["check"].get<std::string>() << ": expected "
               << c["expected"].get<std::string>() << ", got "
               << c["actual"].get<std::string>() << "\n";
        }
        os << (list.all_match ? "all checks passed" : "MISMATCH") << "\n";
    }
    return os.str();
}

struct VerifySieveOpts {
    CommonOpts common;
    std::string surface;
    std::int64_t q = 2;
    int marked = 0;
    std::string twist;
    int d = -1;  // -1 = all tabulated d
};

int verify_sieve(const VerifySieveOpts& opts) {
    const auto kind = mcount::quadric_kind_from_string(opts.surface);
    const PartitionLabel twist = opts.twist.empty()
                                     ? PartitionLabel::all_ones(opts.marked)
                                     : parse_twist(opts.twist);
    const auto family = mcount::FamilySpec::twisted(kind, twist);
    const int threads = resolve_threads(opts.common);

    CheckList list;
    Json skipped = Json::array();
    for (int d = 0; d <= 3; ++d) {
        if (opts.d >= 0 && d != opts.d) continue;
        TruncatedQPoly symbolic;
        try {
            symbolic = mcount::sieve_term_symbolic({family, d});
        } catch (const std::out_of_range&) {
            continue;  // not tabulated
        }
        const BigInt numeric = mcount::sieve_term_numeric({family, d}, opts.q, threads);
        if (!symbolic.exact()) {
            // No full closed form: record the numeric value for regression use.
            skipped.push_back({{"d", d},
                               {"numeric", numeric.str()},
                               {"symbolic", symbolic.to_string()}});
            continue;
        }
        list.add("S_" + std::to_string(d), rational_str(symbolic.evaluate(opts.q)),
                 numeric.str());
    }
    Json j;
    j["surface"] = opts.surface;
    j["q"] = opts.q;
    j["twist"] = twist.to_string();
    if (!skipped.empty()) j["truncated_rows"] = skipped;
    emit(render_checks("Sieve oracle vs closed forms", j, list, opts.common),
         opts.common);
    return list.all_match ? kExitOk : kExitMismatch;
}

struct VerifyHypOpts {
    CommonOpts common;
    std::int64_t q = 3;
};

int verify_hyperelliptic(const VerifyHypOpts& opts) {
    const int threads = resolve_threads(opts.common);
    CheckList list;
    const Rational q(opts.q);

    const BigInt q10 = boost::multiprecision::pow(BigInt(opts.q), 10);
    const BigInt q8 = boost::multiprecision::pow(BigInt(opts.q), 8);
    const BigInt expected_count = (BigInt(opts.q) - 1) * (q10 - q8);
    list.add("polynomial_census_size", expected_count.str(),
             mcount::census_polynomial_count(4, opts.q).str());

    const int k_max = opts.q <= 3 ? 3 : 2;
    const auto moments = mcount::census_moments(4, opts.q, k_max, threads);
    list.add("moment_k0", rational_str(mcount::hyperelliptic_count(4, 0).evaluate(q)),
             rational_str(moments[0]));
    list.add("moment_k1", "0", rational_str(moments[1]));
    list.add("moment_k2", rational_str(q * q * q * q * q * q * q * q - 1),
             rational_str(moments[2]));
    if (k_max >= 3) list.add("moment_k3", "0", rational_str(moments[3]));

    if (opts.q == 3) {
        const auto tw = mcount::census_twisted_counts(4, opts.q, threads);
        const auto table = mcount::HyperellipticTable::make(4);
        for (const auto& [twist, poly] : table.entries) {
            list.add("twisted_" + partition_label_str(twist),
                     rational_str(poly.evaluate(q)),
                     rational_str(tw.at(twist)));
        }
    }
    Json j;
    j["q"] = opts.q;
    emit(render_checks("Hyperelliptic census vs closed forms", j, list, opts.common),
         opts.common);
    return list.all_match ? kExitOk : kExitMismatch;
}

struct VerifyQuadOpts {
    CommonOpts common;
    std::int64_t q = 2;
};

int verify_quadruples(const VerifyQuadOpts& opts) {
    const BigInt q(opts.q);
    const BigInt expected = (q + 1) * (q + 1) * q * q * (q - 1) * (q - 1);
    const BigInt got = mcount::signed_general_position_quadruples(opts.q);

    // Unconstrained signed 4-tuple count: s_4 of the split quadric, = q^4.
    BigInt signed_all = 0;
    for (const auto& lambda : mcount::partitions_of(4)) {
        const int sign = lambda.length() % 2 ? -1 : 1;
        const auto configs =
            mcount::frobenius_orbit_configs(mcount::QuadricKind::split, opts.q, lambda);
        signed_all += BigInt(sign) * BigInt(configs.size());
    }

    CheckList list;
    list.add("signed_general_position", expected.str(), got.str());
    list.add("signed_unconstrained", BigInt(q * q * q * q).str(), signed_all.str());
    Json j;
    j["q"] = opts.q;
    j["signed_general_position"] = got.str();
    j["expected"] = expected.str();
    j["match"] = got == expected;
    emit(render_checks("Signed general-position quadruples", j, list, opts.common),
         opts.common);
    return list.all_match ? kExitOk : kExitMismatch;
}

// --------------------------------------------------------------- selftest --

struct SelftestOpts {
    CommonOpts common;
    std::string golden_dir = "golden";
};

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) return std::nullopt;
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

int selftest(const SelftestOpts& opts) {
    CheckList list;
    const int threads = resolve_threads(opts.common);

    // Byte-wise golden comparisons of the canonical JSON reports.
    const auto golden_check = [&](const std::string& name,
                                  const std::string& produced) {
        const auto want = read_file(opts.golden_dir + "/" + name);
        list.add("golden_" + name, want ? "identical" : "file " + name + " present",
                 want ? (*want == produced ? "identical" : "DIFFERS") : "missing");
    };
    {
        TablesOpts t;
        t.space = "closed";
        golden_check("tables_closed.json", tables_report(t));
        t.space = "open";
        golden_check("tables_open.json", tables_report(t));
        for (int n : {2, 3}) {
            for (const std::string space : {"closed", "open"}) {
                TablesOpts e;
                e.space = space;
                e.marked = n;
                e.equivariant = true;
                golden_check("equivariant_" + space + "_n" + std::to_string(n) +
                                 ".json",
                             tables_report(e));
            }
        }
        CommonOpts plain;
        golden_check("local_systems.json", local_systems_report(plain));
        TablesOpts b;
        b.betti = true;
        golden_check("betti.json", tables_report(b));
    }

    // Quadruple count at q = 2.
    list.add("quadruples_q2", "36",
             mcount::signed_general_position_quadruples(2).str());

    // Sieve oracle, cone family, q = 2, unmarked: every tabulated exact row.
    for (int d = 0; d <= 3; ++d) {
        const mcount::SieveTermKey key{
            mcount::FamilySpec::untwisted(mcount::QuadricKind::cone, 0), d};
        const auto symbolic = mcount::sieve_term_symbolic(key);
        list.add("sieve_cone_q2_S" + std::to_string(d),
                 rational_str(symbolic.evaluate(2)),
                 mcount::sieve_term_numeric(key, 2, threads).str());
    }

    // Hyperelliptic census at q = 3.
    const auto tw = mcount::census_twisted_counts(4, 3, threads);
    for (const auto& [twist, poly] : mcount::HyperellipticTable::make(4).entries) {
        list.add("hyperelliptic_q3_" + partition_label_str(twist),
                 rational_str(poly.evaluate(3)), rational_str(tw.at(twist)));
    }

    // Inverse zeta coefficients of proper building blocks sum to zero.
    for (const std::string name : {"point", "P1", "Qnsp", "Qspl"}) {
        const auto space = mcount::named_space(name);
        const auto z = mcount::inverse_zeta_coeffs(space, 2 * space.dimension + 2);
        TruncatedQPoly total;
        for (const auto& c : z.coeffs) total = total + c;
        list.add("zeta_vanishing_" + name, "0", total.to_string());
    }

    Json j;
    j["golden_dir"] = opts.golden_dir;
    emit(render_checks("Selftest", j, list, opts.common), opts.common);
    return list.all_match ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Point-count tables for moduli of genus-4 curves over finite fields"};
    app.require_subcommand(1);

    TablesOpts tables_opts;
    auto* tables = app.add_subcommand("tables", "Emit point-count tables");
    tables->add_option("--space", tables_opts.space, "Which count to emit")
        ->check(CLI::IsMember({"closed", "open", "boundary", "hyperelliptic"}));
    tables->add_option("--marked,--n,-n", tables_opts.marked, "Marked points (0..3)")
        ->check(CLI::Range(0, 3));
    tables->add_option("--twist", tables_opts.twist,
                       "Twist partition, comma separated (e.g. 2,1)");
    tables->add_flag("--equivariant", tables_opts.equivariant,
                     "Emit the Schur vector (marked = 2 or 3)");
    tables->add_flag("--betti", tables_opts.betti,
                     "Emit the Betti Poincare polynomial of the closed space");
    add_common(tables, tables_opts.common);

    CommonOpts ls_common;
    auto* ls = app.add_subcommand("local-systems",
                                  "Traces on H*_c(M_4, V_lambda), |lambda| <= 3");
    add_common(ls, ls_common);

    VerifySieveOpts vs_opts;
    auto* vs = app.add_subcommand("verify-sieve",
                                  "Numeric sieve oracle vs closed forms");
    vs->add_option("--surface", vs_opts.surface, "cone | nonsplit | split")
        ->required()
        ->check(CLI::IsMember({"cone", "nonsplit", "split"}));
    vs->add_option("--q", vs_opts.q, "Field size (2 or 3)")->required();
    vs->add_option("--marked,--n,-n", vs_opts.marked, "Marked points (0..3)")
        ->check(CLI::Range(0, 3));
    vs->add_option("--twist", vs_opts.twist, "Twist partition (overrides --marked)");
    vs->add_option("--d", vs_opts.d, "Single sieve depth (default: all)")
        ->check(CLI::Range(0, 3));
    add_common(vs, vs_opts.common);

    VerifyHypOpts vh_opts;
    auto* vh = app.add_subcommand("verify-hyperelliptic",
                                  "Brute-force census vs closed forms");
    vh->add_option("--q", vh_opts.q, "Odd field size (3 or 5)");
    add_common(vh, vh_opts.common);

    VerifyQuadOpts vq_opts;
    auto* vq = app.add_subcommand("verify-quadruples",
                                  "Signed general-position quadruple count");
    vq->add_option("--q", vq_opts.q, "Field size (2 or 3)");
    add_common(vq, vq_opts.common);

    SelftestOpts st_opts;
    auto* st = app.add_subcommand("selftest", "Deterministic aggregate verification");
    st->add_option("--golden", st_opts.golden_dir, "Golden file directory");
    add_common(st, st_opts.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (tables->parsed()) {
            emit(tables_report(tables_opts), tables_opts.common);
            return kExitOk;
        }
        if (ls->parsed()) {
            emit(local_systems_report(ls_common), ls_common);
            return kExitOk;
        }
        if (vs->parsed()) return verify_sieve(vs_opts);
        if (vh->parsed()) return verify_hyperelliptic(vh_opts);
        if (vq->parsed()) return verify_quadruples(vq_opts);
        if (st->parsed()) return selftest(st_opts);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
