#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>

#include "cfx/json_io.hpp"
#include "cfx/series_expansions.hpp"
#include "cfx/theta_transforms.hpp"
#include "cfx/verify.hpp"

namespace cfx::cli {

namespace {

using cfx::json::json;

struct Options {
    std::string kind;
    std::string x, y;
    std::string cf;
    std::string preset;
    std::string f;
    std::string x1;
    std::string h;
    std::size_t n = 0;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    bool json = false;
};

// Raised for bad flag values; mapped to exit code 2.
struct UsageError : Error {
    using Error::Error;
};

std::vector<Rational> parse_list(const std::string& flag, const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    std::size_t index = 0;
    while (std::getline(ss, item, ',')) {
        ++index;
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        try {
            out.push_back(Rational::parse(item));
        } catch (const Error& e) {
            throw UsageError(flag + " entry " + std::to_string(index) + ": " + e.what());
        }
        if (out.back().is_zero()) throw UsageError(flag + " entry " + std::to_string(index) + " is zero");
    }
    if (out.empty()) throw UsageError(flag + " needs at least one entry");
    return out;
}

Integer parse_flag_integer(const std::string& flag, const std::string& text) {
    if (text.empty()) throw UsageError(flag + " is required");
    try {
        return parse_integer(text);
    } catch (const Error& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

BivarPoly parse_flag_poly(const std::string& text) {
    if (text.empty()) throw UsageError("--f is required");
    try {
        if (text.front() == '[') return cfx::json::poly_from_json(json::parse(text));
        return BivarPoly::parse(text);
    } catch (const json::exception& e) {
        throw UsageError(std::string("--f: ") + e.what());
    } catch (const Error& e) {
        throw UsageError(std::string("--f: ") + e.what());
    }
}

void require_n(const Options& o, std::size_t minimum) {
    if (o.n < minimum) throw UsageError("--n must be >= " + std::to_string(minimum) + " (got " + std::to_string(o.n) + ")");
}

void print_rows(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& r : rows) {
        width.resize(std::max(width.size(), r.size()));
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
        }
        out << line << '\n';
    }
}

void print_cf(std::ostream& out, const GeneralizedCF& cf) {
    std::vector<std::vector<std::string>> rows = {{"k", "a_k", "b_k"}};
    for (std::size_t k = 1; k <= cf.size(); ++k) rows.push_back({std::to_string(k), cf.a(k).to_string(), cf.b(k).to_string()});
    if (!cf.integer_part().is_zero()) out << "integer part " << cf.integer_part() << '\n';
    print_rows(out, rows);
}

void print_fields(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& fields) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [k, v] : fields) rows.push_back({k, v});
    print_rows(out, rows);
}

const char* flag(bool b) { return b ? "true" : "false"; }

int cmd_transform(const Options& o, std::ostream& out) {
    const auto x = parse_list("--x", o.x);
    const auto y = parse_list("--y", o.y);
    if (x.size() != y.size()) {
        throw UsageError("--x has " + std::to_string(x.size()) + " entries but --y has " + std::to_string(y.size()));
    }
    const std::size_t n = x.size();
    const bool varona = o.kind == "varona" || o.kind == "varona-aux";
    if (varona && n < 2) throw UsageError("n ≥ 2 required for " + o.kind + " (got n = " + std::to_string(n) + ")");

    const SumSpec s(x, y);
    const GeneralizedCF cf = o.kind == "euler" ? euler_cf(s)
                             : o.kind == "hone" ? hone_cf(s)
                             : o.kind == "varona" ? varona_cf(s)
                                                  : varona_aux_cf(s);
    const Rational value = eval_cf(cf);
    const Rational oracle = o.kind == "hone" ? sum_sigma(s) : sum_tau(s);
    const bool match = value == oracle;

    if (o.json) {
        out << json{{"transform", o.kind},   {"n", n},
                    {"sum", cfx::json::to_json(s)}, {"cf", cfx::json::to_json(cf)},
                    {"value", value.to_string()}, {"oracle", oracle.to_string()},
                    {"match", match}}
                   .dump(2)
            << '\n';
    } else {
        out << "transform " << o.kind << ", n = " << n << '\n';
        print_cf(out, cf);
        print_fields(out, {{"value", value.to_string()}, {"oracle", oracle.to_string()}, {"match", flag(match)}});
    }
    return match ? kOk : kMismatch;
}

int cmd_invert(const Options& o, std::ostream& out) {
    require_n(o, 1);
    if (o.cf.empty()) throw UsageError("--cf is required");
    GeneralizedCF cf = [&] {
        try {
            return cfx::json::cf_from_json(json::parse(o.cf));
        } catch (const json::exception& e) {
            throw UsageError(std::string("--cf: ") + e.what());
        } catch (const ParseError& e) {
            throw UsageError(std::string("--cf: ") + e.what());
        }
    }();

    std::vector<Rational> terms;
    std::size_t depth = 0;
    if (o.kind == "euler") {
        depth = o.n;
    } else if (o.kind == "hone") {
        depth = 2 * o.n;
    } else {
        depth = 3 * o.n - 1;
    }
    if (depth > cf.size()) {
        throw UsageError("--n " + std::to_string(o.n) + " needs " + std::to_string(depth) + " terms, --cf has " +
                         std::to_string(cf.size()));
    }
    if (o.kind == "euler") {
        terms = cf_to_sum_euler(cf, o.n);
    } else if (o.kind == "hone") {
        terms = cf_to_sum_hone(cf, o.n);
    } else {
        terms = cf_to_sum_varona(cf, o.n);
    }
    Rational sum = cf.integer_part();
    for (const auto& t : terms) sum += t;
    const Rational value = eval_cf(cf, depth);
    const bool match = sum == value;

    if (o.json) {
        json jt = json::array();
        for (const auto& t : terms) jt.push_back(t.to_string());
        out << json{{"invert", o.kind}, {"n", o.n},   {"depth", depth},
                    {"terms", jt},      {"sum", sum.to_string()}, {"value", value.to_string()},
                    {"match", match}}
                   .dump(2)
            << '\n';
    } else {
        out << "invert " << o.kind << ", n = " << o.n << ", depth " << depth << '\n';
        std::vector<std::vector<std::string>> rows = {{"i", "term"}};
        for (std::size_t i = 0; i < terms.size(); ++i) rows.push_back({std::to_string(i + 1), terms[i].to_string()});
        print_rows(out, rows);
        print_fields(out, {{"sum", sum.to_string()}, {"value", value.to_string()}, {"match", flag(match)}});
    }
    return match ? kOk : kMismatch;
}

int cmd_sequence(const Options& o, std::ostream& out) {
    require_n(o, 1);
    const std::size_t budget = bit_budget_from_env();
    std::optional<PolyRecurrence> rec;
    SequencePrefix seq;
    std::string name;
    if (!o.preset.empty()) {
        if (!o.f.empty()) throw UsageError("--preset and --f are exclusive");
        if (o.preset != "a001697") throw UsageError("--preset: unknown preset '" + o.preset + "'");
        rec = a001697_recurrence();
        seq = a001697(o.n, budget);
        name = "A001697";
    } else {
        rec = PolyRecurrence::stationary(parse_flag_poly(o.f), parse_flag_integer("--x1", o.x1));
        seq = generate(*rec, o.n, budget);
        name = rec->description();
    }
    const auto report = check_invariants(seq, *rec);
    const auto* bad = report.first_failure();

    if (o.json) {
        json j = cfx::json::sequence_to_json(name, seq);
        j["invariants"] = {{"checks", report.checks.size()}, {"passed", report.all_passed()}};
        if (bad != nullptr) j["invariants"]["first_failure"] = {{"name", bad->name}, {"index", bad->index}};
        out << j.dump(2) << '\n';
    } else {
        out << name << '\n';
        std::vector<std::vector<std::string>> rows = {{"n", "x_n"}};
        for (std::size_t k = 0; k <= seq.last_index(); ++k) rows.push_back({std::to_string(k), to_string(seq[k])});
        print_rows(out, rows);
        out << "invariants: " << report.checks.size() << " checks, "
            << (bad == nullptr ? std::string("all passed")
                               : "first failure " + bad->name + " at index " + std::to_string(bad->index))
            << '\n';
    }
    return bad == nullptr ? kOk : kMismatch;
}

int cmd_series(const Options& o, std::ostream& out, std::ostream& err) {
    const BivarPoly f = parse_flag_poly(o.f);
    const Integer x1 = parse_flag_integer("--x1", o.x1);
    const Integer h = parse_flag_integer("--h", o.h);
    if (sgn(x1) <= 0) throw UsageError("--x1 must be positive");
    if (sgn(h) <= 0) throw UsageError("--h must be positive");
    const bool t_kind = o.kind == "T" || o.kind == "T-contracted";
    require_n(o, t_kind ? 2 : 1);

    const std::size_t budget = bit_budget_from_env();
    const auto rec = PolyRecurrence::stationary(f, x1);
    const SeriesSpec spec(rec, h, t_kind ? SeriesKind::T : SeriesKind::S, o.n);

    std::string used = o.kind;
    std::string notice;
    if (o.kind == "T") {
        const auto formal = expand_T_formal(spec, budget);
        for (std::size_t j = 6; j <= formal.size(); j += 3) {
            if (formal.b(j).is_zero()) {
                notice = "b_" + std::to_string(j) + " = 0 detected; using T-contracted";
                used = "T-contracted";
                break;
            }
        }
    }
    if (!notice.empty()) err << "notice: " << notice << '\n';

    std::optional<ShiftedExpansion> shifted;
    GeneralizedCF cf = [&] {
        if (used == "S") return expand_S(spec, budget);
        if (used == "T") return expand_T(spec, budget);
        if (used == "T-contracted") return expand_T_contracted(spec, budget);
        shifted = expand_inv_S_shifted(spec, budget);
        return shifted->cf;
    }();

    const ExpansionKind kind = used == "S" ? ExpansionKind::S : used == "invS" ? ExpansionKind::InvS : ExpansionKind::T;
    const std::size_t offset = shifted ? shifted->shift.N : 0;
    const auto seq = generate(rec, offset + o.n, budget);
    const SeriesKind sk = t_kind ? SeriesKind::T : SeriesKind::S;

    // Every truncation m = first..n must match its partial sum. Prefixes of
    // the contracted form are not truncations, so it is rebuilt per m.
    bool verified = true;
    std::size_t first = t_kind ? 2 : 1;
    if (shifted) first = shifted->degenerate_head ? 1 : 0;
    for (std::size_t m = first; m <= o.n && verified; ++m) {
        Rational want = series_partial_sum(seq, h, sk, offset + m);
        if (shifted) want = want.inverse();
        if (used == "T-contracted") {
            verified = eval_cf(expand_T_contracted(SeriesSpec(rec, h, SeriesKind::T, m), budget)) == want;
        } else {
            verified = eval_cf(cf, expansion_depth(kind, m)) == want;
        }
    }
    const Rational partial = series_partial_sum(seq, h, sk, offset + o.n);

    if (o.json) {
        json j = {{"series", used},
                  {"h", to_string(h)},
                  {"x1", to_string(x1)},
                  {"F", cfx::json::to_json(f)},
                  {"truncation", o.n},
                  {"cf", cfx::json::to_json(cf)},
                  {"partial_sum", partial.to_string()},
                  {"verified", verified}};
        if (!notice.empty()) j["notice"] = notice;
        if (shifted) {
            j["value"] = partial.inverse().to_string();
            j["shift"] = {{"N", shifted->shift.N}, {"t", to_string(shifted->shift.t)}};
            j["degenerate_head"] = shifted->degenerate_head;
        }
        out << j.dump(2) << '\n';
    } else {
        out << "series " << used << ", F = " << f.to_string() << ", x1 = " << to_string(x1) << ", h = " << to_string(h)
            << ", truncation " << o.n << '\n';
        print_cf(out, cf);
        std::vector<std::pair<std::string, std::string>> fields = {{"partial_sum", partial.to_string()}};
        if (shifted) {
            fields.push_back({"value", partial.inverse().to_string()});
            fields.push_back({"N", std::to_string(shifted->shift.N)});
            fields.push_back({"t", to_string(shifted->shift.t)});
            fields.push_back({"degenerate_head", flag(shifted->degenerate_head)});
        }
        fields.push_back({"verified", flag(verified)});
        print_fields(out, fields);
    }
    return verified ? kOk : kMismatch;
}

int cmd_verify(const Options& o, std::ostream& out) {
    if (o.trials < 1) throw UsageError("--trials must be >= 1");
    const auto report = run_suite(o.kind, o.trials, o.seed);
    if (o.json) {
        out << json{{"suite", report.suite}, {"trials", report.trials}, {"seed", o.seed},
                    {"passed", report.passed}, {"ok", report.ok()},   {"failures", report.failures}}
                   .dump(2)
            << '\n';
    } else {
        out << "suite " << report.suite << ": " << report.passed << "/" << report.trials << " passed (seed " << o.seed
            << ")\n";
        for (const auto& f : report.failures) out << "  " << f << '\n';
    }
    return report.ok() ? kOk : kMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact sum <-> continued fraction transforms", "cfx"};
    app.require_subcommand(1);

    auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Machine-readable output"); };

    auto* transform = app.add_subcommand("transform", "Sum to continued fraction");
    transform->add_option("kind", o.kind)->required()->check(CLI::IsMember({"euler", "hone", "varona", "varona-aux"}));
    transform->add_option("--x", o.x, "Comma-separated x_1..x_n")->required();
    transform->add_option("--y", o.y, "Comma-separated y_1..y_n")->required();
    json_flag(transform);

    auto* invert = app.add_subcommand("invert", "Continued fraction to sum");
    invert->add_option("kind", o.kind)->required()->check(CLI::IsMember({"euler", "hone", "varona"}));
    invert->add_option("--cf", o.cf, "Fraction as JSON {\"terms\": [[a, b], ...]}")->required();
    invert->add_option("--n", o.n, "Number of blocks")->required();
    json_flag(invert);

    auto* sequence = app.add_subcommand("sequence", "Recurrence sequence prefix x_0..x_n");
    sequence->add_option("--preset", o.preset, "Named sequence (a001697)");
    sequence->add_option("--f", o.f, "Polynomial F, e.g. X, X+Y, or [[1,0,\"1\"]]");
    sequence->add_option("--x1", o.x1, "x_1");
    sequence->add_option("--n", o.n, "Last index")->required();
    json_flag(sequence);

    auto* series = app.add_subcommand("series", "Continued fraction expansion of S, T or 1/S");
    series->set_help_flag("--help", "Print this help message and exit");
    series->add_option("kind", o.kind)->required()->check(CLI::IsMember({"S", "T", "invS", "T-contracted"}));
    series->add_option("--f", o.f, "Polynomial F")->required();
    series->add_option("--x1", o.x1, "x_1")->required();
    series->add_option("--h", o.h, "h")->required();
    series->add_option("--n", o.n, "Number of series terms")->required();
    json_flag(series);

    auto* verify = app.add_subcommand("verify", "Seeded property suite");
    verify->add_option("suite", o.kind)->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--trials", o.trials, "Number of trials");
    verify->add_option("--seed", o.seed, "RNG seed");
    json_flag(verify);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalid;
    }

    try {
        if (transform->parsed()) return cmd_transform(o, out);
        if (invert->parsed()) return cmd_invert(o, out);
        if (sequence->parsed()) {
            if (o.preset.empty() && o.f.empty()) throw UsageError("sequence needs --preset or --f");
            return cmd_sequence(o, out);
        }
        if (series->parsed()) return cmd_series(o, out, err);
        return cmd_verify(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const PreconditionViolated& e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kEngine;
    }
}

}  // namespace cfx::cli
