// appell: compute Appell family sequences and polynomials, certify them
// against independent oracles, and verify the mod-p congruences on grids.
//
// Exit codes: 0 all checks pass, 1 counterexample or oracle mismatch,
// 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "appell/certify.hpp"
#include "appell/congruence.hpp"
#include "appell/families.hpp"
#include "appell/golden.hpp"
#include "appell/grid.hpp"
#include "appell/report.hpp"

namespace {

using namespace appell;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::vector<std::string> families;
    std::vector<unsigned> rs{0, 1, 2};
    std::vector<std::int64_t> primes{3, 5, 7};
    long n_min = 0;
    long n_max = 20;
    long m_min = 0;
    long m_max = 3;
    long s_min = 1;
    long s_max = 2;
    std::size_t n = 0;
    std::optional<long> force_t;
    std::uint64_t seed = 1;
    unsigned count = 25;
    int jobs = 0;
    unsigned digit_places = 2;
    std::optional<unsigned> digit_max;
    std::vector<long> q_points{2, 3, 5, -1};
    std::size_t n_probe = 200;
    bool general = false;
    std::optional<std::size_t> perturb_index;
    long perturb_delta = 1;
    std::string format;
    std::string output;
    bool verbose = false;
    std::string golden_dir = "golden";
    bool write = false;
};

std::string default_format() {
    const char* env = std::getenv("APPELL_FORMAT");
    return env && *env ? env : "text";
}

std::vector<FamilyDescriptor> expand_families(const Options& o, bool required) {
    std::vector<std::string> names = o.families;
    if (names.empty()) {
        if (required) throw UsageError("--family is required");
        names = {"all"};
    }
    std::vector<FamilyDescriptor> out;
    for (const auto& name : names) {
        std::vector<FamilyKind> kinds;
        if (name == "all") {
            kinds = all_kinds();
        } else if (auto k = parse_kind(name)) {
            kinds = {*k};
        } else {
            throw UsageError("unknown family '" + name + "'");
        }
        for (auto kind : kinds) {
            if (FamilyDescriptor::make(kind).has_r()) {
                for (unsigned r : o.rs) out.push_back(FamilyDescriptor::make(kind, r));
            } else {
                out.push_back(FamilyDescriptor::make(kind));
            }
        }
    }
    return out;
}

FamilyDescriptor single_family(const Options& o) {
    if (o.families.size() != 1 || o.families[0] == "all") throw UsageError("exactly one --family is required");
    auto kind = parse_kind(o.families[0]);
    if (!kind) throw UsageError("unknown family '" + o.families[0] + "'");
    const unsigned r = o.rs.empty() ? 0 : o.rs.front();
    if (!FamilyDescriptor::make(*kind).has_r()) return FamilyDescriptor::make(*kind);
    return FamilyDescriptor::make(*kind, r);
}

void emit(const Options& o, const std::string& text) {
    if (o.output.empty() || o.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + o.output);
}

std::string format_of(const Options& o) {
    const std::string f = o.format.empty() ? default_format() : o.format;
    if (f != "text" && f != "json" && f != "csv") throw UsageError("unknown format '" + f + "'");
    return f;
}

// --- seq / poly ----------------------------------------------------------------

int cmd_seq(const Options& o) {
    const auto family = single_family(o);
    if (o.n_max < 0) throw UsageError("--n-max must be >= 0");
    const auto moments = make_umbra(family)->moments(static_cast<std::size_t>(o.n_max));
    const auto fmt = format_of(o);
    std::ostringstream os;
    if (fmt == "json") {
        nlohmann::json j;
        j["family"] = family.name();
        j["r"] = family.r;
        j["moments"] = nlohmann::json::array();
        for (const auto& a : moments) j["moments"].push_back(a.get_str());
        os << j.dump(2) << '\n';
    } else if (fmt == "csv") {
        os << "n,value\n";
        for (std::size_t n = 0; n < moments.size(); ++n) os << n << ',' << moments[n].get_str() << '\n';
    } else {
        for (std::size_t n = 0; n < moments.size(); ++n) os << (n ? " " : "") << moments[n].get_str();
        os << '\n';
    }
    emit(o, os.str());
    return kExitPass;
}

int cmd_poly(const Options& o) {
    const auto family = single_family(o);
    const IntPoly f = appell_poly(*make_umbra(family), o.n);
    const auto fmt = format_of(o);
    std::ostringstream os;
    if (fmt == "json") {
        nlohmann::json j;
        j["family"] = family.name();
        j["r"] = family.r;
        j["n"] = o.n;
        j["coeffs"] = to_decimal_strings(f);
        j["text"] = to_string(f);
        os << j.dump(2) << '\n';
    } else if (fmt == "csv") {
        os << "degree,coefficient\n";
        auto c = f.coeffs();
        for (std::size_t k = 0; k < c.size(); ++k) os << k << ',' << c[k].get_str() << '\n';
    } else {
        os << to_string(f) << '\n' << nlohmann::json(to_decimal_strings(f)).dump() << '\n';
    }
    emit(o, os.str());
    return kExitPass;
}

// --- verify ----------------------------------------------------------------------

GridSpec base_grid(const Options& o, CheckKind kind) {
    GridSpec g;
    g.kind = kind;
    g.primes = o.primes;
    g.n = {o.n_min, o.n_max};
    g.m = {o.m_min, o.m_max};
    g.s = {o.s_min, o.s_max};
    if (g.s.lo < 1) throw UsageError("--s-min must be >= 1");
    if (g.n.lo < 0 || g.m.lo < 0) throw UsageError("ranges must be nonnegative");
    g.digit_places = o.digit_places;
    g.digit_max = o.digit_max;
    g.q_points = o.q_points;
    g.random_count = o.count;
    g.seed = o.seed;
    g.n_probe = o.n_probe;
    g.forced_t = o.force_t;
    if (o.perturb_index) g.perturb = GridSpec::Perturbation{*o.perturb_index, o.perturb_delta};
    g.jobs = o.jobs;
    return g;
}

int finish_report(const Options& o, const Report& report) {
    const auto fmt = format_of(o);
    if (fmt == "json") {
        emit(o, report_json_text(report));
    } else if (fmt == "csv") {
        emit(o, report_csv(report));
    } else {
        emit(o, report_text(report, o.verbose));
    }
    // Counterexamples always reach the terminal, whatever the format.
    if (fmt != "text" || (!o.output.empty() && o.output != "-")) {
        if (const auto* f = report.first_failure()) {
            Report one;
            one.seed = report.seed;
            one.results.push_back(*f);
            std::cerr << report_text(one);
        }
    }
    return report.failed() == 0 ? kExitPass : kExitFail;
}

int cmd_verify(const Options& o, const std::string& what) {
    Report report;
    if (what == "theorem") {
        auto g = base_grid(o, o.general ? CheckKind::theorem_general : CheckKind::theorem_power);
        g.families = expand_families(o, true);
        report = run_grid(g);
    } else if (what == "digits") {
        auto g = base_grid(o, CheckKind::digits);
        g.families = expand_families(o, true);
        report = run_grid(g);
    } else if (what == "hypothesis") {
        auto g = base_grid(o, CheckKind::hypothesis);
        g.families = expand_families(o, false);
        report = run_grid(g);
    } else if (what == "identity") {
        auto g = base_grid(o, CheckKind::identity);
        g.n.lo = std::max(3L, o.n_min);
        report = run_grid(g);
    } else if (what == "lemma") {
        report = run_grid(base_grid(o, CheckKind::lemma));
    } else if (what == "specials") {
        auto families = o.families.empty() ? std::vector<FamilyDescriptor>{} : expand_families(o, false);
        if (families.empty()) {
            families.push_back(FamilyDescriptor::make(FamilyKind::derangement));
            for (unsigned r : o.rs) {
                if (r > 0) families.push_back(FamilyDescriptor::make(FamilyKind::r_derangement, r));
            }
        }
        auto g = base_grid(o, CheckKind::derangement_specials);
        g.families = families;
        report = run_grid(g);
        g.kind = CheckKind::r_derangement_specials;
        auto more = run_grid(g);
        std::move(more.results.begin(), more.results.end(), std::back_inserter(report.results));
    } else {
        throw UsageError("unknown verify target '" + what + "'");
    }
    return finish_report(o, report);
}

// --- discover-t / oracle / golden-regen ------------------------------------------

int cmd_discover_t(const Options& o) {
    const auto family = single_family(o);
    const auto u = make_umbra(family);
    const auto fmt = format_of(o);
    nlohmann::json rows = nlohmann::json::array();
    std::ostringstream os;
    bool all_found = true;
    for (auto raw : o.primes) {
        const OddPrime p(raw);
        const auto d = discover_t(*u, p, o.n_probe);
        nlohmann::json row{{"p", p.value()}};
        if (d.t) {
            const Integer s = signed_residue(*d.t, p);
            row["t"] = s.get_str();
            row["canonical"] = d.t->get_str();
            os << "p=" << p.value() << ": " << s.get_str() << " (canonical " << d.t->get_str() << ")\n";
        } else {
            all_found = false;
            row["t"] = nullptr;
            row["first_violation"] = *d.first_violation;
            os << "p=" << p.value() << ": none (first violation at n=" << *d.first_violation << ")\n";
        }
        rows.push_back(std::move(row));
    }
    if (fmt == "json") {
        nlohmann::json j{{"family", family.name()}, {"r", family.r}, {"n_probe", o.n_probe}, {"results", rows}};
        emit(o, j.dump(2) + "\n");
    } else {
        emit(o, os.str());
    }
    return all_found ? kExitPass : kExitFail;
}

int cmd_oracle(const Options& o) {
    const auto families = expand_families(o, true);
    if (o.n_max < 0) throw UsageError("--n-max must be >= 0");
    std::ostringstream os;
    nlohmann::json rows = nlohmann::json::array();
    bool ok = true;
    for (const auto& family : families) {
        for (const auto& c : certify_family(family, static_cast<std::size_t>(o.n_max))) {
            ok = ok && c.agree;
            os << (c.agree ? "agree     " : "DISAGREE  ") << family.name();
            if (family.has_r()) os << " r=" << family.r;
            os << "  " << c.name << "  (" << c.compared << " compared)";
            if (!c.agree) os << "  " << c.detail;
            os << '\n';
            rows.push_back({{"family", family.name()}, {"r", family.r}, {"oracle", c.name},
                            {"compared", c.compared}, {"agree", c.agree}, {"detail", c.detail}});
        }
    }
    if (format_of(o) == "json") {
        emit(o, nlohmann::json{{"n_max", o.n_max}, {"agree", ok}, {"results", rows}}.dump(2) + "\n");
    } else {
        os << (ok ? "all oracles agree\n" : "oracle disagreement\n");
        emit(o, os.str());
    }
    return ok ? kExitPass : kExitFail;
}

int cmd_golden_regen(const Options& o) {
    std::vector<GoldenChange> changes;
    try {
        changes = regenerate_golden(o.golden_dir, o.write);
    } catch (const std::runtime_error& e) {
        std::cerr << "golden-regen: " << e.what() << '\n';
        return kExitFail;
    }
    std::ostringstream os;
    std::size_t differing = 0;
    for (const auto& c : changes) {
        const char* state = c.state == GoldenChange::State::unchanged ? "unchanged"
                            : c.state == GoldenChange::State::changed ? "changed"
                                                                      : "new";
        if (c.state != GoldenChange::State::unchanged) ++differing;
        os << state << "  " << c.file << '\n';
    }
    os << differing << " of " << changes.size() << " files differ";
    os << (o.write ? (differing ? ", rewritten" : "") : (differing ? "; rerun with --write to update" : "")) << '\n';
    emit(o, os.str());
    return kExitPass;
}

// --- flag wiring -------------------------------------------------------------------

void add_family_flags(CLI::App* app, Options& o) {
    app->add_option("--family", o.families, "derangement, r-derangement, modified-lah, modified-r-lah, or all")
        ->delimiter(',');
    app->add_option("--r", o.rs, "r parameter(s) for r-kinds")->delimiter(',');
}

void add_output_flags(CLI::App* app, Options& o) {
    app->add_option("--format", o.format, "text, json or csv (default: $APPELL_FORMAT or text)");
    app->add_option("--output,-o", o.output, "write to a file instead of standard output");
}

void add_grid_flags(CLI::App* app, Options& o) {
    add_family_flags(app, o);
    add_output_flags(app, o);
    app->add_option("--p", o.primes, "odd primes")->delimiter(',');
    app->add_option("--n-min", o.n_min);
    app->add_option("--n-max", o.n_max);
    app->add_option("--m-min", o.m_min);
    app->add_option("--m-max", o.m_max);
    app->add_option("--s-min", o.s_min);
    app->add_option("--s-max", o.s_max);
    app->add_option("--force-t", o.force_t, "replace every family's t");
    app->add_option("--seed", o.seed);
    app->add_option("--count", o.count, "random polynomials per grid point (theorem --general, lemma)");
    app->add_option("--jobs,-j", o.jobs, "worker threads (0 = all cores)");
    app->add_option("--digit-places", o.digit_places, "digits after m_0");
    app->add_option("--digit-max", o.digit_max, "largest digit (default p-1)");
    app->add_option("--q", o.q_points, "evaluation points for the Fermat special case")->delimiter(',');
    app->add_option("--n-probe", o.n_probe);
    app->add_flag("--general", o.general, "theorem with random f(A+x) instead of A_n(x)");
    app->add_option("--perturb-index", o.perturb_index, "negative control: shift moment A_k");
    app->add_option("--perturb-delta", o.perturb_delta);
    app->add_flag("--verbose,-v", o.verbose, "list passing checks too");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Appell polynomial congruences: sequences, oracles and mod-p verification"};
    app.require_subcommand(1);
    Options o;

    auto* seq = app.add_subcommand("seq", "print moments A_0..A_n");
    add_family_flags(seq, o);
    add_output_flags(seq, o);
    seq->add_option("--n-max", o.n_max)->required();

    auto* poly = app.add_subcommand("poly", "print the polynomial A_n(x)");
    add_family_flags(poly, o);
    add_output_flags(poly, o);
    poly->add_option("--n", o.n)->required();

    auto* verify = app.add_subcommand("verify", "run a verification grid");
    verify->require_subcommand(1);
    std::string target;
    for (const char* name : {"theorem", "digits", "identity", "lemma", "specials", "hypothesis"}) {
        auto* sub = verify->add_subcommand(name);
        add_grid_flags(sub, o);
        sub->callback([&target, name] { target = name; });
    }

    auto* discover = app.add_subcommand("discover-t", "find t with A_{n+p} = t A_n (mod p)");
    add_family_flags(discover, o);
    add_output_flags(discover, o);
    discover->add_option("--p", o.primes)->delimiter(',');
    discover->add_option("--n-probe", o.n_probe);

    auto* oracle = app.add_subcommand("oracle", "certify generators against independent oracles");
    add_family_flags(oracle, o);
    add_output_flags(oracle, o);
    oracle->add_option("--n-max", o.n_max);

    auto* golden = app.add_subcommand("golden-regen", "compare or rewrite golden files");
    add_output_flags(golden, o);
    golden->add_option("--dir", o.golden_dir);
    golden->add_flag("--write", o.write, "rewrite files that differ");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*seq) return cmd_seq(o);
        if (*poly) return cmd_poly(o);
        if (*verify) return cmd_verify(o, target);
        if (*discover) return cmd_discover_t(o);
        if (*oracle) return cmd_oracle(o);
        if (*golden) return cmd_golden_regen(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}
