// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact; the only tolerances are the wall-clock limits on criteria 1 and 2.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "appell/certify.hpp"
#include "appell/congruence.hpp"
#include "appell/grid.hpp"

using namespace appell;

namespace {

constexpr double kHypothesisSeconds = 5.0;
constexpr double kTheoremSeconds = 30.0;
constexpr std::uint64_t kGeneralSeed = 20240601;
constexpr std::uint64_t kLemmaSeed = 1;

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::vector<FamilyDescriptor> families_r012() {
    std::vector<FamilyDescriptor> out;
    for (auto kind : all_kinds()) {
        if (!FamilyDescriptor::make(kind).has_r()) {
            out.push_back(FamilyDescriptor::make(kind));
            continue;
        }
        for (unsigned r = 0; r <= 2; ++r) out.push_back(FamilyDescriptor::make(kind, r));
    }
    return out;
}

std::string describe(const Report& r) {
    std::ostringstream os;
    os << r.passed() << "/" << r.total() << " checks pass";
    if (const auto* f = r.first_failure()) {
        os << "; first failure " << f->check << " " << f->family.name() << " r=" << f->family.r;
        if (!f->error.empty()) os << " (" << f->error << ")";
    }
    return os.str();
}

void merge(Report& into, Report&& more) {
    std::move(more.results.begin(), more.results.end(), std::back_inserter(into.results));
}

Outcome all_pass(const Report& r) { return {r.total() > 0 && r.failed() == 0, describe(r)}; }

int run_cli(const std::string& args) {
    const std::string cmd = std::string(APPELL_CLI) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// -----------------------------------------------------------------------------

Outcome hypothesis() {
    GridSpec g;
    g.kind = CheckKind::hypothesis;
    g.families = families_r012();
    g.primes = {3, 5, 7, 11, 13};
    g.n_probe = 200;
    const auto report = run_grid(g);
    Outcome out = all_pass(report);
    for (const auto& r : report.results) {
        // t_used is the family's expected sign; passing means discover_t found it.
        if (!r.t_used || *r.t_used != r.family.expected_t) out.pass = false;
    }
    return out;
}

Outcome theorem_power() {
    GridSpec g;
    g.kind = CheckKind::theorem_power;
    g.families = families_r012();
    g.primes = {3, 5, 7};
    g.s = {1, 2};
    g.m = {0, 3};
    g.n = {0, 20};
    const auto report = run_grid(g);
    Outcome out = all_pass(report);
    if (report.total() != g.families.size() * 3 * 2 * 4 * 21) out = {false, "grid size mismatch: " + out.detail};
    return out;
}

Outcome theorem_general() {
    GridSpec g;
    g.kind = CheckKind::theorem_general;
    g.families = families_r012();
    g.primes = {3, 5};
    g.s = {1, 2};
    g.m = {1, 2};
    g.random_count = 25;
    g.seed = kGeneralSeed;
    const auto report = run_grid(g);
    Outcome out = all_pass(report);
    out.detail += "; seed " + std::to_string(kGeneralSeed);
    return out;
}

Outcome digits() {
    GridSpec g;
    g.kind = CheckKind::digits;
    g.families = families_r012();
    g.primes = {3, 5};
    g.digit_places = 2;
    const auto report = run_grid(g);
    Outcome out = all_pass(report);
    std::size_t displays = 0, plus = 0;
    for (const auto& r : report.results) {
        if (!r.params.contains("sign")) continue;
        ++displays;
        if (r.params.at("sign") == 1) ++plus;
    }
    if (plus != displays || displays == 0) out.pass = false;
    out.detail += "; m_0 = 0 sign: + in " + std::to_string(plus) + "/" + std::to_string(displays);
    return out;
}

Outcome identity_and_lemma() {
    GridSpec id;
    id.kind = CheckKind::identity;
    id.n = {3, 50};
    auto report = run_grid(id);
    GridSpec lemma;
    lemma.kind = CheckKind::lemma;
    lemma.random_count = 50;
    lemma.seed = kLemmaSeed;
    merge(report, run_grid(lemma));
    Outcome out = all_pass(report);
    if (report.total() != 48 + 50) out.pass = false;
    for (const auto& r : report.results) {
        if (r.check == "lemma" && (!r.input || r.input->degree() < 3 || r.input->degree() > 12)) out.pass = false;
    }
    return out;
}

Outcome specials() {
    GridSpec d;
    d.kind = CheckKind::derangement_specials;
    d.families = {FamilyDescriptor::make(FamilyKind::derangement)};
    d.primes = {3, 5, 7};
    d.s = {1, 2};
    d.m = {0, 3};
    d.n = {0, 20};
    d.q_points = {2, 3, 5, -1};
    d.fermat_n_max = 15;
    d.fermat_m_max = 2;
    auto report = run_grid(d);

    GridSpec c2;
    c2.kind = CheckKind::r_derangement_specials;
    c2.families = {FamilyDescriptor::make(FamilyKind::r_derangement, 1),
                   FamilyDescriptor::make(FamilyKind::r_derangement, 2)};
    c2.primes = {3, 5, 7};
    c2.n = {0, 15};
    merge(report, run_grid(c2));
    return all_pass(report);
}

Outcome oracles() {
    Outcome out;
    std::size_t compared = 0;
    std::vector<FamilyDescriptor> families = {FamilyDescriptor::make(FamilyKind::derangement),
                                              FamilyDescriptor::make(FamilyKind::modified_lah)};
    for (unsigned r = 0; r <= 3; ++r) {
        families.push_back(FamilyDescriptor::make(FamilyKind::r_derangement, r));
        families.push_back(FamilyDescriptor::make(FamilyKind::modified_r_lah, r));
    }
    for (const auto& f : families) {
        for (const auto& c : certify_family(f, 15)) {
            compared += c.compared;
            if (!c.agree || c.compared == 0) {
                out.pass = false;
                if (out.detail.empty()) out.detail = f.name() + " " + c.name + ": " + c.detail;
            }
        }
    }
    if (out.pass) out.detail = std::to_string(compared) + " values compared, all agree";
    return out;
}

Outcome negative_controls() {
    Outcome out;
    std::size_t caught = 0, cases = 0, cli_cases = 0;
    const auto families = families_r012();
    auto grid_for = [](const FamilyDescriptor& f) {
        GridSpec g;
        g.kind = CheckKind::theorem_power;
        g.families = {f};
        g.primes = {3};
        g.s = {1, 1};
        g.m = {1, 1};
        g.n = {0, 20};
        return g;
    };
    auto counts = [&](const Report& r) {
        ++cases;
        const auto* f = r.first_failure();
        if (f && f->lhs && f->rhs && !congruent(*f->lhs, *f->rhs, OddPrime(3))) ++caught;
    };
    auto cli_family = [](const FamilyDescriptor& f) {
        return "--family " + f.name() + (f.has_r() ? " --r " + std::to_string(f.r) : std::string());
    };
    auto cli_expect_fail = [&](const std::string& args) {
        ++cli_cases;
        if (run_cli(args) != 1) {
            out.pass = false;
            if (out.detail.empty()) out.detail = "exit code != 1 for: " + args;
        }
    };

    for (const auto& f : families) {
        auto g = grid_for(f);
        g.forced_t = -f.expected_t;
        counts(run_grid(g));
        cli_expect_fail("verify theorem " + cli_family(f) + " --p 3 --s-max 1 --m-min 1 --m-max 1 --force-t " +
                        std::to_string(-f.expected_t));
        for (std::size_t k = 1; k <= 20; ++k) {
            auto pg = grid_for(f);
            pg.perturb = GridSpec::Perturbation{k, 1};
            counts(run_grid(pg));
        }
        for (std::size_t k : {1, 7, 20}) {
            cli_expect_fail("verify theorem " + cli_family(f) + " --p 3 --s-max 1 --m-min 1 --m-max 1 --perturb-index " +
                            std::to_string(k));
        }
    }
    if (caught != cases) out.pass = false;
    const std::string summary = std::to_string(caught) + "/" + std::to_string(cases) +
                                " sabotaged runs caught with a counterexample; " + std::to_string(cli_cases) +
                                " CLI runs checked for exit code 1";
    out.detail = out.detail.empty() ? summary : out.detail + "; " + summary;
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string title;
        std::function<Outcome()> run;
        double limit_seconds;  // 0 = no limit
    };
    const std::vector<Criterion> criteria = {
        {1, "hypothesis congruence, p <= 13, n <= 200", hypothesis, kHypothesisSeconds},
        {2, "theorem, power form, full grid", theorem_power, kTheoremSeconds},
        {3, "theorem, general form, 25 random f per point", theorem_general, 0},
        {4, "digit corollary, p in {3, 5}, three digits", digits, 0},
        {5, "derangement identity n <= 50 and lemma, 50 random g", identity_and_lemma, 0},
        {6, "derangement and r-derangement special cases", specials, 0},
        {7, "oracle certification, n <= 15", oracles, 0},
        {8, "negative controls", negative_controls, 0},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
            o.pass = false;
            o.detail += "; over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
        }
        if (!o.pass) ++failures;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2f s", secs);
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " [" << timing
                  << "] " << o.detail << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
              << " criteria pass" << std::endl;
    return failures == 0 ? 0 : 1;
}
