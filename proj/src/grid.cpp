#include "appell/grid.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <random>
#include <stdexcept>

#include <omp.h>

namespace appell {

namespace {

struct Job {
    std::size_t subject = 0;
    std::size_t needed_index = 0;  // largest moment index the job touches
    std::function<std::vector<CheckResult>(const Subject&)> run;
};

struct Plan {
    std::vector<Subject> subjects;
    std::vector<Job> jobs;
};

Subject make_subject(const GridSpec& spec, const FamilyDescriptor& family) {
    Subject s = spec.perturb ? Subject::perturbed(family, spec.perturb->index, spec.perturb->delta)
                             : Subject::of(family);
    if (spec.forced_t) s.t = *spec.forced_t;
    return s;
}

std::size_t ipow(std::size_t b, long e) {
    std::size_t out = 1;
    for (long i = 0; i < e; ++i) out *= b;
    return out;
}

std::vector<OddPrime> validated_primes(const GridSpec& spec) {
    std::vector<OddPrime> out;
    out.reserve(spec.primes.size());
    for (auto p : spec.primes) out.emplace_back(p);
    return out;
}

template <class F>
Job single(std::size_t subject, std::size_t needed, F f) {
    return {subject, needed, [f](const Subject& s) { return std::vector<CheckResult>{f(s)}; }};
}

void plan_family(const GridSpec& spec, const std::vector<OddPrime>& primes, std::size_t si, const Subject& subject,
                 std::mt19937_64& rng, std::vector<Job>& jobs) {
    const auto kind = subject.family.kind;
    switch (spec.kind) {
    case CheckKind::hypothesis:
        for (auto p : primes) {
            jobs.push_back(single(si, spec.n_probe + p.value(),
                                  [p, k = spec.n_probe](const Subject& s) { return check_hypothesis(s, p, k); }));
        }
        break;
    case CheckKind::theorem_power:
        if (spec.n.empty() || spec.m.empty() || spec.s.empty()) break;
        for (auto p : primes) {
            for (long s = spec.s.lo; s <= spec.s.hi; ++s) {
                for (long m = spec.m.lo; m <= spec.m.hi; ++m) {
                    for (long n = spec.n.lo; n <= spec.n.hi; ++n) {
                        const std::size_t needed = n + m * ipow(p.value(), s);
                        jobs.push_back(single(si, needed, [=](const Subject& sub) {
                            return verify_theorem_power(sub, p, static_cast<unsigned>(s), static_cast<unsigned>(m),
                                                        static_cast<std::size_t>(n));
                        }));
                    }
                }
            }
        }
        break;
    case CheckKind::theorem_general:
        if (spec.m.empty() || spec.s.empty()) break;
        for (auto p : primes) {
            for (long s = spec.s.lo; s <= spec.s.hi; ++s) {
                for (long m = spec.m.lo; m <= spec.m.hi; ++m) {
                    for (unsigned i = 0; i < spec.random_count; ++i) {
                        const std::uint64_t seed = rng();
                        const std::size_t degree = rng() % 13;
                        IntPoly f = random_poly(seed, degree, -20, 20);
                        const std::size_t needed = degree + m * ipow(p.value(), s);
                        jobs.push_back(single(si, needed, [=](const Subject& sub) {
                            auto r = verify_theorem_general(sub, p, static_cast<unsigned>(s),
                                                            static_cast<unsigned>(m), f);
                            r.params["index"] = i;
                            return r;
                        }));
                    }
                }
            }
        }
        break;
    case CheckKind::digits:
        for (auto p : primes) {
            const unsigned top = spec.digit_max.value_or(p.value() - 1);
            std::vector<unsigned> digits(spec.digit_places + 1, 0);
            for (;;) {
                std::size_t needed = 0;
                for (std::size_t i = 0; i < digits.size(); ++i) needed += digits[i] * ipow(p.value(), static_cast<long>(i));
                jobs.push_back(single(si, needed, [=](const Subject& sub) { return verify_digits(sub, p, digits); }));
                std::size_t pos = 0;
                while (pos < digits.size() && digits[pos] == top) digits[pos++] = 0;
                if (pos == digits.size()) break;
                ++digits[pos];
            }
        }
        break;
    case CheckKind::derangement_specials:
        if (kind != FamilyKind::derangement) break;
        for (auto p : primes) {
            if (!spec.n.empty() && !spec.m.empty() && !spec.s.empty()) {
                for (long s = spec.s.lo; s <= spec.s.hi; ++s) {
                    for (long m = spec.m.lo; m <= spec.m.hi; ++m) {
                        for (long n = spec.n.lo; n <= spec.n.hi; ++n) {
                            jobs.push_back({si, n + m * ipow(p.value(), s), [=](const Subject& sub) {
                                                return verify_derangement_specials(
                                                    sub, p, static_cast<unsigned>(m), static_cast<unsigned>(s),
                                                    static_cast<std::size_t>(n), std::nullopt);
                                            }});
                        }
                    }
                }
            }
            for (long q : spec.q_points) {
                if (residue(Integer(q) - 1, p) == 0) continue;
                for (unsigned m = 0; m <= spec.fermat_m_max; ++m) {
                    for (std::size_t n = 0; n <= spec.fermat_n_max; ++n) {
                        const std::size_t needed = n + m * p.value() * (p.value() - 1);
                        jobs.push_back({si, needed, [=](const Subject& sub) {
                                            auto both = verify_derangement_specials(sub, p, m, 1, n, q);
                                            return std::vector<CheckResult>{both.back()};
                                        }});
                    }
                }
            }
        }
        break;
    case CheckKind::r_derangement_specials:
        if (kind != FamilyKind::r_derangement || spec.n.empty()) break;
        for (auto p : primes) {
            for (long n = spec.n.lo; n <= spec.n.hi; ++n) {
                jobs.push_back({si, static_cast<std::size_t>(n + 2 * p.value()), [=](const Subject& sub) {
                                    return verify_r_derangement_specials(sub, p, static_cast<std::size_t>(n));
                                }});
            }
        }
        break;
    case CheckKind::identity:
    case CheckKind::lemma:
        break;  // planned once, outside the family loop
    }
}

Plan make_plan(const GridSpec& spec) {
    Plan plan;
    const auto primes = validated_primes(spec);
    std::mt19937_64 rng(spec.seed);

    if (spec.kind == CheckKind::identity || spec.kind == CheckKind::lemma) {
        plan.subjects.push_back(make_subject(spec, FamilyDescriptor::make(FamilyKind::derangement)));
        if (spec.kind == CheckKind::identity) {
            for (long n = std::max(3L, spec.n.lo); n <= spec.n.hi; ++n) {
                plan.jobs.push_back(single(0, static_cast<std::size_t>(n), [n](const Subject& s) {
                    return verify_identity_x(s, static_cast<std::size_t>(n));
                }));
            }
        } else {
            for (unsigned i = 0; i < spec.random_count; ++i) {
                const std::uint64_t seed = rng();
                const std::size_t degree = 3 + rng() % 10;
                IntPoly g = random_poly(seed, degree, -50, 50, 3);
                plan.jobs.push_back(single(0, degree, [g, i](const Subject& s) {
                    auto r = verify_lemma(s, g);
                    r.params["index"] = i;
                    return r;
                }));
            }
        }
        return plan;
    }

    for (const auto& family : spec.families) {
        plan.subjects.push_back(make_subject(spec, family));
        plan_family(spec, primes, plan.subjects.size() - 1, plan.subjects.back(), rng, plan.jobs);
    }
    return plan;
}

void warm(const Plan& plan) {
    std::vector<std::size_t> top(plan.subjects.size(), 0);
    for (const auto& j : plan.jobs) top[j.subject] = std::max(top[j.subject], j.needed_index);
    for (std::size_t i = 0; i < plan.subjects.size(); ++i) {
        try {
            plan.subjects[i].umbra->moment(top[i]);
        } catch (const std::exception&) {
            // surfaces again, per check, when the job runs
        }
    }
}

std::vector<CheckResult> run_job(const Plan& plan, const Job& job, CheckKind kind) {
    const Subject& subject = plan.subjects[job.subject];
    try {
        return job.run(subject);
    } catch (const std::exception& e) {
        CheckResult r;
        r.check = std::string(check_kind_name(kind));
        r.family = subject.family;
        r.status = Status::fail;
        r.error = e.what();
        return {r};
    }
}

Report assemble(std::vector<std::vector<CheckResult>>&& slots, std::uint64_t seed) {
    Report report;
    report.seed = seed;
    for (auto& slot : slots) {
        std::move(slot.begin(), slot.end(), std::back_inserter(report.results));
    }
    return report;
}

}  // namespace

std::string_view check_kind_name(CheckKind kind) {
    switch (kind) {
    case CheckKind::hypothesis: return "hypothesis";
    case CheckKind::theorem_power: return "theorem_power";
    case CheckKind::theorem_general: return "theorem_general";
    case CheckKind::digits: return "digits";
    case CheckKind::derangement_specials: return "derangement_specials";
    case CheckKind::r_derangement_specials: return "r_derangement_specials";
    case CheckKind::identity: return "identity_x";
    case CheckKind::lemma: return "lemma";
    }
    return "unknown";
}

std::size_t Report::passed() const {
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return r.passed(); }));
}

const CheckResult* Report::first_failure() const {
    auto it = std::find_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.passed(); });
    return it == results.end() ? nullptr : &*it;
}

Report run_grid(const GridSpec& spec) {
    const Plan plan = make_plan(spec);
    warm(plan);
    std::vector<std::vector<CheckResult>> slots(plan.jobs.size());
    const auto count = static_cast<std::ptrdiff_t>(plan.jobs.size());
    const int threads = spec.jobs > 0 ? spec.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        slots[static_cast<std::size_t>(i)] = run_job(plan, plan.jobs[static_cast<std::size_t>(i)], spec.kind);
    }
    return assemble(std::move(slots), spec.seed);
}

Report run_grid_serial(const GridSpec& spec) {
    const Plan plan = make_plan(spec);
    std::vector<std::vector<CheckResult>> slots;
    slots.reserve(plan.jobs.size());
    for (const auto& job : plan.jobs) slots.push_back(run_job(plan, job, spec.kind));
    return assemble(std::move(slots), spec.seed);
}

IntPoly random_poly(std::uint64_t seed, std::size_t degree, long lo, long hi, std::size_t min_degree) {
    if (hi < lo) throw std::invalid_argument("random_poly: empty coefficient range");
    std::mt19937_64 rng(seed);
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    auto draw = [&] { return lo + static_cast<long>(rng() % span); };
    std::vector<Integer> c(degree + 1);
    for (std::size_t k = min_degree; k <= degree; ++k) c[k] = draw();
    if (lo != 0 || hi != 0) {
        while (c[degree] == 0) c[degree] = draw();
    }
    return IntPoly(std::move(c));
}

}  // namespace appell
