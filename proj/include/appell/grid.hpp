#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "appell/congruence.hpp"

namespace appell {

enum class CheckKind {
    hypothesis,
    theorem_power,
    theorem_general,
    digits,
    derangement_specials,
    r_derangement_specials,
    identity,
    lemma,
};

std::string_view check_kind_name(CheckKind kind);

/// Inclusive integer range; empty when hi < lo.
struct Range {
    long lo = 0;
    long hi = -1;
    bool empty() const { return hi < lo; }
};

/// A cartesian grid of checks of one kind. Fields a kind does not use are
/// ignored.
struct GridSpec {
    CheckKind kind = CheckKind::theorem_power;
    std::vector<FamilyDescriptor> families;
    std::vector<std::int64_t> primes;
    Range n{0, 20};
    Range m{0, 3};
    Range s{1, 2};

    /// digits: number of places after m_0, and the largest digit tried
    /// (unset = p - 1).
    unsigned digit_places = 2;
    std::optional<unsigned> digit_max;

    /// derangement_specials: evaluation points for the Fermat case. Points
    /// with p | q - 1 are outside the hypothesis and skipped.
    std::vector<long> q_points;
    /// derangement_specials: largest n and m for the Fermat case.
    std::size_t fermat_n_max = 15;
    unsigned fermat_m_max = 2;

    /// theorem_general and lemma: how many seeded random polynomials.
    unsigned random_count = 25;
    std::uint64_t seed = 1;

    std::size_t n_probe = 200;

    /// Overrides every family's expected t.
    std::optional<long> forced_t;
    /// Negative control: A_index += delta in every family umbra.
    struct Perturbation {
        std::size_t index;
        long delta;
    };
    std::optional<Perturbation> perturb;

    /// Worker threads for run_grid; 0 = OpenMP default.
    int jobs = 0;
};

struct Report {
    std::vector<CheckResult> results;
    std::uint64_t seed = 0;

    std::size_t total() const { return results.size(); }
    std::size_t passed() const;
    std::size_t failed() const { return total() - passed(); }
    const CheckResult* first_failure() const;
};

/// Runs every check of the grid concurrently (OpenMP, one check per
/// iteration). Results come back in grid order regardless of scheduling; a
/// check that throws becomes a failed result carrying the message.
Report run_grid(const GridSpec& spec);

/// Single-threaded reference for run_grid; same results in the same order.
Report run_grid_serial(const GridSpec& spec);

/// Seeded random polynomial of the given degree, coefficients in [lo, hi].
/// When min_degree > 0, coefficients below it are zero.
IntPoly random_poly(std::uint64_t seed, std::size_t degree, long lo, long hi, std::size_t min_degree = 0);

}  // namespace appell
