#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "appell/exact_poly.hpp"

namespace appell {

/// Moments A_0, A_1, ... of an Appell umbra A (A^n = A_n), produced on
/// demand by a rule and memoized in an append-only cache.
///
/// Thread safety: moment() and moments() may be called concurrently. The
/// cache is guarded by a shared mutex; a moment becomes visible to readers
/// only after it is fully computed, and asking for index n computes every
/// index <= n first.
class MomentSequence {
public:
    /// Produces A_n given A_0..A_{n-1}.
    using Rule = std::function<Integer(std::size_t n, std::span<const Integer> earlier)>;

    struct Options {
        /// Shipped families have nonnegative moments; relaxing this is for
        /// experiments with other umbrae and carries no theorem guarantee.
        bool allow_negative = false;
    };

    explicit MomentSequence(Rule rule);
    MomentSequence(Rule rule, Options options);
    ~MomentSequence();

    MomentSequence(MomentSequence&&) noexcept;
    MomentSequence& operator=(MomentSequence&&) noexcept;

    /// A_n. Throws std::domain_error if the rule violates A_0 = 1 or, unless
    /// relaxed, produces a negative moment.
    Integer moment(std::size_t n) const;

    /// A_0..A_{n_max}.
    std::vector<Integer> moments(std::size_t n_max) const;

    /// Number of moments currently cached.
    std::size_t cached() const;

private:
    struct State;
    void extend_to(std::size_t n) const;

    std::unique_ptr<State> state_;
};

/// A_n(x) = sum_k C(n,k) A_{n-k} x^k = (A + x)^n.
IntPoly appell_poly(const MomentSequence& u, std::size_t n);

/// f(A + x): expand f(y) in y, then replace each y^k by A_k(x). Linear in f.
IntPoly umbral_eval(const MomentSequence& u, const IntPoly& f);

/// (A + x)^e f(A + x), evaluated once on the product y^e f(y).
///
/// Not the product of appell_poly(u, e) and umbral_eval(u, f): the umbra is
/// not multiplicative, e.g. D_1(x)^2 = x^2 while D_2(x) = x^2 + 1.
IntPoly umbral_power_times(const MomentSequence& u, std::size_t e, const IntPoly& f);

}  // namespace appell
