#include "appell/umbra.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace appell {

struct MomentSequence::State {
    Rule rule;
    Options options;
    mutable std::shared_mutex mutex;
    std::vector<Integer> cache;
};

MomentSequence::MomentSequence(Rule rule) : MomentSequence(std::move(rule), Options{}) {}

MomentSequence::MomentSequence(Rule rule, Options options) : state_(std::make_unique<State>()) {
    if (!rule) throw std::invalid_argument("MomentSequence: empty rule");
    state_->rule = std::move(rule);
    state_->options = options;
}

MomentSequence::~MomentSequence() = default;
MomentSequence::MomentSequence(MomentSequence&&) noexcept = default;
MomentSequence& MomentSequence::operator=(MomentSequence&&) noexcept = default;

void MomentSequence::extend_to(std::size_t n) const {
    {
        std::shared_lock lock(state_->mutex);
        if (state_->cache.size() > n) return;
    }
    std::unique_lock lock(state_->mutex);
    auto& cache = state_->cache;
    cache.reserve(n + 1);
    while (cache.size() <= n) {
        const std::size_t k = cache.size();
        Integer a = state_->rule(k, std::span<const Integer>(cache.data(), k));
        if (k == 0 && a != 1) {
            throw std::domain_error("moment rule gives A_0 = " + a.get_str() + ", expected 1");
        }
        if (a < 0 && !state_->options.allow_negative) {
            throw std::domain_error("moment A_" + std::to_string(k) + " = " + a.get_str() + " is negative");
        }
        cache.push_back(std::move(a));
    }
}

Integer MomentSequence::moment(std::size_t n) const {
    extend_to(n);
    std::shared_lock lock(state_->mutex);
    return state_->cache[n];
}

std::vector<Integer> MomentSequence::moments(std::size_t n_max) const {
    extend_to(n_max);
    std::shared_lock lock(state_->mutex);
    return {state_->cache.begin(), state_->cache.begin() + static_cast<std::ptrdiff_t>(n_max + 1)};
}

std::size_t MomentSequence::cached() const {
    std::shared_lock lock(state_->mutex);
    return state_->cache.size();
}

IntPoly appell_poly(const MomentSequence& u, std::size_t n) {
    const auto a = u.moments(n);
    std::vector<Integer> c(n + 1);
    Integer b = 1;  // C(n, k)
    for (std::size_t k = 0; k <= n; ++k) {
        c[k] = b * a[n - k];
        b *= static_cast<unsigned long>(n - k);
        mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(k + 1));
    }
    return IntPoly(std::move(c));
}

IntPoly umbral_eval(const MomentSequence& u, const IntPoly& f) {
    if (f.is_zero()) return {};
    const auto fc = f.coeffs();
    const std::size_t d = fc.size() - 1;
    const auto a = u.moments(d);
    // Coefficient of x^j is sum_k f_k C(k, j) A_{k-j}.
    std::vector<Integer> out(d + 1);
    for (std::size_t k = 0; k <= d; ++k) {
        if (fc[k] == 0) continue;
        Integer b = fc[k];  // f_k C(k, j)
        for (std::size_t j = 0; j <= k; ++j) {
            mpz_addmul(out[j].get_mpz_t(), b.get_mpz_t(), a[k - j].get_mpz_t());
            b *= static_cast<unsigned long>(k - j);
            mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(j + 1));
        }
    }
    return IntPoly(std::move(out));
}

IntPoly umbral_power_times(const MomentSequence& u, std::size_t e, const IntPoly& f) {
    return umbral_eval(u, f.shifted(e));
}

}  // namespace appell
