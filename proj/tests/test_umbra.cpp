#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "appell/families.hpp"
#include "appell/umbra.hpp"

using namespace appell;

namespace {

long count_derangements(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long count = 0;
    do {
        bool fixed = false;
        for (int i = 0; i < n; ++i) fixed = fixed || perm[i] == i;
        if (!fixed) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

std::vector<FamilyDescriptor> shipped() {
    return {FamilyDescriptor::make(FamilyKind::derangement),      FamilyDescriptor::make(FamilyKind::r_derangement, 1),
            FamilyDescriptor::make(FamilyKind::r_derangement, 3), FamilyDescriptor::make(FamilyKind::modified_lah),
            FamilyDescriptor::make(FamilyKind::modified_r_lah, 1), FamilyDescriptor::make(FamilyKind::modified_r_lah, 2)};
}

}  // namespace

TEST_CASE("moments of the derangement and modified-Lah umbrae") {
    auto d = make_umbra(FamilyDescriptor::make(FamilyKind::derangement));
    CHECK(d->moment(0) == 1);
    CHECK(count_derangements(4) == 9);
    CHECK(d->moment(4) == count_derangements(4));
    for (int n = 0; n <= 8; ++n) CHECK(d->moment(static_cast<std::size_t>(n)) == count_derangements(n));

    auto l = make_umbra(FamilyDescriptor::make(FamilyKind::modified_lah));
    CHECK(l->moment(3) == 13);
}

TEST_CASE("moment cache is append-only and deterministic") {
    auto d = make_umbra(FamilyDescriptor::make(FamilyKind::derangement));
    CHECK(d->cached() == 0);
    const auto first = d->moment(10);
    CHECK(d->cached() == 11);
    d->moment(3);
    CHECK(d->cached() == 11);
    CHECK(d->moment(10) == first);
    CHECK(d->moments(10).size() == 11);
}

TEST_CASE("moment rule contract") {
    MomentSequence bad_zero([](std::size_t n, std::span<const Integer>) { return Integer(n == 0 ? 2 : 1); });
    CHECK_THROWS_AS(bad_zero.moment(0), std::domain_error);

    auto alternating = [](std::size_t n, std::span<const Integer>) { return Integer(n % 2 == 0 ? 1 : -1); };
    MomentSequence strict(alternating);
    CHECK(strict.moment(0) == 1);
    CHECK_THROWS_AS(strict.moment(1), std::domain_error);
    CHECK(strict.cached() == 1);

    MomentSequence relaxed(alternating, MomentSequence::Options{.allow_negative = true});
    CHECK(relaxed.moment(3) == -1);
    CHECK(appell_poly(relaxed, 2) == IntPoly{1, -2, 1});
}

TEST_CASE("appell_poly examples") {
    auto d = make_umbra(FamilyDescriptor::make(FamilyKind::derangement));
    for (const auto& f : shipped()) CHECK(appell_poly(*make_umbra(f), 0) == IntPoly{1});
    CHECK(appell_poly(*d, 2) == IntPoly{1, 0, 1});
    CHECK(appell_poly(*d, 4) == IntPoly{9, 8, 6, 0, 1});
}

TEST_CASE("umbral_eval examples and linearity") {
    auto d = make_umbra(FamilyDescriptor::make(FamilyKind::derangement));
    CHECK(umbral_eval(*d, IntPoly::monomial(1, 5)) == appell_poly(*d, 5));
    CHECK(umbral_eval(*d, IntPoly{1}) == IntPoly{1});
    CHECK(umbral_eval(*d, IntPoly{}) == IntPoly{});
    // y^3 + y^2 -> D_3(x) + D_2(x) = (x^3 + 3x + 2) + (x^2 + 1)
    CHECK(umbral_eval(*d, IntPoly{0, 0, 1, 1}) == IntPoly{3, 3, 1, 1});

    std::mt19937_64 rng(3);
    for (const auto& fam : shipped()) {
        auto u = make_umbra(fam);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Integer> a(rng() % 15 + 1), b(rng() % 15 + 1);
            for (auto& c : a) c = static_cast<long>(rng() % 41) - 20;
            for (auto& c : b) c = static_cast<long>(rng() % 41) - 20;
            const IntPoly f(std::move(a)), g(std::move(b));
            const Integer c = static_cast<long>(rng() % 19) - 9;
            REQUIRE(umbral_eval(*u, f + g) == umbral_eval(*u, f) + umbral_eval(*u, g));
            REQUIRE(umbral_eval(*u, c * f) == c * umbral_eval(*u, f));
        }
    }
}

TEST_CASE("umbral_power_times examples") {
    auto d = make_umbra(FamilyDescriptor::make(FamilyKind::derangement));
    const IntPoly f{2, -1, 3};
    CHECK(umbral_power_times(*d, 0, f) == umbral_eval(*d, f));
    CHECK(umbral_power_times(*d, 3, IntPoly{1}) == IntPoly{2, 3, 0, 1});
    CHECK(umbral_power_times(*d, 1, IntPoly{0, 1}) == IntPoly{1, 0, 1});
}

TEST_CASE("the umbra is not multiplicative") {
    auto d = make_umbra(FamilyDescriptor::make(FamilyKind::derangement));
    const IntPoly y = IntPoly::x();
    CHECK(umbral_eval(*d, y * y) != umbral_eval(*d, y) * umbral_eval(*d, y));
    CHECK(umbral_power_times(*d, 1, y) != appell_poly(*d, 1) * umbral_eval(*d, y));
}

TEST_CASE("A_n(0) equals the moment, n <= 100") {
    for (const auto& fam : shipped()) {
        auto u = make_umbra(fam);
        for (std::size_t n = 0; n <= 100; ++n) REQUIRE(evaluate(appell_poly(*u, n), 0) == u->moment(n));
    }
}

TEST_CASE("Appell derivative property A_n' = n A_{n-1}, n <= 60") {
    for (const auto& fam : shipped()) {
        auto u = make_umbra(fam);
        for (std::size_t n = 1; n <= 60; ++n) {
            REQUIRE(derivative(appell_poly(*u, n)) == Integer(static_cast<unsigned long>(n)) * appell_poly(*u, n - 1));
        }
    }
}

TEST_CASE("concurrent readers see the serial moments") {
    const auto fam = FamilyDescriptor::make(FamilyKind::modified_r_lah, 2);
    const auto reference = make_umbra(fam)->moments(300);
    auto shared = make_umbra(fam);
    std::atomic<int> mismatches{0};
    std::vector<std::thread> threads;
    for (int t = 0; t < 8; ++t) {
        threads.emplace_back([&, t] {
            std::mt19937_64 rng(static_cast<std::uint64_t>(t));
            for (int i = 0; i < 400; ++i) {
                const std::size_t n = rng() % 301;
                if (shared->moment(n) != reference[n]) ++mismatches;
            }
        });
    }
    for (auto& th : threads) th.join();
    CHECK(mismatches == 0);
    CHECK(shared->moments(300) == reference);
}
