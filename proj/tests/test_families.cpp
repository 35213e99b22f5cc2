#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "appell/certify.hpp"
#include "appell/families.hpp"

using namespace appell;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

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

// D_n(x) = n D_{n-1}(x) + (x-1)^n, seeded with D_1(x) = x.
std::vector<IntPoly> derangement_polys_by_recurrence(std::size_t n_max) {
    std::vector<IntPoly> out{IntPoly{1}, IntPoly{0, 1}};
    const IntPoly x_minus_1{-1, 1};
    for (std::size_t n = 2; n <= n_max; ++n) {
        out.push_back(Integer(static_cast<unsigned long>(n)) * out[n - 1] + power(x_minus_1, n));
    }
    return out;
}

std::vector<FamilyDescriptor> every_family() {
    std::vector<FamilyDescriptor> out{FamilyDescriptor::make(FamilyKind::derangement),
                                      FamilyDescriptor::make(FamilyKind::modified_lah)};
    for (unsigned r = 0; r <= 3; ++r) {
        out.push_back(FamilyDescriptor::make(FamilyKind::r_derangement, r));
        out.push_back(FamilyDescriptor::make(FamilyKind::modified_r_lah, r));
    }
    return out;
}

}  // namespace

TEST_CASE("family descriptors") {
    const auto d = FamilyDescriptor::make(FamilyKind::derangement);
    CHECK(d.expected_t == -1);
    CHECK(FamilyDescriptor::make(FamilyKind::r_derangement, 2).expected_t == -1);
    CHECK(FamilyDescriptor::make(FamilyKind::modified_lah).expected_t == 1);
    CHECK(FamilyDescriptor::make(FamilyKind::modified_r_lah, 1).expected_t == 1);
    CHECK_THROWS_AS(FamilyDescriptor::make(FamilyKind::derangement, 1), std::invalid_argument);
    CHECK(FamilyDescriptor::parse("modified-r-lah", 2) == FamilyDescriptor::make(FamilyKind::modified_r_lah, 2));
    CHECK_THROWS_AS(FamilyDescriptor::parse("bell"), std::invalid_argument);
    for (auto k : all_kinds()) CHECK(parse_kind(kind_name(k)) == k);
}

TEST_CASE("derangement numbers match brute-force permutation counts") {
    CHECK(derangement_numbers(2) == ints({1, 0, 1}));
    CHECK(derangement_numbers(6) == ints({1, 0, 1, 2, 9, 44, 265}));
    CHECK(derangement_numbers(1)[1] == 0);
    const auto d = derangement_numbers(8);
    for (int n = 0; n <= 8; ++n) {
        REQUIRE(d[static_cast<std::size_t>(n)] == count_derangements(n));
        REQUIRE(brute_force_derangements(static_cast<std::size_t>(n), 0) == count_derangements(n));
    }
}

TEST_CASE("derangement polynomials") {
    CHECK(derangement_poly(0) == IntPoly{1});
    CHECK(derangement_poly(2) == IntPoly{1, 0, 1});
    CHECK(derangement_poly(3) == IntPoly{2, 3, 0, 1});
    CHECK(derangement_poly(4) == IntPoly{9, 8, 6, 0, 1});
    const auto rec = derangement_polys_by_recurrence(60);
    for (std::size_t n = 0; n <= 60; ++n) REQUIRE(derangement_poly(n) == rec[n]);
    const auto d = make_umbra(FamilyDescriptor::make(FamilyKind::derangement));
    for (std::size_t n = 0; n <= 60; ++n) REQUIRE(appell_poly(*d, n) == derangement_poly(n));
}

TEST_CASE("r-derangement polynomials") {
    for (std::size_t n = 0; n <= 20; ++n) REQUIRE(r_derangement_poly(n, 0) == derangement_poly(n));
    for (unsigned r = 0; r <= 5; ++r) CHECK(r_derangement_poly(0, r) == IntPoly{1});

    // Degree 2, so three evaluations against the EGF oracle pin it down.
    const IntPoly p21 = r_derangement_poly(2, 1);
    for (long x = 0; x <= 2; ++x) {
        CHECK(evaluate(p21, x) == egf_moments({FamilyKind::r_derangement, 1, x}, 2)[2]);
    }
    CHECK(p21 == IntPoly{3, 2, 1});
}

TEST_CASE("brute-force r-derangement counts") {
    CHECK(brute_force_derangements(4, 0) == 9);
    CHECK(brute_force_derangements(1, 0) == 0);
    CHECK(brute_force_derangements(0, 0) == 1);
    CHECK_THROWS_AS(brute_force_derangements(7, 3), std::invalid_argument);
    // 1..r in distinct cycles needs at least r other elements.
    for (std::size_t r = 1; r <= 4; ++r) CHECK(brute_force_derangements(0, r) == 0);
    // Derangements of [2r] with 1..r in distinct cycles pair each i <= r with
    // one partner: r! ways, i.e. r!/0! D_{0,r}(0).
    for (std::size_t r = 1; r <= 4; ++r) CHECK(brute_force_derangements(r, r) == factorial(static_cast<long>(r)));

    // D_{n,r}(0) = n!/(n+r)! * (count over [n + 2r]).
    for (unsigned r = 0; r <= 3; ++r) {
        for (std::size_t n = 0; n + 2 * r <= 9; ++n) {
            const Integer at_zero = evaluate(r_derangement_poly(n, r), 0);
            Integer scaled = at_zero;
            for (std::size_t i = n + 1; i <= n + r; ++i) scaled *= static_cast<unsigned long>(i);
            REQUIRE(brute_force_derangements(n + r, r) == scaled);
        }
    }
}

TEST_CASE("Lah triangle") {
    const auto t = lah_triangle(25);
    CHECK(t[1][1] == 1);
    CHECK(t[3][1] == 6);
    CHECK(t[4][2] == 36);
    CHECK(t[0][0] == 1);
    for (std::size_t n = 1; n <= 25; ++n) CHECK(t[n][0] == 0);
    for (std::size_t n = 0; n <= 25; ++n) {
        for (std::size_t k = 0; k <= n; ++k) REQUIRE(t[n][k] == lah_number(n, k));
    }
    CHECK(brute_force_lah(3, 1, 0) == 6);
    CHECK(brute_force_lah(4, 2, 0) == 36);
    CHECK(brute_force_lah(2, 1, 0) == 2);
    CHECK(brute_force_lah(2, 2, 0) == 1);
    CHECK_THROWS_AS(brute_force_lah(7, 2, 2), std::invalid_argument);
}

TEST_CASE("Lah totals and modified Lah polynomials") {
    const auto totals = lah_totals(5);
    CHECK(totals == ints({1, 1, 3, 13, 73, 501}));
    CHECK(egf_moments({FamilyKind::modified_lah, 0, 0}, 5) == totals);
    CHECK(modified_lah_poly(0) == IntPoly{1});
    CHECK(modified_lah_poly(1) == IntPoly{1, 1});
    CHECK(modified_lah_poly(2) == IntPoly{3, 2, 1});
    for (std::size_t n = 0; n <= 30; ++n) REQUIRE(evaluate(modified_lah_poly(n), 0) == lah_totals(n)[n]);
}

TEST_CASE("r-Lah objects") {
    CHECK(r_lah_triangle(20, 0) == lah_triangle(20));
    for (unsigned r = 0; r <= 4; ++r) CHECK(r_lah_totals(0, r)[0] == 1);
    CHECK(r_lah_totals(1, 1)[1] == 3);
    CHECK(egf_moments({FamilyKind::modified_r_lah, 1, 0}, 1)[1] == 3);
    for (std::size_t n = 0; n <= 15; ++n) REQUIRE(modified_r_lah_poly(n, 0) == modified_lah_poly(n));
    for (unsigned r = 1; r <= 3; ++r) {
        CHECK(egf_r_lah_triangle(15, r) == r_lah_triangle(15, r));
        for (std::size_t n = 0; n + r <= 6; ++n) {
            for (std::size_t k = 0; k <= n; ++k) REQUIRE(brute_force_lah(n, k, r) == r_lah_number(n, k, r));
        }
    }
}

TEST_CASE("EGF oracle examples") {
    CHECK(egf_moments({FamilyKind::derangement, 0, 0}, 4) == ints({1, 0, 1, 2, 9}));
    CHECK(egf_moments({FamilyKind::modified_lah, 0, 0}, 3) == ints({1, 1, 3, 13}));
    for (auto kind : all_kinds()) {
        for (long x : {0L, 1L, -3L}) CHECK(egf_moments({kind, 2, x}, 0) == ints({1}));
    }
    // At x = 1 the derangement EGF collapses to 1/(1-t): A_n(1) = n!.
    const auto at_one = egf_moments({FamilyKind::derangement, 0, 1}, 10);
    for (std::size_t n = 0; n <= 10; ++n) CHECK(at_one[n] == factorial(static_cast<long>(n)));
}

TEST_CASE("generators agree with every oracle, n <= 15") {
    for (const auto& fam : every_family()) {
        for (const auto& c : certify_family(fam, 15)) {
            INFO(fam.name() << " r=" << fam.r << " " << c.name << ": " << c.detail);
            REQUIRE(c.agree);
            REQUIRE(c.compared > 0);
        }
    }
}

TEST_CASE("hypothesis congruence A_{n+p} = t A_n (mod p), n <= 200") {
    for (const auto& fam : every_family()) {
        const auto u = make_umbra(fam);
        for (std::int64_t raw : {3, 5, 7, 11, 13}) {
            const OddPrime p(raw);
            for (std::size_t n = 0; n <= 200; ++n) {
                REQUIRE(residue(u->moment(n + p.value()) - fam.expected_t * u->moment(n), p) == 0);
            }
        }
    }
}

TEST_CASE("moments are nonnegative") {
    for (const auto& fam : every_family()) {
        for (const auto& a : make_umbra(fam)->moments(200)) REQUIRE(a >= 0);
    }
}
