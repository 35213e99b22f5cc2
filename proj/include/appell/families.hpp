#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "appell/exact_poly.hpp"
#include "appell/umbra.hpp"

namespace appell {

enum class FamilyKind { derangement, r_derangement, modified_lah, modified_r_lah };

/// One of the four shipped families, its r-parameter and the multiplier t
/// with A_{n+p} = t A_n (mod p): -1 for derangement kinds, +1 for Lah kinds.
struct FamilyDescriptor {
    FamilyKind kind = FamilyKind::derangement;
    unsigned r = 0;
    int expected_t = -1;

    /// Throws std::invalid_argument when r != 0 for a kind without r.
    static FamilyDescriptor make(FamilyKind kind, unsigned r = 0);

    /// Accepts "derangement", "r-derangement", "modified-lah", "modified-r-lah".
    static FamilyDescriptor parse(std::string_view name, unsigned r = 0);

    std::string name() const;
    bool has_r() const { return kind == FamilyKind::r_derangement || kind == FamilyKind::modified_r_lah; }

    friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

std::string_view kind_name(FamilyKind kind);
std::optional<FamilyKind> parse_kind(std::string_view name);
const std::vector<FamilyKind>& all_kinds();

/// Row n holds entries k = 0..n.
using Triangle = std::vector<std::vector<Integer>>;

// --- moment generators -------------------------------------------------

/// Moment rule at x = 0, built from a recurrence.
MomentSequence::Rule moment_rule(const FamilyDescriptor& family);
std::shared_ptr<MomentSequence> make_umbra(const FamilyDescriptor& family);

// --- derangements --------------------------------------------------------

/// D_0..D_{n_max}: D_0 = 1, D_n = n D_{n-1} + (-1)^n.
std::vector<Integer> derangement_numbers(std::size_t n_max);

/// sum_k C(n,k) k! (x-1)^{n-k}
IntPoly derangement_poly(std::size_t n);

/// sum_k C(n,k) C(k+r,k) k! (x-1)^{n-k}; r = 0 gives derangement_poly(n).
IntPoly r_derangement_poly(std::size_t n, unsigned r);

// --- Lah -----------------------------------------------------------------

/// L(n,k) from L(n+1,k) = L(n,k-1) + (n+k) L(n,k).
Triangle lah_triangle(std::size_t n_max);

/// (n!/k!) C(n-1,k-1), with L(0,0) = 1.
Integer lah_number(std::size_t n, std::size_t k);

/// Row sums of lah_triangle: 1, 1, 3, 13, 73, 501, ...
std::vector<Integer> lah_totals(std::size_t n_max);

/// P_n(x) = sum_k C(n,k) L_k x^{n-k}
IntPoly modified_lah_poly(std::size_t n);

/// r-Lah number (n!/k!) C(n+2r-1, k+2r-1); reduces to lah_number for r = 0.
Integer r_lah_number(std::size_t n, std::size_t k, unsigned r);
Triangle r_lah_triangle(std::size_t n_max, unsigned r);
std::vector<Integer> r_lah_totals(std::size_t n_max, unsigned r);

/// P_{n,r}(x) = sum_k C(n,k) L_{k,r} x^{n-k}
IntPoly modified_r_lah_poly(std::size_t n, unsigned r);

/// Closed-form polynomial of the family, independent of the umbra route.
IntPoly closed_form_poly(const FamilyDescriptor& family, std::size_t n);

// --- oracles ---------------------------------------------------------------

/// Truncated exponential generating function F(t) e^{xt} at an integer x.
///   derangement:    e^{-t} / (1-t)          * e^{xt}
///   r-derangement:  e^{-t} / (1-t)^{r+1}    * e^{xt}
///   modified-lah:   exp(t/(1-t))            * e^{xt}
///   modified-r-lah: (1-t)^{-2r} exp(t/(1-t)) * e^{xt}
struct EgfSpec {
    FamilyKind kind = FamilyKind::derangement;
    unsigned r = 0;
    long x = 0;

    static EgfSpec of(const FamilyDescriptor& family, long x) { return {family.kind, family.r, x}; }
};

/// n! [t^n] of the recipe for n = 0..n_max, by exact rational series
/// arithmetic. Throws std::logic_error if any result is not an integer.
std::vector<Integer> egf_moments(const EgfSpec& spec, std::size_t n_max);

/// r-Lah triangle from n! [t^n] (1-t)^{-2r} (t/(1-t))^k / k!.
Triangle egf_r_lah_triangle(std::size_t n_max, unsigned r);

/// Fixed-point-free permutations of [n+r] whose elements 1..r lie in
/// distinct cycles, by enumeration. Throws std::invalid_argument if n+r > 9.
Integer brute_force_derangements(std::size_t n, std::size_t r);

/// Partitions of [n+r] into k+r ordered lists with 1..r in distinct lists,
/// by enumeration. Throws std::invalid_argument if n+r > 8.
Integer brute_force_lah(std::size_t n, std::size_t k, std::size_t r);

}  // namespace appell
