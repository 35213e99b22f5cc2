#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "appell/exact_poly.hpp"
#include "appell/families.hpp"
#include "appell/umbra.hpp"

namespace appell {

/// What a check runs against: a family label, the umbra whose moments are
/// used (normally the family's own, possibly perturbed for negative
/// controls) and the multiplier t placed on right-hand sides.
struct Subject {
    FamilyDescriptor family;
    std::shared_ptr<const MomentSequence> umbra;
    Integer t;

    /// The family's own umbra with t = expected_t.
    static Subject of(const FamilyDescriptor& family);

    /// Same as of(), but with the moment A_index shifted by delta.
    static Subject perturbed(const FamilyDescriptor& family, std::size_t index, long delta);
};

enum class Status { pass, fail };

/// Verdict of one check. On failure lhs and rhs hold both sides reduced
/// mod p (or exact, for identity checks); status is pass iff they are equal.
struct CheckResult {
    std::string check;
    FamilyDescriptor family;
    std::map<std::string, std::int64_t> params;
    std::optional<Integer> t_used;  // signed representative; absent for exact identities
    Status status = Status::pass;
    std::optional<IntPoly> lhs;
    std::optional<IntPoly> rhs;
    std::optional<IntPoly> input;  // random f or g, when the check takes one
    std::string error;             // set when the check could not be evaluated
    std::chrono::nanoseconds elapsed{0};

    bool passed() const { return status == Status::pass; }
};

// --- hypothesis -----------------------------------------------------------

struct TDiscovery {
    std::optional<Integer> t;                 // residue in [0, p)
    std::optional<std::size_t> first_violation;  // first n with A_{n+p} != t A_n
};

/// The residue t with A_{n+p} = t A_n (mod p) for all 0 <= n <= n_probe.
/// Since A_0 = 1 the only candidate is A_p mod p; it is then verified.
TDiscovery discover_t(const MomentSequence& u, OddPrime p, std::size_t n_probe);

/// Passes iff discover_t finds a residue and it equals subject.t mod p.
CheckResult check_hypothesis(const Subject& subject, OddPrime p, std::size_t n_probe);

// --- theorem and corollaries -----------------------------------------------

/// A_{n + m p^s}(x) = (x^{p^s} + t)^m A_n(x)  (mod p)
CheckResult verify_theorem_power(const Subject& subject, OddPrime p, unsigned s, unsigned m, std::size_t n);

/// (A+x)^{m p^s} f(A+x) = (x^{p^s} + t)^m f(A+x)  (mod p)
CheckResult verify_theorem_general(const Subject& subject, OddPrime p, unsigned s, unsigned m, const IntPoly& f);

/// digits = m_0, m_1, ..., m_s:
///   A_{m_0 + m_1 p + ... + m_s p^s}(x) = (x^p + t)^{m_1} ... (x^{p^s} + t)^{m_s} A_{m_0}(x)  (mod p)
///
/// When m_0 = 0 both signs of the right-hand side are tried and params["sign"]
/// records which holds (+1, -1, or 0 for neither). Digits >= p are accepted
/// and flagged with params["extension"] = 1.
CheckResult verify_digits(const Subject& subject, OddPrime p, const std::vector<unsigned>& digits);

/// D_{n + m p^s} = (-1)^m D_n (mod p) and, when q is given,
/// D_{n + m p (p-1)}(q) = D_n(q) (mod p). Throws std::invalid_argument if
/// p divides q - 1 or subject is not a derangement family.
std::vector<CheckResult> verify_derangement_specials(const Subject& subject, OddPrime p, unsigned m, unsigned s,
                                                     std::size_t n, std::optional<long> q);

/// D_{n+2p,r}(0) = D_{n,r}(0) and D_{n+p,r}(2) = D_{n,r}(2) (mod p).
std::vector<CheckResult> verify_r_derangement_specials(const Subject& subject, OddPrime p, std::size_t n);

/// Exact in Z[x], n >= 3:
///   D_n(x) = sum_{i=1}^{n-3} (n-i) D_{n-i}(x) + 3 D_2(x) + sum_{i=3}^{n} (x-1)^i
CheckResult verify_identity_x(const Subject& subject, std::size_t n);

/// Exact in Z[x] for g(y) = sum_{k>=3} a_k y^k:
///   g(D_x) = g'(D_x) + sum_k a_k (x-1)^k
/// Throws std::invalid_argument if g has a nonzero coefficient below y^3.
CheckResult verify_lemma(const Subject& subject, const IntPoly& g);

}  // namespace appell
