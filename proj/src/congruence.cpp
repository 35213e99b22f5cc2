#include "appell/congruence.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

namespace appell {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (out > std::numeric_limits<std::uint64_t>::max() / base) throw std::overflow_error("p^s overflows");
        out *= base;
    }
    return out;
}

// x^{p^s} + t
IntPoly shifted_power(OddPrime p, unsigned s, const Integer& t) {
    return IntPoly::monomial(1, checked_pow(p.value(), s)) + IntPoly::constant(t);
}

CheckResult start(const char* name, const Subject& subject, OddPrime p) {
    CheckResult r;
    r.check = name;
    r.family = subject.family;
    r.params["p"] = p.value();
    r.params["t"] = residue(subject.t, p).get_si();
    r.t_used = signed_residue(subject.t, p);
    return r;
}

CheckResult start_exact(const char* name, const Subject& subject) {
    CheckResult r;
    r.check = name;
    r.family = subject.family;
    return r;
}

CheckResult& settle(CheckResult& r, IntPoly lhs, IntPoly rhs, Clock::time_point t0) {
    r.status = lhs == rhs ? Status::pass : Status::fail;
    if (r.status == Status::fail) {
        r.lhs = std::move(lhs);
        r.rhs = std::move(rhs);
    }
    r.elapsed = Clock::now() - t0;
    return r;
}

void require_kind(const Subject& subject, FamilyKind kind, const char* what) {
    if (subject.family.kind != kind) {
        throw std::invalid_argument(std::string(what) + " applies to the " + std::string(kind_name(kind)) +
                                    " family only");
    }
}

}  // namespace

Subject Subject::of(const FamilyDescriptor& family) { return {family, make_umbra(family), family.expected_t}; }

Subject Subject::perturbed(const FamilyDescriptor& family, std::size_t index, long delta) {
    if (index == 0) throw std::invalid_argument("perturbing A_0 breaks A_0 = 1");
    std::shared_ptr<const MomentSequence> base = make_umbra(family);
    auto rule = [base, index, delta](std::size_t n, std::span<const Integer>) -> Integer {
        Integer a = base->moment(n);
        if (n == index) a += delta;
        return a;
    };
    return {family, std::make_shared<MomentSequence>(rule, MomentSequence::Options{.allow_negative = true}),
            family.expected_t};
}

TDiscovery discover_t(const MomentSequence& u, OddPrime p, std::size_t n_probe) {
    const auto a = u.moments(n_probe + p.value());
    TDiscovery out;
    const Integer t = residue(a[p.value()], p);
    for (std::size_t n = 0; n <= n_probe; ++n) {
        if (residue(a[n + p.value()] - t * a[n], p) != 0) {
            out.first_violation = n;
            return out;
        }
    }
    out.t = t;
    return out;
}

CheckResult check_hypothesis(const Subject& subject, OddPrime p, std::size_t n_probe) {
    const auto t0 = Clock::now();
    CheckResult r = start("hypothesis", subject, p);
    r.params["n_probe"] = static_cast<std::int64_t>(n_probe);
    const auto found = discover_t(*subject.umbra, p, n_probe);
    const Integer want = residue(subject.t, p);
    if (found.t) {
        r.params["discovered_t"] = found.t->get_si();
    } else {
        r.params["violation_n"] = static_cast<std::int64_t>(*found.first_violation);
    }
    if (found.t && *found.t == want) return settle(r, IntPoly{}, IntPoly{}, t0);
    // Counterexample A_{n+p} vs t A_n: n = 0 separates any t other than
    // A_p mod p, otherwise the first violating index does.
    const std::size_t n = residue(subject.umbra->moment(p.value()), p) != want ? 0 : *found.first_violation;
    r.params["n"] = static_cast<std::int64_t>(n);
    const Integer lhs = residue(subject.umbra->moment(n + p.value()), p);
    const Integer rhs = residue(want * subject.umbra->moment(n), p);
    return settle(r, IntPoly::constant(lhs), IntPoly::constant(rhs), t0);
}

CheckResult verify_theorem_power(const Subject& subject, OddPrime p, unsigned s, unsigned m, std::size_t n) {
    const auto t0 = Clock::now();
    CheckResult r = start("theorem_power", subject, p);
    r.params["s"] = s;
    r.params["m"] = m;
    r.params["n"] = static_cast<std::int64_t>(n);
    const std::uint64_t e = m * checked_pow(p.value(), s);
    const auto& u = *subject.umbra;
    IntPoly lhs = reduce_mod(appell_poly(u, n + e), p);
    IntPoly factor = reduce_mod(power(reduce_mod(shifted_power(p, s, subject.t), p), m), p);
    IntPoly rhs = reduce_mod(factor * reduce_mod(appell_poly(u, n), p), p);
    return settle(r, std::move(lhs), std::move(rhs), t0);
}

CheckResult verify_theorem_general(const Subject& subject, OddPrime p, unsigned s, unsigned m, const IntPoly& f) {
    const auto t0 = Clock::now();
    CheckResult r = start("theorem_general", subject, p);
    r.params["s"] = s;
    r.params["m"] = m;
    r.input = f;
    const std::uint64_t e = m * checked_pow(p.value(), s);
    const auto& u = *subject.umbra;
    IntPoly lhs = reduce_mod(umbral_power_times(u, e, f), p);
    IntPoly factor = reduce_mod(power(reduce_mod(shifted_power(p, s, subject.t), p), m), p);
    IntPoly rhs = reduce_mod(factor * reduce_mod(umbral_eval(u, f), p), p);
    return settle(r, std::move(lhs), std::move(rhs), t0);
}

CheckResult verify_digits(const Subject& subject, OddPrime p, const std::vector<unsigned>& digits) {
    const auto t0 = Clock::now();
    if (digits.empty()) throw std::invalid_argument("verify_digits: need at least m_0");
    CheckResult r = start("digits", subject, p);
    r.params["s"] = static_cast<std::int64_t>(digits.size() - 1);
    std::uint64_t index = 0;
    bool extension = false;
    IntPoly product = IntPoly::constant(1);
    for (std::size_t i = 0; i < digits.size(); ++i) {
        r.params["m" + std::to_string(i)] = digits[i];
        extension = extension || digits[i] >= p.value();
        const std::uint64_t place = checked_pow(p.value(), static_cast<unsigned>(i));
        index += digits[i] * place;
        if (i >= 1 && digits[i] > 0) {
            product = reduce_mod(product * power(shifted_power(p, static_cast<unsigned>(i), subject.t), digits[i]), p);
        }
    }
    if (extension) r.params["extension"] = 1;
    const auto& u = *subject.umbra;
    IntPoly lhs = reduce_mod(appell_poly(u, index), p);
    IntPoly rhs = reduce_mod(product * reduce_mod(appell_poly(u, digits[0]), p), p);
    if (digits[0] == 0) {
        const bool plus = lhs == rhs;
        const bool minus = lhs == reduce_mod(-rhs, p);
        r.params["sign"] = plus ? 1 : (minus ? -1 : 0);
    }
    return settle(r, std::move(lhs), std::move(rhs), t0);
}

std::vector<CheckResult> verify_derangement_specials(const Subject& subject, OddPrime p, unsigned m, unsigned s,
                                                     std::size_t n, std::optional<long> q) {
    require_kind(subject, FamilyKind::derangement, "verify_derangement_specials");
    if (q && residue(Integer(*q) - 1, p) == 0) {
        throw std::invalid_argument("q = " + std::to_string(*q) + " violates the hypothesis p does not divide q - 1");
    }
    const auto& u = *subject.umbra;
    std::vector<CheckResult> out;
    {
        const auto t0 = Clock::now();
        CheckResult r = start("c1_numbers", subject, p);
        r.params["m"] = m;
        r.params["s"] = s;
        r.params["n"] = static_cast<std::int64_t>(n);
        r.t_used = -1;
        r.params["t"] = p.value() - 1;
        const std::uint64_t e = m * checked_pow(p.value(), s);
        const Integer lhs = residue(u.moment(n + e), p);
        const Integer rhs = residue((m % 2 == 0 ? 1 : -1) * u.moment(n), p);
        out.push_back(settle(r, IntPoly::constant(lhs), IntPoly::constant(rhs), t0));
    }
    if (q) {
        const auto t0 = Clock::now();
        CheckResult r = start("c1_fermat", subject, p);
        r.params["m"] = m;
        r.params["n"] = static_cast<std::int64_t>(n);
        r.params["q"] = *q;
        r.t_used = -1;
        r.params["t"] = p.value() - 1;
        const std::uint64_t e = static_cast<std::uint64_t>(m) * p.value() * (p.value() - 1);
        const Integer lhs = residue(evaluate(appell_poly(u, n + e), Integer(*q)), p);
        const Integer rhs = residue(evaluate(appell_poly(u, n), Integer(*q)), p);
        out.push_back(settle(r, IntPoly::constant(lhs), IntPoly::constant(rhs), t0));
    }
    return out;
}

std::vector<CheckResult> verify_r_derangement_specials(const Subject& subject, OddPrime p, std::size_t n) {
    require_kind(subject, FamilyKind::r_derangement, "verify_r_derangement_specials");
    const auto& u = *subject.umbra;
    std::vector<CheckResult> out;
    {
        const auto t0 = Clock::now();
        CheckResult r = start("c2_at_zero", subject, p);
        r.params["n"] = static_cast<std::int64_t>(n);
        r.params["m"] = 2;
        r.params["s"] = 1;
        r.t_used = -1;
        r.params["t"] = p.value() - 1;
        const Integer lhs = residue(u.moment(n + 2 * p.value()), p);
        const Integer rhs = residue(u.moment(n), p);
        out.push_back(settle(r, IntPoly::constant(lhs), IntPoly::constant(rhs), t0));
    }
    {
        const auto t0 = Clock::now();
        CheckResult r = start("c2_at_two", subject, p);
        r.params["n"] = static_cast<std::int64_t>(n);
        r.params["m"] = 1;
        r.params["s"] = 1;
        r.params["q"] = 2;
        r.t_used = -1;
        r.params["t"] = p.value() - 1;
        const Integer lhs = residue(evaluate(appell_poly(u, n + p.value()), 2), p);
        const Integer rhs = residue(evaluate(appell_poly(u, n), 2), p);
        out.push_back(settle(r, IntPoly::constant(lhs), IntPoly::constant(rhs), t0));
    }
    return out;
}

CheckResult verify_identity_x(const Subject& subject, std::size_t n) {
    require_kind(subject, FamilyKind::derangement, "verify_identity_x");
    if (n < 3) throw std::invalid_argument("identity (x) needs n >= 3");
    const auto t0 = Clock::now();
    CheckResult r = start_exact("identity_x", subject);
    r.params["n"] = static_cast<std::int64_t>(n);
    const auto& u = *subject.umbra;
    IntPoly rhs = Integer(3) * appell_poly(u, 2);
    for (std::size_t i = 1; i + 3 <= n; ++i) {
        rhs += Integer(static_cast<unsigned long>(n - i)) * appell_poly(u, n - i);
    }
    const IntPoly x_minus_1{-1, 1};
    IntPoly pw = power(x_minus_1, 3);
    for (std::size_t i = 3; i <= n; ++i) {
        rhs += pw;
        pw = pw * x_minus_1;
    }
    return settle(r, appell_poly(u, n), std::move(rhs), t0);
}

CheckResult verify_lemma(const Subject& subject, const IntPoly& g) {
    require_kind(subject, FamilyKind::derangement, "verify_lemma");
    const auto c = g.coeffs();
    for (std::size_t k = 0; k < 3 && k < c.size(); ++k) {
        if (c[k] != 0) throw std::invalid_argument("lemma: g must have no terms of degree < 3");
    }
    const auto t0 = Clock::now();
    CheckResult r = start_exact("lemma", subject);
    r.params["degree"] = g.degree();
    r.input = g;
    const auto& u = *subject.umbra;
    IntPoly rhs = umbral_eval(u, derivative(g));
    const IntPoly x_minus_1{-1, 1};
    IntPoly pw = IntPoly::constant(1);
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k >= 3) rhs += c[k] * pw;
        pw = pw * x_minus_1;
    }
    return settle(r, umbral_eval(u, g), std::move(rhs), t0);
}

}  // namespace appell
