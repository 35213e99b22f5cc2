// Independent oracles for the family generators: truncated power series over
// exact rationals, and brute-force enumeration of permutations.

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "appell/families.hpp"

namespace appell {

namespace {

using Rational = mpq_class;
using Series = std::vector<Rational>;  // truncated at a fixed length

Series zero_series(std::size_t len) { return Series(len, Rational(0)); }

Series mul(const Series& a, const Series& b) {
    Series c = zero_series(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < c.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

// 1/a by the standard reciprocal recurrence; a[0] must be nonzero.
Series reciprocal(const Series& a) {
    Series inv = zero_series(a.size());
    inv[0] = 1 / a[0];
    for (std::size_t n = 1; n < a.size(); ++n) {
        Rational s = 0;
        for (std::size_t i = 1; i <= n; ++i) s += a[i] * inv[n - i];
        inv[n] = -s / a[0];
    }
    return inv;
}

// exp(g) for g with zero constant term: g is nilpotent modulo t^len, so
// sum_j g^j / j! terminates.
Series exp_nilpotent(const Series& g) {
    if (g[0] != 0) throw std::logic_error("exp_nilpotent: nonzero constant term");
    Series out = zero_series(g.size());
    Series term = zero_series(g.size());
    term[0] = 1;
    for (std::size_t j = 0; j < g.size(); ++j) {
        for (std::size_t i = 0; i < g.size(); ++i) out[i] += term[i];
        term = mul(term, g);
        for (auto& c : term) c /= static_cast<unsigned long>(j + 1);
    }
    return out;
}

Series one_minus_t_pow(std::size_t len, unsigned k) {
    Series base = zero_series(len);
    base[0] = 1;
    if (len > 1) base[1] = -1;
    Series out = zero_series(len);
    out[0] = 1;
    for (unsigned i = 0; i < k; ++i) out = mul(out, base);
    return out;
}

Series linear(std::size_t len, long slope) {
    Series s = zero_series(len);
    if (len > 1) s[1] = slope;
    return s;
}

// t / (1 - t)
Series t_over_one_minus_t(std::size_t len) { return mul(linear(len, 1), reciprocal(one_minus_t_pow(len, 1))); }

std::vector<Integer> egf_coefficients(const Series& s, const char* what) {
    std::vector<Integer> out;
    out.reserve(s.size());
    Integer fact = 1;
    for (std::size_t n = 0; n < s.size(); ++n) {
        if (n > 0) fact *= static_cast<unsigned long>(n);
        Rational v = s[n] * Rational(fact);
        v.canonicalize();
        if (v.get_den() != 1) {
            throw std::logic_error(std::string(what) + ": n! [t^" + std::to_string(n) +
                                   "] is not an integer: " + v.get_str());
        }
        out.push_back(v.get_num());
    }
    return out;
}

}  // namespace

std::vector<Integer> egf_moments(const EgfSpec& spec, std::size_t n_max) {
    const std::size_t len = n_max + 1;
    Series f;
    switch (spec.kind) {
    case FamilyKind::derangement:
        f = mul(exp_nilpotent(linear(len, -1)), reciprocal(one_minus_t_pow(len, 1)));
        break;
    case FamilyKind::r_derangement:
        f = mul(exp_nilpotent(linear(len, -1)), reciprocal(one_minus_t_pow(len, spec.r + 1)));
        break;
    case FamilyKind::modified_lah:
        f = exp_nilpotent(t_over_one_minus_t(len));
        break;
    case FamilyKind::modified_r_lah:
        f = mul(reciprocal(one_minus_t_pow(len, 2 * spec.r)), exp_nilpotent(t_over_one_minus_t(len)));
        break;
    }
    if (f[0] != 1) throw std::logic_error("egf_moments: F(0) != 1");
    if (spec.x != 0) f = mul(f, exp_nilpotent(linear(len, spec.x)));
    return egf_coefficients(f, "egf_moments");
}

Triangle egf_r_lah_triangle(std::size_t n_max, unsigned r) {
    const std::size_t len = n_max + 1;
    const Series prefactor = reciprocal(one_minus_t_pow(len, 2 * r));
    const Series g = t_over_one_minus_t(len);
    Triangle out(len);
    for (std::size_t n = 0; n < len; ++n) out[n].assign(n + 1, Integer(0));
    Series gk = zero_series(len);  // g^k / k!
    gk[0] = 1;
    for (std::size_t k = 0; k < len; ++k) {
        const auto col = egf_coefficients(mul(prefactor, gk), "egf_r_lah_triangle");
        for (std::size_t n = k; n < len; ++n) out[n][k] = col[n];
        gk = mul(gk, g);
        for (auto& c : gk) c /= static_cast<unsigned long>(k + 1);
    }
    return out;
}

Integer brute_force_derangements(std::size_t n, std::size_t r) {
    const std::size_t total = n + r;
    if (total > 9) throw std::invalid_argument("brute_force_derangements: n + r must be <= 9");
    std::vector<std::size_t> perm(total);
    std::iota(perm.begin(), perm.end(), 0);
    unsigned long count = 0;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < total && ok; ++i) ok = perm[i] != i;
        if (!ok) continue;
        // Walking from each of 0..r-1 must never reach another of them.
        for (std::size_t i = 0; i < r && ok; ++i) {
            for (std::size_t j = perm[i]; j != i; j = perm[j]) {
                if (j < r) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Integer(count);
}

Integer brute_force_lah(std::size_t n, std::size_t k, std::size_t r) {
    const std::size_t total = n + r;
    const std::size_t parts = k + r;
    if (total > 8) throw std::invalid_argument("brute_force_lah: n + r must be <= 8");
    if (parts == 0) return total == 0 ? 1 : 0;
    if (parts > total) return 0;
    // Every (sequence, cut set) pair with parts segments names one partition
    // into ordered lists together with an ordering of the lists.
    std::vector<std::size_t> perm(total);
    std::iota(perm.begin(), perm.end(), 0);
    const std::size_t gaps = total - 1;
    std::vector<std::size_t> segment(total);
    unsigned long count = 0;
    do {
        for (unsigned long cuts = 0; cuts < (1UL << gaps); ++cuts) {
            if (static_cast<std::size_t>(std::popcount(cuts)) != parts - 1) continue;
            std::size_t seg = 0;
            for (std::size_t pos = 0; pos < total; ++pos) {
                if (pos > 0 && (cuts >> (pos - 1)) & 1UL) ++seg;
                segment[perm[pos]] = seg;
            }
            bool ok = true;
            for (std::size_t a = 0; a < r && ok; ++a) {
                for (std::size_t b = a + 1; b < r && ok; ++b) ok = segment[a] != segment[b];
            }
            if (ok) ++count;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    unsigned long orderings = 1;
    for (std::size_t i = 2; i <= parts; ++i) orderings *= i;
    return Integer(count / orderings);
}

}  // namespace appell
