#include "appell/families.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace appell {

namespace {

constexpr std::array<std::pair<FamilyKind, std::string_view>, 4> kKindNames{{
    {FamilyKind::derangement, "derangement"},
    {FamilyKind::r_derangement, "r-derangement"},
    {FamilyKind::modified_lah, "modified-lah"},
    {FamilyKind::modified_r_lah, "modified-r-lah"},
}};

// Falling product n (n-1) ... (k+1) = n!/k!.
Integer falling(std::size_t n, std::size_t k) {
    Integer out = 1;
    for (std::size_t i = k + 1; i <= n; ++i) out *= static_cast<unsigned long>(i);
    return out;
}

// sum_k w_k (x-1)^{n-k}
IntPoly sum_over_shifted_powers(std::size_t n, const std::vector<Integer>& weights) {
    const IntPoly x_minus_1{-1, 1};
    IntPoly acc;
    IntPoly pw = IntPoly::constant(1);  // (x-1)^{n-k}, walking k downward
    for (std::size_t j = 0; j <= n; ++j) {
        acc += weights[n - j] * pw;
        pw = poly_mul_serial(pw, x_minus_1);
    }
    return acc;
}

// sum_k C(n,k) a_k x^{n-k}
IntPoly reversed_binomial_transform(std::size_t n, const std::vector<Integer>& a) {
    std::vector<Integer> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) c[n - k] = binom(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)) * a[k];
    return IntPoly(std::move(c));
}

Triangle triangle_from(std::size_t n_max, unsigned r) {
    Triangle t(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        t[n].resize(n + 1);
        for (std::size_t k = 0; k <= n; ++k) t[n][k] = r_lah_number(n, k, r);
    }
    return t;
}

std::vector<Integer> row_sums(const Triangle& t) {
    std::vector<Integer> out;
    out.reserve(t.size());
    for (const auto& row : t) {
        Integer s = 0;
        for (const auto& v : row) s += v;
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

std::string_view kind_name(FamilyKind kind) {
    for (const auto& [k, name] : kKindNames) {
        if (k == kind) return name;
    }
    return "unknown";
}

std::optional<FamilyKind> parse_kind(std::string_view name) {
    for (const auto& [k, n] : kKindNames) {
        if (n == name) return k;
    }
    return std::nullopt;
}

const std::vector<FamilyKind>& all_kinds() {
    static const std::vector<FamilyKind> kinds{FamilyKind::derangement, FamilyKind::r_derangement,
                                               FamilyKind::modified_lah, FamilyKind::modified_r_lah};
    return kinds;
}

FamilyDescriptor FamilyDescriptor::make(FamilyKind kind, unsigned r) {
    FamilyDescriptor d;
    d.kind = kind;
    d.r = r;
    if (!d.has_r() && r != 0) {
        throw std::invalid_argument(std::string(kind_name(kind)) + " takes no r parameter");
    }
    d.expected_t = (kind == FamilyKind::derangement || kind == FamilyKind::r_derangement) ? -1 : 1;
    return d;
}

FamilyDescriptor FamilyDescriptor::parse(std::string_view name, unsigned r) {
    auto kind = parse_kind(name);
    if (!kind) throw std::invalid_argument("unknown family '" + std::string(name) + "'");
    return make(*kind, r);
}

std::string FamilyDescriptor::name() const { return std::string(kind_name(kind)); }

MomentSequence::Rule moment_rule(const FamilyDescriptor& family) {
    const unsigned long r = family.r;
    switch (family.kind) {
    case FamilyKind::derangement:
        return [](std::size_t n, std::span<const Integer> a) -> Integer {
            if (n == 0) return 1;
            Integer v = a[n - 1] * static_cast<unsigned long>(n);
            return n % 2 == 0 ? Integer(v + 1) : Integer(v - 1);
        };
    case FamilyKind::r_derangement:
        // a_n = (n-1+r) a_{n-1} + (n-1) a_{n-2}
        return [r](std::size_t n, std::span<const Integer> a) -> Integer {
            if (n == 0) return 1;
            Integer v = a[n - 1] * static_cast<unsigned long>(n - 1 + r);
            if (n >= 2) v += a[n - 2] * static_cast<unsigned long>(n - 1);
            return v;
        };
    case FamilyKind::modified_lah:
    case FamilyKind::modified_r_lah:
        // a_n = (2n-1+2r) a_{n-1} - (n-1)(n-2+2r) a_{n-2}
        return [r](std::size_t n, std::span<const Integer> a) -> Integer {
            if (n == 0) return 1;
            Integer v = a[n - 1] * static_cast<unsigned long>(2 * n - 1 + 2 * r);
            if (n >= 2) v -= a[n - 2] * static_cast<unsigned long>((n - 1) * (n - 2 + 2 * r));
            return v;
        };
    }
    throw std::logic_error("unhandled family kind");
}

std::shared_ptr<MomentSequence> make_umbra(const FamilyDescriptor& family) {
    return std::make_shared<MomentSequence>(moment_rule(family));
}

std::vector<Integer> derangement_numbers(std::size_t n_max) {
    std::vector<Integer> d(n_max + 1);
    d[0] = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        d[n] = d[n - 1] * static_cast<unsigned long>(n);
        d[n] += (n % 2 == 0) ? 1 : -1;
    }
    return d;
}

IntPoly derangement_poly(std::size_t n) { return r_derangement_poly(n, 0); }

IntPoly r_derangement_poly(std::size_t n, unsigned r) {
    // C(n,k) C(k+r,k) k! = C(n,k) (k+r)!/r!
    std::vector<Integer> w(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        w[k] = binom(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)) * falling(k + r, r);
    }
    return sum_over_shifted_powers(n, w);
}

Triangle lah_triangle(std::size_t n_max) {
    Triangle t(n_max + 1);
    t[0] = {Integer(1)};
    for (std::size_t n = 0; n < n_max; ++n) {
        auto& next = t[n + 1];
        next.assign(n + 2, Integer(0));
        for (std::size_t k = 0; k <= n + 1; ++k) {
            if (k >= 1) next[k] += t[n][k - 1];
            if (k <= n) next[k] += t[n][k] * static_cast<unsigned long>(n + k);
        }
    }
    return t;
}

Integer lah_number(std::size_t n, std::size_t k) {
    if (n == 0 && k == 0) return 1;
    if (k == 0 || k > n) return 0;
    return falling(n, k) * binom(static_cast<std::int64_t>(n - 1), static_cast<std::int64_t>(k - 1));
}

std::vector<Integer> lah_totals(std::size_t n_max) { return row_sums(lah_triangle(n_max)); }

IntPoly modified_lah_poly(std::size_t n) { return reversed_binomial_transform(n, lah_totals(n)); }

Integer r_lah_number(std::size_t n, std::size_t k, unsigned r) {
    if (r == 0) return lah_number(n, k);
    if (k > n) return 0;
    const auto top = static_cast<std::int64_t>(n + 2 * r - 1);
    const auto bottom = static_cast<std::int64_t>(k + 2 * r - 1);
    return falling(n, k) * binom(top, bottom);
}

Triangle r_lah_triangle(std::size_t n_max, unsigned r) { return triangle_from(n_max, r); }

std::vector<Integer> r_lah_totals(std::size_t n_max, unsigned r) { return row_sums(r_lah_triangle(n_max, r)); }

IntPoly modified_r_lah_poly(std::size_t n, unsigned r) {
    return reversed_binomial_transform(n, r_lah_totals(n, r));
}

IntPoly closed_form_poly(const FamilyDescriptor& family, std::size_t n) {
    switch (family.kind) {
    case FamilyKind::derangement: return derangement_poly(n);
    case FamilyKind::r_derangement: return r_derangement_poly(n, family.r);
    case FamilyKind::modified_lah: return modified_lah_poly(n);
    case FamilyKind::modified_r_lah: return modified_r_lah_poly(n, family.r);
    }
    throw std::logic_error("unhandled family kind");
}

}  // namespace appell
