#include "appell/exact_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <omp.h>

namespace appell {

namespace {

// Below this many output coefficients the thread fan-out costs more than it saves.
constexpr std::size_t kParallelMulThreshold = 96;

}  // namespace

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

OddPrime::OddPrime(std::int64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p) || p > 0xffffffffLL) {
        throw std::invalid_argument("expected an odd prime >= 3, got " + std::to_string(p));
    }
    value_ = static_cast<std::uint32_t>(p);
}

Integer binom(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::invalid_argument("binom: n must be nonnegative");
    if (k < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Integer factorial(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("factorial: n must be nonnegative");
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t degree) {
    if (c == 0) return {};
    std::vector<Integer> v(degree + 1);
    v[degree] = c;
    return IntPoly(std::move(v));
}

Integer IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

IntPoly IntPoly::shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Integer> v(k + coeffs_.size());
    std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<std::ptrdiff_t>(k));
    return IntPoly(std::move(v));
}

IntPoly operator+(IntPoly f, const IntPoly& g) { return f += g; }
IntPoly operator-(IntPoly f, const IntPoly& g) { return f -= g; }
IntPoly operator-(IntPoly f) { return f *= Integer(-1); }
IntPoly operator*(const Integer& c, IntPoly f) { return f *= c; }

IntPoly operator*(const IntPoly& f, const IntPoly& g) { return poly_mul_parallel(f, g); }

IntPoly poly_mul_serial(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    auto a = f.coeffs();
    auto b = g.coeffs();
    std::vector<Integer> c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return IntPoly(std::move(c));
}

IntPoly poly_mul_parallel(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    auto a = f.coeffs();
    auto b = g.coeffs();
    const std::size_t out_len = a.size() + b.size() - 1;
    if (out_len < kParallelMulThreshold || std::min(a.size(), b.size()) < 8 || omp_in_parallel()) {
        return poly_mul_serial(f, g);
    }
    std::vector<Integer> c(out_len);
    const auto n = static_cast<std::ptrdiff_t>(out_len);
    // Each output coefficient is an independent convolution sum.
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        const std::size_t lo = ku >= b.size() ? ku - b.size() + 1 : 0;
        const std::size_t hi = std::min(ku, a.size() - 1);
        mpz_ptr acc = c[ku].get_mpz_t();
        for (std::size_t i = lo; i <= hi; ++i) {
            mpz_addmul(acc, a[i].get_mpz_t(), b[ku - i].get_mpz_t());
        }
    }
    return IntPoly(std::move(c));
}

IntPoly power(const IntPoly& f, std::uint64_t e) {
    IntPoly result = IntPoly::constant(1);
    IntPoly base = f;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

IntPoly derivative(const IntPoly& f) {
    auto c = f.coeffs();
    if (c.size() <= 1) return {};
    std::vector<Integer> d(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * static_cast<unsigned long>(k);
    return IntPoly(std::move(d));
}

Integer evaluate(const IntPoly& f, const Integer& a) {
    Integer acc = 0;
    auto c = f.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= a;
        acc += *it;
    }
    return acc;
}

Integer residue(const Integer& a, OddPrime p) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), p.value());
    return r;
}

Integer signed_residue(const Integer& a, OddPrime p) {
    Integer r = residue(a, p);
    if (2 * r > p.value()) r -= p.value();
    return r;
}

IntPoly reduce_mod(const IntPoly& f, OddPrime p) {
    std::vector<Integer> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(residue(c, p));
    return IntPoly(std::move(out));
}

bool congruent(const IntPoly& f, const IntPoly& g, OddPrime p) { return reduce_mod(f, p) == reduce_mod(g, p); }

std::string to_string(const IntPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    auto c = f.coeffs();
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        const Integer& a = c[i];
        if (a == 0) continue;
        Integer mag = abs(a);
        if (first) {
            if (a < 0) os << '-';
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i >= 1) os << 'x';
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

std::vector<std::string> to_decimal_strings(const IntPoly& f) {
    std::vector<std::string> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(c.get_str());
    return out;
}

IntPoly from_decimal_strings(std::span<const std::string> coeffs) {
    std::vector<Integer> v;
    v.reserve(coeffs.size());
    for (const auto& s : coeffs) {
        Integer c;
        if (c.set_str(s, 10) != 0) throw std::invalid_argument("not a decimal integer: '" + s + "'");
        v.push_back(std::move(c));
    }
    return IntPoly(std::move(v));
}

}  // namespace appell
