#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace appell {

/// Arbitrary-precision signed integer. Every coefficient, moment and count
/// in the library is one of these; nothing is ever rounded.
using Integer = mpz_class;

/// An odd prime p >= 3. Construction is the only place p is validated, so
/// every API taking an OddPrime can assume the hypothesis holds.
class OddPrime {
public:
    /// Throws std::invalid_argument for p < 3, even p, or composite p.
    explicit OddPrime(std::int64_t p);

    std::uint32_t value() const noexcept { return value_; }

    friend bool operator==(OddPrime, OddPrime) = default;

private:
    std::uint32_t value_;
};

bool is_prime(std::int64_t n);

/// C(n, k); zero when k < 0 or k > n.
Integer binom(std::int64_t n, std::int64_t k);
Integer factorial(std::int64_t n);

/// Dense polynomial in Z[x]. coeffs()[i] is the coefficient of x^i.
///
/// Always canonical: the last stored coefficient is nonzero, and the zero
/// polynomial stores nothing (degree() == -1). Equality is therefore
/// coefficient-wise comparison of the stored vectors.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const Integer& c);
    static IntPoly monomial(const Integer& c, std::size_t degree);
    static IntPoly x() { return monomial(1, 1); }

    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::span<const Integer> coeffs() const noexcept { return coeffs_; }

    /// Coefficient of x^i; zero past the degree.
    Integer coeff(std::size_t i) const;

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const Integer& c);

    /// Multiply by x^k.
    IntPoly shifted(std::size_t k) const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    void trim();

    std::vector<Integer> coeffs_;
};

IntPoly operator+(IntPoly f, const IntPoly& g);
IntPoly operator-(IntPoly f, const IntPoly& g);
IntPoly operator-(IntPoly f);
IntPoly operator*(const IntPoly& f, const IntPoly& g);
IntPoly operator*(const Integer& c, IntPoly f);

/// Schoolbook product, one thread. Reference for poly_mul_parallel.
IntPoly poly_mul_serial(const IntPoly& f, const IntPoly& g);

/// Product with output coefficients computed concurrently (OpenMP).
/// Identical result to poly_mul_serial; falls back to it for small inputs.
IntPoly poly_mul_parallel(const IntPoly& f, const IntPoly& g);

/// f^e with 0^0 = 1.
IntPoly power(const IntPoly& f, std::uint64_t e);
IntPoly derivative(const IntPoly& f);
Integer evaluate(const IntPoly& f, const Integer& a);

/// Coefficients replaced by least nonnegative residues in [0, p), then
/// re-canonicalized.
IntPoly reduce_mod(const IntPoly& f, OddPrime p);
bool congruent(const IntPoly& f, const IntPoly& g, OddPrime p);

/// Least nonnegative residue of a mod p.
Integer residue(const Integer& a, OddPrime p);

/// Representative of a mod p in (-p/2, p/2].
Integer signed_residue(const Integer& a, OddPrime p);

/// Human-readable, most significant term first: "x^4 + 6x^2 + 8x + 9".
std::string to_string(const IntPoly& f);

/// Decimal strings, x^0 first: x^4 + 2x -> ["0","2","0","0","1"].
std::vector<std::string> to_decimal_strings(const IntPoly& f);
IntPoly from_decimal_strings(std::span<const std::string> coeffs);

}  // namespace appell
