#pragma once

/**
 * @file arith.hpp
 * @brief Arbitrary-precision integers, p-adic valuations, integer
 *        factorization and a Chinese-remainder solver.
 */

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ivp {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exponent of the largest power of p dividing an integer; the valuation
/// of zero is the distinguished value infinity.
class Valuation {
public:
    constexpr Valuation() = default;
    constexpr explicit Valuation(std::uint64_t v) : value_(v) {}

    static constexpr Valuation infinity() { return Valuation(Infinite{}); }

    constexpr bool is_infinite() const { return !value_.has_value(); }
    constexpr bool is_finite() const { return value_.has_value(); }
    /// Precondition: is_finite().
    constexpr std::uint64_t value() const { return *value_; }

    friend constexpr Valuation operator+(Valuation a, Valuation b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        return Valuation(*a.value_ + *b.value_);
    }
    friend constexpr bool operator==(Valuation a, Valuation b) = default;
    friend constexpr std::strong_ordering operator<=>(Valuation a, Valuation b) {
        if (a.is_infinite() || b.is_infinite())
            return a.is_infinite() <=> b.is_infinite();
        return *a.value_ <=> *b.value_;
    }

    std::string to_string() const;

private:
    struct Infinite {};
    constexpr explicit Valuation(Infinite) : value_(std::nullopt) {}

    std::optional<std::uint64_t> value_{0};
};

struct PrimePower {
    Integer prime;
    std::uint64_t exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// sign * prod p^e, primes strictly increasing. The integer 1 has no factors.
struct FactoredInteger {
    int sign = 1;
    std::vector<PrimePower> factors;

    Integer value() const;
    /// Exponent of `p` in the factorization (0 when absent).
    std::uint64_t exponent_of(const Integer& p) const;
    std::string to_string() const;

    friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;
};

struct Congruence {
    Integer residue;
    Integer modulus;
};

/// Probabilistic for large inputs (GMP Miller-Rabin, 30 rounds); exact below 2^64.
bool is_prime(const Integer& n);

/// v_p(n). Throws ivp::Error("not a prime") when p is not prime.
Valuation valuation(const Integer& n, const Integer& p);

/// v_p(q) for nonzero rationals may be negative; zero yields std::nullopt.
std::optional<std::int64_t> valuation(const Rational& q, const Integer& p);

/// Complete factorization: trial division up to 10^6, Pollard rho beyond.
FactoredInteger factor_integer(const Integer& n);

/// Distinct prime divisors of a nonzero integer, ascending.
std::vector<Integer> prime_divisors(const Integer& n);

/// All positive divisors of a nonzero integer, ascending.
std::vector<Integer> positive_divisors(const Integer& n);

/// Least non-negative x with x = r_j (mod m_j) for every congruence.
/// Moduli must be positive and pairwise coprime.
Integer crt_solve(std::span<const Congruence> congruences);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer pow(const Integer& base, std::uint64_t exponent);
/// Non-negative residue of a modulo m (m > 0).
Integer mod(const Integer& a, const Integer& m);
Integer factorial(std::uint64_t n);

/// Parses an optionally signed decimal integer; std::nullopt on bad syntax.
std::optional<Integer> parse_integer(std::string_view text);

} // namespace ivp
