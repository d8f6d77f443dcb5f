#pragma once

// Dense polynomials over F_p for a word-size prime p, used by the
// modular stage of integer polynomial factorization.

#include <cstdint>
#include <vector>

#include "ivp/poly.hpp"

namespace ivp::detail {

using ZpPoly = std::vector<std::uint64_t>;  // ascending, no trailing zeros

class Zp {
public:
    explicit Zp(std::uint64_t p) : p_(p) {}

    std::uint64_t prime() const { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
    }
    std::uint64_t inv(std::uint64_t a) const;

    ZpPoly reduce(const IntPoly& g) const;
    ZpPoly add(const ZpPoly& a, const ZpPoly& b) const;
    ZpPoly sub(const ZpPoly& a, const ZpPoly& b) const;
    ZpPoly mul(const ZpPoly& a, const ZpPoly& b) const;
    ZpPoly scale(const ZpPoly& a, std::uint64_t c) const;
    /// a = q*b + r, deg r < deg b.
    void divmod(const ZpPoly& a, const ZpPoly& b, ZpPoly& q, ZpPoly& r) const;
    ZpPoly rem(const ZpPoly& a, const ZpPoly& b) const;
    ZpPoly quo(const ZpPoly& a, const ZpPoly& b) const;
    ZpPoly monic(const ZpPoly& a) const;
    ZpPoly gcd(ZpPoly a, ZpPoly b) const;
    /// Returns g = gcd(a, b) (monic) and sets s, t with s*a + t*b = g.
    ZpPoly xgcd(const ZpPoly& a, const ZpPoly& b, ZpPoly& s, ZpPoly& t) const;
    ZpPoly powmod(ZpPoly base, Integer exponent, const ZpPoly& modulus) const;
    ZpPoly derivative(const ZpPoly& a) const;

    /// Monic irreducible factors of a monic squarefree polynomial (Berlekamp).
    std::vector<ZpPoly> berlekamp(const ZpPoly& f) const;

private:
    std::uint64_t p_;
};

inline void trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const ZpPoly& a) { return static_cast<int>(a.size()) - 1; }

} // namespace ivp::detail
