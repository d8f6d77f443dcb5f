#include "ivp/arith.hpp"

#include <algorithm>
#include <map>

#include "ivp/error.hpp"

namespace ivp {

std::string Valuation::to_string() const {
    return is_infinite() ? "inf" : std::to_string(*value_);
}

Integer FactoredInteger::value() const {
    Integer v = sign;
    for (const auto& f : factors) v *= pow(f.prime, f.exponent);
    return v;
}

std::uint64_t FactoredInteger::exponent_of(const Integer& p) const {
    for (const auto& f : factors)
        if (f.prime == p) return f.exponent;
    return 0;
}

std::string FactoredInteger::to_string() const {
    std::string out = sign < 0 ? "-" : "";
    if (factors.empty()) return out + "1";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += " * ";
        out += factors[i].prime.get_str();
        if (factors[i].exponent > 1) out += "^" + std::to_string(factors[i].exponent);
    }
    return out;
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

Valuation valuation(const Integer& n, const Integer& p) {
    if (!is_prime(p)) throw Error("not a prime: " + p.get_str());
    if (n == 0) return Valuation::infinity();
    Integer rest;
    auto v = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    return Valuation(v);
}

std::optional<std::int64_t> valuation(const Rational& q, const Integer& p) {
    if (q == 0) return std::nullopt;
    auto num = valuation(q.get_num(), p);
    auto den = valuation(q.get_den(), p);
    return static_cast<std::int64_t>(num.value()) - static_cast<std::int64_t>(den.value());
}

namespace {

constexpr unsigned long kTrialBound = 1000000;

// Brent's variant of Pollard rho; n is odd, composite and has no factor
// below the trial-division bound.
Integer pollard_rho(const Integer& n) {
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, g = 1, q = 1, ys;
        std::uint64_t r = 1;
        const std::uint64_t m = 128;
        auto step = [&](const Integer& v) {
            Integer t = v * v + c;
            return Integer(t % n);
        };
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = step(y);
            std::uint64_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = step(y);
                    Integer diff = abs(x - y);
                    q = (q * diff) % n;
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = step(ys);
                g = gcd(Integer(abs(x - ys)), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split_large(const Integer& n, std::map<Integer, std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Integer f = pollard_rho(n);
    split_large(f, out);
    split_large(Integer(n / f), out);
}

} // namespace

FactoredInteger factor_integer(const Integer& n) {
    if (n == 0) throw Error("cannot factor zero");
    FactoredInteger result;
    result.sign = n < 0 ? -1 : 1;
    Integer rest = abs(n);
    std::map<Integer, std::uint64_t> found;
    auto trial_limit = [&rest] {
        Integer root = sqrt(rest);
        return root.fits_ulong_p() ? std::min(kTrialBound, root.get_ui()) : kTrialBound;
    };
    unsigned long limit = trial_limit();
    for (unsigned long d = 2; d <= limit; d += (d == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
            Integer dz = d;
            auto e = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), dz.get_mpz_t());
            found[dz] += e;
            limit = trial_limit();
        }
    }
    split_large(rest, found);
    for (auto& [p, e] : found) result.factors.push_back({p, e});
    return result;
}

std::vector<Integer> prime_divisors(const Integer& n) {
    std::vector<Integer> out;
    for (const auto& f : factor_integer(n).factors) out.push_back(f.prime);
    return out;
}

std::vector<Integer> positive_divisors(const Integer& n) {
    std::vector<Integer> divs{1};
    for (const auto& f : factor_integer(n).factors) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (std::uint64_t e = 1; e <= f.exponent; ++e) {
            pk *= f.prime;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Integer crt_solve(std::span<const Congruence> congruences) {
    for (const auto& c : congruences)
        if (c.modulus <= 0) throw Error("modulus must be positive");
    for (std::size_t i = 0; i < congruences.size(); ++i)
        for (std::size_t j = i + 1; j < congruences.size(); ++j)
            if (gcd(congruences[i].modulus, congruences[j].modulus) != 1)
                throw Error("moduli are not pairwise coprime");

    Integer x = 0, m = 1;
    for (const auto& c : congruences) {
        // x + m*t = r (mod c.modulus)  =>  t = (r - x) * m^{-1}
        Integer inv;
        mpz_invert(inv.get_mpz_t(), m.get_mpz_t(), c.modulus.get_mpz_t());
        if (c.modulus == 1) inv = 0;
        Integer t = mod(Integer((c.residue - x) * inv), c.modulus);
        x += m * t;
        m *= c.modulus;
    }
    return mod(x, m);
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Integer pow(const Integer& base, std::uint64_t exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Integer mod(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer factorial(std::uint64_t n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

std::optional<Integer> parse_integer(std::string_view text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    if (i == text.size()) return std::nullopt;
    for (std::size_t j = i; j < text.size(); ++j)
        if (text[j] < '0' || text[j] > '9') return std::nullopt;
    std::string s(text);
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s, 10);
}

} // namespace ivp
