#include "ivp/factorize.hpp"

#include <algorithm>
#include <functional>

#include "ivp/arith.hpp"
#include "ivp/error.hpp"
#include "zp_poly.hpp"

namespace ivp {

using detail::Zp;
using detail::ZpPoly;

IntPoly Factorization::product() const {
    IntPoly acc = IntPoly::constant(content * sign);
    for (const auto& f : factors) acc *= pow(f.factor, f.multiplicity);
    return acc;
}

namespace {

IntPoly lift(const ZpPoly& a) {
    std::vector<Integer> c;
    for (auto x : a) c.emplace_back(static_cast<unsigned long>(x));
    return IntPoly(std::move(c));
}

IntPoly reduce_mod(const IntPoly& g, const Integer& m) {
    std::vector<Integer> c = g.coefficients();
    for (auto& x : c) x = mod(x, m);
    return IntPoly(std::move(c));
}

IntPoly symmetric_mod(const IntPoly& g, const Integer& m) {
    const Integer half = m / 2;
    std::vector<Integer> c = g.coefficients();
    for (auto& x : c) {
        x = mod(x, m);
        if (x > half) x -= m;
    }
    return IntPoly(std::move(c));
}

// Smallest prime p with p !| lc(f) and f squarefree modulo p.
std::uint64_t choose_prime(const IntPoly& f) {
    for (std::uint64_t p = 2;; ++p) {
        if (!is_prime(Integer(static_cast<unsigned long>(p)))) continue;
        if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) continue;
        Zp zp(p);
        ZpPoly fp = zp.reduce(f);
        if (detail::degree(zp.gcd(fp, zp.derivative(fp))) == 0) return p;
    }
}

// Given F = g0 * h0 (mod p) with g0 monic, lc(h0) = lc(F) (mod p) and
// gcd(g0, h0) = 1, returns g, h with F = g * h (mod p^a), g monic.
std::pair<IntPoly, IntPoly> hensel_lift(const IntPoly& F, const ZpPoly& g0, const ZpPoly& h0, const Zp& zp,
                                        std::uint64_t a) {
    const Integer p = static_cast<unsigned long>(zp.prime());
    const Integer pa = pow(p, a);
    ZpPoly s, t;
    zp.xgcd(g0, h0, s, t);
    IntPoly g = lift(g0);
    std::vector<Integer> hc = lift(h0).coefficients();
    hc.back() = mod(F.leading(), pa);
    IntPoly h(std::move(hc));

    Integer pk = p;
    for (std::uint64_t k = 1; k < a; ++k) {
        const Integer next = pk * p;
        IntPoly err = reduce_mod(F - g * h, next);
        std::vector<Integer> ec = err.coefficients();
        for (auto& c : ec) c /= pk;
        ZpPoly e = zp.reduce(IntPoly(std::move(ec)));
        ZpPoly q, dg;
        zp.divmod(zp.mul(t, e), g0, q, dg);
        ZpPoly dh = zp.add(zp.mul(s, e), zp.mul(q, h0));
        g = reduce_mod(g + lift(dg) * pk, next);
        h = reduce_mod(h + lift(dh) * pk, next);
        pk = next;
    }
    return {g, h};
}

// Coefficient bound for any factor of f: 2^n * ||f||_2 (Mignotte).
Integer factor_coefficient_bound(const IntPoly& f) {
    Integer norm2 = 0;
    for (const auto& c : f.coefficients()) norm2 += c * c;
    Integer root = sqrt(norm2) + 1;
    return pow(Integer(2), static_cast<std::uint64_t>(f.degree())) * root;
}

// Irreducible factors of a primitive, squarefree f with lc > 0.
std::vector<IntPoly> zassenhaus(const IntPoly& f) {
    if (f.degree() <= 1) return {f};
    const std::uint64_t p = choose_prime(f);
    Zp zp(p);
    ZpPoly fp = zp.reduce(f);
    std::vector<ZpPoly> modular = zp.berlekamp(zp.monic(fp));
    if (modular.size() == 1) return {f};

    const Integer pz = static_cast<unsigned long>(p);
    const Integer target = 2 * abs(f.leading()) * factor_coefficient_bound(f);
    std::uint64_t a = 1;
    Integer pa = pz;
    while (pa <= target) {
        pa *= pz;
        ++a;
    }

    // Lift factor by factor: F = g_i * (rest) modulo p^a.
    std::vector<IntPoly> lifted;
    IntPoly current = reduce_mod(f, pa);
    const std::uint64_t lc_mod_p = mod(f.leading(), pz).get_ui();
    for (std::size_t i = 0; i + 1 < modular.size(); ++i) {
        ZpPoly rest{lc_mod_p};
        for (std::size_t j = i + 1; j < modular.size(); ++j) rest = zp.mul(rest, modular[j]);
        auto [g, h] = hensel_lift(current, modular[i], rest, zp, a);
        lifted.push_back(std::move(g));
        current = std::move(h);
    }
    Integer lc_inv;
    mpz_invert(lc_inv.get_mpz_t(), current.leading().get_mpz_t(), pa.get_mpz_t());
    lifted.push_back(reduce_mod(current * lc_inv, pa));

    // Subset recombination.
    std::vector<IntPoly> result;
    IntPoly remaining = f;
    std::vector<IntPoly> pool = std::move(lifted);
    std::size_t size = 1;
    while (2 * size <= pool.size()) {
        bool found = false;
        std::vector<std::size_t> pick(size);
        std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t depth, std::size_t start) -> bool {
            if (depth == size) {
                IntPoly candidate = IntPoly::constant(remaining.leading());
                for (auto i : pick) candidate = reduce_mod(candidate * pool[i], pa);
                candidate = primitive_part(symmetric_mod(candidate, pa));
                if (candidate.degree() < 1) return false;
                auto quotient = divide_exact(remaining, candidate);
                if (!quotient) return false;
                result.push_back(candidate);
                remaining = *quotient;
                std::vector<IntPoly> kept;
                for (std::size_t i = 0; i < pool.size(); ++i)
                    if (std::find(pick.begin(), pick.end(), i) == pick.end()) kept.push_back(pool[i]);
                pool = std::move(kept);
                return true;
            }
            for (std::size_t i = start; i < pool.size(); ++i) {
                pick[depth] = i;
                if (search(depth + 1, i + 1)) return true;
            }
            return false;
        };
        found = search(0, 0);
        if (!found) ++size;
    }
    if (remaining.degree() >= 1) result.push_back(primitive_part(remaining));
    return result;
}

} // namespace

Factorization factor_over_integers(const IntPoly& g) {
    if (g.is_zero()) throw Error("cannot factor the zero polynomial");
    Factorization result;
    result.sign = g.leading() < 0 ? -1 : 1;
    result.content = content(g);
    IntPoly f = primitive_part(g);
    if (f.degree() < 1) return result;

    IntPoly repeated = gcd(f, f.derivative());
    IntPoly squarefree = primitive_part(*divide_exact(f, repeated));
    for (auto& factor : zassenhaus(squarefree)) {
        unsigned multiplicity = 0;
        IntPoly rest = f;
        while (auto q = divide_exact(rest, factor)) {
            rest = std::move(*q);
            ++multiplicity;
        }
        result.factors.push_back({std::move(factor), multiplicity});
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const FactorPower& a, const FactorPower& b) { return canonical_less(a.factor, b.factor); });
    return result;
}

namespace {

// (primitive part, content) comparison used to orient a split.
bool part_less(const IntPoly& a, const IntPoly& b) {
    IntPoly pa = primitive_part(a), pb = primitive_part(b);
    if (canonical_less(pa, pb)) return true;
    if (canonical_less(pb, pa)) return false;
    return content(a) < content(b);
}

} // namespace

TwoFactorSplit normalize_split(const IntPoly& a, const IntPoly& b) {
    int sign = (a.leading() < 0) != (b.leading() < 0) ? -1 : 1;
    IntPoly pa = a.leading() < 0 ? -a : a;
    IntPoly pb = b.leading() < 0 ? -b : b;
    if (part_less(pb, pa)) std::swap(pa, pb);
    if (sign < 0) pb = -pb;
    return {std::move(pa), std::move(pb)};
}

bool split_less(const TwoFactorSplit& a, const TwoFactorSplit& b) {
    if (part_less(a.g1, b.g1)) return true;
    if (part_less(b.g1, a.g1)) return false;
    return canonical_less(a.g2, b.g2);
}

std::vector<TwoFactorSplit> enumerate_two_factor_splits(const IntPoly& g) {
    std::vector<TwoFactorSplit> splits;
    if (g.degree() < 2) return splits;
    const Factorization fac = factor_over_integers(g);
    const auto divisors = positive_divisors(fac.content);
    const std::size_t r = fac.factors.size();

    std::vector<unsigned> take(r, 0);
    while (true) {
        // next exponent vector in mixed radix (multiplicity + 1)
        std::size_t i = 0;
        while (i < r && take[i] == fac.factors[i].multiplicity) take[i++] = 0;
        if (i == r) break;
        ++take[i];

        bool everything = true;
        for (std::size_t j = 0; j < r; ++j) everything &= take[j] == fac.factors[j].multiplicity;
        if (everything) continue;

        IntPoly left = IntPoly::constant(1), right = IntPoly::constant(1);
        for (std::size_t j = 0; j < r; ++j) {
            left *= pow(fac.factors[j].factor, take[j]);
            right *= pow(fac.factors[j].factor, fac.factors[j].multiplicity - take[j]);
        }
        for (const auto& c1 : divisors) {
            IntPoly a = left * c1;
            IntPoly b = right * Integer(fac.content / c1) * Integer(fac.sign);
            TwoFactorSplit s = normalize_split(a, b);
            if (std::find(splits.begin(), splits.end(), s) == splits.end()) splits.push_back(std::move(s));
        }
    }
    std::sort(splits.begin(), splits.end(), split_less);
    return splits;
}

} // namespace ivp
