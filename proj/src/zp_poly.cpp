#include "zp_poly.hpp"

#include <algorithm>

namespace ivp::detail {

std::uint64_t Zp::inv(std::uint64_t a) const {
    // a^(p-2)
    std::uint64_t result = 1, base = a % p_, e = p_ - 2;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

ZpPoly Zp::reduce(const IntPoly& g) const {
    ZpPoly out;
    const Integer p = static_cast<unsigned long>(p_);
    for (const auto& c : g.coefficients()) out.push_back(mod(c, p).get_ui());
    trim(out);
    return out;
}

ZpPoly Zp::add(const ZpPoly& a, const ZpPoly& b) const {
    ZpPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = add(out[i], b[i]);
    trim(out);
    return out;
}

ZpPoly Zp::sub(const ZpPoly& a, const ZpPoly& b) const {
    ZpPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = sub(out[i], b[i]);
    trim(out);
    return out;
}

ZpPoly Zp::mul(const ZpPoly& a, const ZpPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ZpPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = add(out[i + j], mul(a[i], b[j]));
    trim(out);
    return out;
}

ZpPoly Zp::scale(const ZpPoly& a, std::uint64_t c) const {
    ZpPoly out = a;
    for (auto& x : out) x = mul(x, c);
    trim(out);
    return out;
}

void Zp::divmod(const ZpPoly& a, const ZpPoly& b, ZpPoly& q, ZpPoly& r) const {
    r = a;
    q.clear();
    if (a.size() < b.size()) return;
    q.assign(a.size() - b.size() + 1, 0);
    const std::uint64_t lead_inv = inv(b.back());
    for (std::size_t i = q.size(); i-- > 0;) {
        const std::uint64_t c = mul(r[i + b.size() - 1], lead_inv);
        q[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = sub(r[i + j], mul(c, b[j]));
    }
    trim(q);
    trim(r);
}

ZpPoly Zp::rem(const ZpPoly& a, const ZpPoly& b) const {
    ZpPoly q, r;
    divmod(a, b, q, r);
    return r;
}

ZpPoly Zp::quo(const ZpPoly& a, const ZpPoly& b) const {
    ZpPoly q, r;
    divmod(a, b, q, r);
    return q;
}

ZpPoly Zp::monic(const ZpPoly& a) const {
    if (a.empty()) return a;
    return scale(a, inv(a.back()));
}

ZpPoly Zp::gcd(ZpPoly a, ZpPoly b) const {
    while (!b.empty()) {
        ZpPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

ZpPoly Zp::xgcd(const ZpPoly& a, const ZpPoly& b, ZpPoly& s, ZpPoly& t) const {
    ZpPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        ZpPoly q, r;
        divmod(r0, r1, q, r);
        ZpPoly s2 = sub(s0, mul(q, s1));
        ZpPoly t2 = sub(t0, mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const std::uint64_t k = inv(r0.back());
    s = scale(s0, k);
    t = scale(t0, k);
    return scale(r0, k);
}

ZpPoly Zp::powmod(ZpPoly base, Integer exponent, const ZpPoly& modulus) const {
    ZpPoly result{1};
    base = rem(base, modulus);
    while (exponent > 0) {
        if (mpz_odd_p(exponent.get_mpz_t())) result = rem(mul(result, base), modulus);
        base = rem(mul(base, base), modulus);
        exponent >>= 1;
    }
    return rem(result, modulus);
}

ZpPoly Zp::derivative(const ZpPoly& a) const {
    ZpPoly out;
    for (std::size_t i = 1; i < a.size(); ++i) out.push_back(mul(a[i], i % p_));
    trim(out);
    return out;
}

std::vector<ZpPoly> Zp::berlekamp(const ZpPoly& f) const {
    const std::size_t n = f.size() - 1;
    if (n <= 1) return {f};

    // Row i of Q holds x^(i*p) mod f.
    std::vector<std::vector<std::uint64_t>> q(n, std::vector<std::uint64_t>(n, 0));
    const ZpPoly xp = powmod(ZpPoly{0, 1}, Integer(static_cast<unsigned long>(p_)), f);
    ZpPoly row{1};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < row.size(); ++j) q[i][j] = row[j];
        row = rem(mul(row, xp), f);
    }
    // v (Q - I) = 0  <=>  (Q - I)^T v = 0
    std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[j][i] = sub(q[i][j], i == j ? 1 : 0);

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) continue;
        std::swap(a[pivot], a[rank]);
        const std::uint64_t k = inv(a[rank][col]);
        for (auto& x : a[rank]) x = mul(x, k);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            const std::uint64_t factor = a[r][col];
            for (std::size_t c = 0; c < n; ++c) a[r][c] = sub(a[r][c], mul(factor, a[rank][c]));
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<ZpPoly> basis;
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        ZpPoly v(n, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = sub(0, a[r][free]);
        trim(v);
        basis.push_back(std::move(v));
    }
    const std::size_t count = basis.size();

    std::vector<ZpPoly> factors{f};
    for (const auto& v : basis) {
        if (factors.size() == count) break;
        if (degree(v) <= 0) continue;
        std::vector<ZpPoly> next;
        for (const auto& u : factors) {
            if (degree(u) <= 1) {
                next.push_back(u);
                continue;
            }
            // prod_s gcd(u, v - s) = u since v^p - v = 0 (mod f)
            ZpPoly remaining = u;
            for (std::uint64_t s = 0; s < p_ && degree(remaining) > 0; ++s) {
                ZpPoly g = gcd(remaining, sub(v, ZpPoly{s}));
                if (degree(g) < 1) continue;
                next.push_back(g);
                remaining = quo(remaining, g);
            }
        }
        factors = std::move(next);
    }
    return factors;
}

} // namespace ivp::detail
