#include "ivp/oracle.hpp"

#include <algorithm>
#include <set>

#include "ivp/error.hpp"

namespace ivp::oracle {

POrdering greedy_p_ordering(std::span<const Integer> elements, const Integer& p, std::size_t k, TieBreak mode,
                            std::mt19937_64* rng) {
    if (!is_prime(p)) throw Error("not a prime: " + p.get_str());
    if (k >= elements.size()) throw Error("ordering exhausted");
    if (mode == TieBreak::Random && rng == nullptr) throw Error("random tie-breaking needs a generator");
    std::vector<Integer> pool(elements.begin(), elements.end());
    std::sort(pool.begin(), pool.end());
    POrdering out{p, {}, {}};
    for (std::size_t step = 0; step <= k; ++step) {
        std::vector<std::size_t> best;
        Valuation best_v = Valuation::infinity();
        for (std::size_t i = 0; i < pool.size(); ++i) {
            Integer product = 1;
            for (const auto& a : out.elements) product *= pool[i] - a;
            Valuation v = valuation(product, p);
            if (v < best_v) {
                best_v = v;
                best.assign(1, i);
            } else if (v == best_v) {
                best.push_back(i);
            }
        }
        std::size_t pick = best.front();
        if (mode == TieBreak::Random) pick = best[std::uniform_int_distribution<std::size_t>(0, best.size() - 1)(*rng)];
        out.elements.push_back(pool[pick]);
        out.p_sequence.push_back(best_v.value());
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return out;
}

bool brute_membership(const RatPoly& f, const SubsetSpec& spec, std::size_t n) {
    if (auto size = spec.size()) n = std::min(n, *size);
    for (const auto& a : enumerate(spec, n))
        if (f(a).get_den() != 1) return false;
    return true;
}

std::size_t exact_sample_size(const SubsetSpec& spec, int degree) {
    const std::size_t k = degree < 0 ? 0 : static_cast<std::size_t>(degree);
    std::size_t n = std::max<std::size_t>(64, 4 * (k + 1));
    if (auto size = spec.size()) n = std::min(n, *size);
    return n;
}

bool brute_reducibility(const RatPoly& f, const SubsetSpec& spec) {
    const int deg = f.degree();
    if (deg < 1) throw Error("oracle needs a nonconstant polynomial");
    if (deg > kMaxDegree) throw Error("oracle limited to degree <= " + std::to_string(kMaxDegree));
    if (f.denominator() > kMaxDenominator) throw Error("oracle limited to denominators <= 10000");
    const std::size_t n = exact_sample_size(spec, deg);
    if (!brute_membership(f, spec, n)) throw Error("not integer-valued over " + spec.to_string());
    Integer value_gcd = 0;
    for (const auto& a : enumerate(spec, n)) value_gcd = gcd(value_gcd, f.numerator()(a));
    // A prime dividing every value gives f = p * (f/p) with both factors non-units.
    if (value_gcd != f.denominator()) return true;

    const auto divisors = positive_divisors(f.denominator());
    for (const auto& split : enumerate_two_factor_splits(f.numerator())) {
        for (const auto& d1 : divisors) {
            RatPoly left(split.g1, d1), right(split.g2, f.denominator() / d1);
            if (brute_membership(left, spec, n) && brute_membership(right, spec, n)) return true;
        }
    }
    return false;
}

namespace {

// Coefficients of the interpolating polynomial through (xs[i], ys[i]).
std::vector<Rational> interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
    const std::size_t n = xs.size();
    std::vector<Rational> dd(ys.begin(), ys.end());
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - level]);
            if (i == level) break;
        }
    std::vector<Rational> poly{dd[n - 1]};
    for (std::size_t i = n - 1; i-- > 0;) {
        // poly = poly * (x - xs[i]) + dd[i]
        std::vector<Rational> next(poly.size() + 1, Rational(0));
        for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] += poly[j];
            next[j] -= poly[j] * Rational(xs[i]);
        }
        next[0] += dd[i];
        poly = std::move(next);
    }
    return poly;
}

} // namespace

std::vector<IntPoly> kronecker_divisors(const IntPoly& g, int max_degree) {
    std::vector<IntPoly> found;
    if (g.is_zero() || max_degree < 1) return found;
    const std::size_t npoints = static_cast<std::size_t>(max_degree) + 1;

    std::vector<std::pair<std::size_t, Integer>> candidates;
    for (long x = -40; x <= 40; ++x) {
        Integer v = g(Integer(x));
        if (v != 0) candidates.emplace_back(positive_divisors(v).size(), Integer(x));
    }
    std::sort(candidates.begin(), candidates.end());
    if (candidates.size() < npoints) throw Error("not enough evaluation points");
    std::vector<Integer> xs;
    std::vector<std::vector<Integer>> choices;
    for (std::size_t i = 0; i < npoints; ++i) {
        xs.push_back(candidates[i].second);
        std::vector<Integer> c;
        for (const auto& d : positive_divisors(g(xs.back()))) {
            c.push_back(d);
            if (i > 0) c.push_back(-d);  // the first value fixes the overall sign
        }
        choices.push_back(std::move(c));
    }

    std::set<std::vector<Integer>> seen;
    std::vector<std::size_t> idx(npoints, 0);
    std::vector<Integer> ys(npoints);
    while (true) {
        for (std::size_t i = 0; i < npoints; ++i) ys[i] = choices[i][idx[i]];
        auto coeffs = interpolate(xs, ys);
        bool integral = std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& q) { return q.get_den() == 1; });
        if (integral) {
            std::vector<Integer> ic;
            for (const auto& q : coeffs) ic.push_back(q.get_num());
            IntPoly h(std::move(ic));
            if (h.degree() >= 1) {
                if (h.leading() < 0) h = -h;
                if (seen.insert(h.coefficients()).second && divide_exact(g, h)) found.push_back(h);
            }
        }
        std::size_t i = 0;
        while (i < npoints && ++idx[i] == choices[i].size()) idx[i++] = 0;
        if (i == npoints) break;
    }
    std::sort(found.begin(), found.end(), canonical_less);
    return found;
}

Factorization kronecker_factor(const IntPoly& g) {
    if (g.is_zero()) throw Error("cannot factor the zero polynomial");
    Factorization result;
    result.sign = g.leading() < 0 ? -1 : 1;
    result.content = content(g);
    IntPoly rest = primitive_part(g);
    std::vector<IntPoly> irreducibles;
    while (rest.degree() >= 1) {
        std::optional<IntPoly> smallest;
        for (int m = 1; m <= rest.degree() / 2 && !smallest; ++m)
            for (const auto& h : kronecker_divisors(rest, m))
                if (h.degree() == m && content(h) == 1) {
                    smallest = h;
                    break;
                }
        IntPoly factor = smallest ? *smallest : rest;
        irreducibles.push_back(factor);
        rest = *divide_exact(rest, factor);
    }
    std::sort(irreducibles.begin(), irreducibles.end(), canonical_less);
    for (const auto& f : irreducibles) {
        if (!result.factors.empty() && result.factors.back().factor == f) ++result.factors.back().multiplicity;
        else result.factors.push_back({f, 1});
    }
    return result;
}

std::vector<TwoFactorSplit> brute_two_factor_splits(const IntPoly& g) {
    std::vector<TwoFactorSplit> out;
    if (g.degree() < 2) return out;
    for (const auto& h : kronecker_divisors(g, g.degree() / 2)) {
        auto s = normalize_split(h, *divide_exact(g, h));
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), split_less);
    return out;
}

} // namespace ivp::oracle
