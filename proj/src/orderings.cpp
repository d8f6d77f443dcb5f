#include "ivp/orderings.hpp"

#include <algorithm>
#include <limits>

#include "ivp/error.hpp"

namespace ivp {

namespace {

std::uint64_t finite_valuation(const Integer& n, const Integer& p) {
    Integer rest;
    return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

void require_prime(const Integer& p) {
    if (!is_prime(p)) throw Error("not a prime: " + p.get_str());
}

POrdering greedy_ordering(const std::vector<Integer>& elements, const Integer& p, std::size_t k) {
    if (k >= elements.size())
        throw Error("ordering exhausted: k = " + std::to_string(k) + " but |S| = " + std::to_string(elements.size()));
    POrdering result{p, {}, {}};
    std::vector<std::uint64_t> score(elements.size(), 0);
    std::vector<bool> used(elements.size(), false);
    for (std::size_t step = 0; step <= k; ++step) {
        std::size_t best = elements.size();
        for (std::size_t i = 0; i < elements.size(); ++i) {
            if (used[i]) continue;
            if (best == elements.size() || score[i] < score[best]) best = i;
        }
        used[best] = true;
        result.elements.push_back(elements[best]);
        result.p_sequence.push_back(score[best]);
        for (std::size_t i = 0; i < elements.size(); ++i)
            if (!used[i]) score[i] += finite_valuation(elements[i] - elements[best], p);
    }
    return result;
}

} // namespace

std::vector<std::uint64_t> p_sequence_of(std::span<const Integer> sequence, const Integer& p) {
    require_prime(p);
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        std::uint64_t e = 0;
        for (std::size_t j = 0; j < i; ++j) {
            if (sequence[i] == sequence[j]) throw Error("sequence elements must be distinct");
            e += finite_valuation(sequence[i] - sequence[j], p);
        }
        out.push_back(e);
    }
    return out;
}

POrdering p_ordering(const SubsetSpec& spec, const Integer& p, std::size_t k) {
    require_prime(p);
    if (auto seq = canonical_sequence(spec, k)) {
        POrdering result{p, std::move(*seq), {}};
        result.p_sequence = p_sequence_of(result.elements, p);
        return result;
    }
    return greedy_ordering(spec.finite_elements(), p, k);
}

std::vector<std::uint64_t> factorial_exponents(const SubsetSpec& spec, const Integer& p, std::size_t k) {
    return p_ordering(spec, p, k).p_sequence;
}

GeneralizedFactorial factorial(const SubsetSpec& spec, std::size_t k) {
    if (auto n = spec.size(); n && k >= *n)
        throw Error("factorial undefined: would be zero (k = " + std::to_string(k) + ", |S| = " + std::to_string(*n) + ")");
    // v_p(k!_S) <= v_p(prod_{i<k}(s_k - s_i)) for any k+1 distinct elements of S.
    auto first = enumerate(spec, k + 1);
    Integer bound = 1;
    for (std::size_t i = 0; i < k; ++i) bound *= first[k] - first[i];
    GeneralizedFactorial result;
    result.k = k;
    for (const auto& p : prime_divisors(bound)) {
        auto e = p_ordering(spec, p, k).p_sequence[k];
        if (e > 0) result.value.factors.push_back({p, e});
    }
    return result;
}

DkOrdering dk_ordering(const SubsetSpec& spec, const Integer& d, std::size_t k) {
    if (d < 0) throw Error("d must be non-negative");
    DkOrdering result;
    result.d = d;
    result.k = k;
    if (d == 0) {
        auto seq = canonical_sequence(spec, k);
        if (!seq) throw Error("no known simultaneous ordering for " + spec.to_string());
        result.elements = std::move(*seq);
        return result;
    }
    if (d == 1) {
        result.elements = enumerate(spec, k + 1);
        return result;
    }
    std::vector<POrdering> orderings;
    for (const auto& p : prime_divisors(d)) {
        orderings.push_back(p_ordering(spec, p, k));
        const std::uint64_t exponent = orderings.back().p_sequence[k] + 1;
        result.moduli.push_back({p, exponent, pow(p, exponent)});
    }
    std::vector<Congruence> system(orderings.size());
    for (std::size_t i = 0; i <= k; ++i) {
        for (std::size_t j = 0; j < orderings.size(); ++j)
            system[j] = {mod(orderings[j].elements[i], result.moduli[j].modulus), result.moduli[j].modulus};
        result.elements.push_back(crt_solve(system));
    }
    return result;
}

Integer mu(const SubsetSpec& spec, const Integer& d, const Integer& p, std::size_t i) {
    if (d < 2) throw Error("mu requires d >= 2");
    require_prime(p);
    const std::uint64_t vd = finite_valuation(d, p);
    const std::uint64_t vf = p_ordering(spec, p, i).p_sequence[i];
    if (vf > vd)
        throw Error("mu undefined: v_p(" + std::to_string(i) + "!_S) = " + std::to_string(vf) + " exceeds v_p(d) = " +
                    std::to_string(vd));
    return pow(p, vd - vf);
}

Integer fixed_divisor(const SubsetSpec& spec, const IntPoly& g) {
    if (g.is_zero()) throw Error("fixed divisor of the zero polynomial is undefined");
    const auto k = static_cast<std::size_t>(g.degree());
    if (auto n = spec.size(); n && *n <= k + 1) {
        Integer all = 0;
        for (const auto& a : spec.finite_elements()) all = gcd(all, g(a));
        return all;
    }
    Integer coarse = 0;
    for (const auto& a : enumerate(spec, k + 1)) coarse = gcd(coarse, g(a));
    Integer result = 1;
    for (const auto& p : prime_divisors(coarse)) {
        // p^e | g(b_i) for all i <= k over a p-ordering iff p^e | g on S.
        std::uint64_t e = std::numeric_limits<std::uint64_t>::max();
        for (const auto& b : p_ordering(spec, p, k).elements) {
            Integer value = g(b);
            if (value != 0) e = std::min(e, finite_valuation(value, p));
        }
        result *= pow(p, e);
    }
    return result;
}

} // namespace ivp
