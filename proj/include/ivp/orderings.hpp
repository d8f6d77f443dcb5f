#pragma once

/**
 * @file orderings.hpp
 * @brief p-orderings, generalized (Bhargava) factorials k!_S,
 *        d_k-orderings, the mu_i(d,p) function and fixed divisors.
 */

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ivp/arith.hpp"
#include "ivp/poly.hpp"
#include "ivp/sets.hpp"

namespace ivp {

/// Prefix a_0..a_k of a p-ordering of S with its p-sequence
/// e_i = v_p(prod_{j<i} (a_i - a_j)) = v_p(i!_S). The elements are
/// distinct, so every e_i is finite.
struct POrdering {
    Integer p;
    std::vector<Integer> elements;
    std::vector<std::uint64_t> p_sequence;
};

/// e_i = v_p(prod_{j<i} (a_i - a_j)) for an arbitrary sequence of distinct integers.
std::vector<std::uint64_t> p_sequence_of(std::span<const Integer> sequence, const Integer& p);

/// Structured sets return their closed-form ordering; finite sets are
/// ordered greedily, ties broken by the smallest element.
/// Throws "ordering exhausted" when k >= |S|.
POrdering p_ordering(const SubsetSpec& spec, const Integer& p, std::size_t k);

struct GeneralizedFactorial {
    std::size_t k = 0;
    FactoredInteger value;

    Integer integer() const { return value.value(); }
};

/// k!_S = prod_p p^{v_p(k!_S)}. Throws when k >= |S| for finite S.
GeneralizedFactorial factorial(const SubsetSpec& spec, std::size_t k);

/// v_p(i!_S) for i = 0..k.
std::vector<std::uint64_t> factorial_exponents(const SubsetSpec& spec, const Integer& p, std::size_t k);

struct DkModulus {
    Integer prime;
    std::uint64_t exponent = 0;  ///< e_k + 1 where p^{e_k} = w_p(k!_S)
    Integer modulus;             ///< prime^exponent
};

struct DkOrdering {
    Integer d;
    std::size_t k = 0;
    std::vector<Integer> elements;
    std::vector<DkModulus> moduli;
};

/// Nodes x_0..x_k with x_i = u_i (mod p^{e_k+1}) for a p-ordering u of S,
/// for every prime p | d; least non-negative CRT representatives.
/// d = 0 yields the closed-form simultaneous ordering (structured sets only),
/// d = 1 the first k+1 enumerated elements.
DkOrdering dk_ordering(const SubsetSpec& spec, const Integer& d, std::size_t k);

/// p^{v_p(d) - v_p(i!_S)}; throws "mu undefined" when v_p(i!_S) > v_p(d).
Integer mu(const SubsetSpec& spec, const Integer& d, const Integer& p, std::size_t i);

/// d(S,g) = gcd{ g(a) : a in S }. Returns 0 only when g vanishes on a finite S.
Integer fixed_divisor(const SubsetSpec& spec, const IntPoly& g);

} // namespace ivp
