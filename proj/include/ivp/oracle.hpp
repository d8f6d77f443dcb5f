#pragma once

/**
 * @file oracle.hpp
 * @brief Slow reference implementations built from definitions only:
 *        greedy p-orderings by direct product minimization, membership by
 *        sampling, reducibility by exhaustive search over factorizations,
 *        and Kronecker's interpolation method for factoring in Z[x].
 *
 * Nothing here goes through d_k-orderings or Newton coefficients, so these
 * routines can check the fast paths independently.
 */

#include <cstddef>
#include <random>
#include <vector>

#include "ivp/factorize.hpp"
#include "ivp/orderings.hpp"
#include "ivp/poly.hpp"
#include "ivp/sets.hpp"

namespace ivp::oracle {

/// Size limits for brute_reducibility.
inline constexpr int kMaxDegree = 8;
inline constexpr long kMaxDenominator = 10000;

enum class TieBreak { Smallest, Random };

/// At step i picks the element minimizing v_p(prod_{j<i}(a - a_j)),
/// recomputing the product from scratch. `rng` is only used for TieBreak::Random.
POrdering greedy_p_ordering(std::span<const Integer> elements, const Integer& p, std::size_t k,
                            TieBreak mode = TieBreak::Smallest, std::mt19937_64* rng = nullptr);

/// f integral at the first n enumerated elements (all of S if smaller).
bool brute_membership(const RatPoly& f, const SubsetSpec& spec, std::size_t n);

/// Sample size that makes brute_membership exact for the structured
/// families at this degree (it covers a full run of consecutive terms).
std::size_t exact_sample_size(const SubsetSpec& spec, int degree);

/// True iff f = (h1/d1)(h2/d2) with both factors in Int(S,Z) for some
/// split h1*h2 of the numerator and some d1*d2 = d, or f is not image
/// primitive (then f = p * (f/p)). Requires f a member,
/// 1 <= deg f <= kMaxDegree, d <= kMaxDenominator.
bool brute_reducibility(const RatPoly& f, const SubsetSpec& spec);

/// Every divisor of g in Z[x] (positive leading coefficient, content
/// multiples included) with 1 <= degree <= max_degree, found by
/// interpolating through divisors of g's values.
std::vector<IntPoly> kronecker_divisors(const IntPoly& g, int max_degree);

/// Complete factorization by Kronecker's method; intended for degree <= 8.
Factorization kronecker_factor(const IntPoly& g);

/// All two-factor splits of g derived from kronecker_divisors.
std::vector<TwoFactorSplit> brute_two_factor_splits(const IntPoly& g);

} // namespace ivp::oracle
