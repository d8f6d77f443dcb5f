#pragma once

/**
 * @file factorize.hpp
 * @brief Factorization in Z[x] (Berlekamp mod p, Hensel lifting,
 *        Zassenhaus recombination) and enumeration of every way to write
 *        a polynomial as a product of two nonconstant integer polynomials.
 */

#include <vector>

#include "ivp/poly.hpp"

namespace ivp {

struct FactorPower {
    IntPoly factor;  ///< primitive, irreducible, positive leading coefficient
    unsigned multiplicity = 1;
};

/// g = sign * content * prod factor^multiplicity.
struct Factorization {
    int sign = 1;
    Integer content = 1;
    std::vector<FactorPower> factors;  ///< sorted by canonical_less

    IntPoly product() const;
};

/// Throws for the zero polynomial.
Factorization factor_over_integers(const IntPoly& g);

/// g1 * g2 = g, both nonconstant, lc(g1) > 0 (the sign of g rides on g2).
struct TwoFactorSplit {
    IntPoly g1;
    IntPoly g2;

    friend bool operator==(const TwoFactorSplit&, const TwoFactorSplit&) = default;
};

/// Puts an unordered pair {a, b} with a*b = g into its canonical split:
/// the part whose primitive part is canonically smaller (then smaller
/// content) becomes g1, with the overall sign moved onto g2.
TwoFactorSplit normalize_split(const IntPoly& a, const IntPoly& b);

/// Deterministic order on normalized splits.
bool split_less(const TwoFactorSplit& a, const TwoFactorSplit& b);

/// Every unordered pair of nonconstant integer polynomials with product g,
/// including every distribution of the content; no duplicates. Empty when deg g < 2.
std::vector<TwoFactorSplit> enumerate_two_factor_splits(const IntPoly& g);

} // namespace ivp
