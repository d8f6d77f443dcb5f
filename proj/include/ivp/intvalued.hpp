#pragma once

/**
 * @file intvalued.hpp
 * @brief Decision procedures for the ring Int(S,Z) of integer-valued
 *        polynomials: membership, image primitivity, and irreducibility
 *        with witness certificates.
 *
 * All three procedures evaluate or expand polynomials only at the k+1
 * points of a d_k-ordering of S (d the denominator, k the degree), which
 * form a complete test set for these properties.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "ivp/factorize.hpp"
#include "ivp/orderings.hpp"
#include "ivp/poly.hpp"
#include "ivp/sets.hpp"

namespace ivp {

struct MembershipVerdict {
    bool member = false;
    /// A d_k-ordering node where f is not an integer (non-members only).
    std::optional<Integer> failing_node;
};

/// f(a_i) in Z for every node a_i of dk_ordering(S, d, deg f).
MembershipVerdict is_integer_valued(const RatPoly& f, const SubsetSpec& spec);

/// v_p(d) <= v_p(b_i) + v_p(i!_S) for every p | d, where b_i are the Newton
/// coefficients of the numerator over the same nodes.
MembershipVerdict is_integer_valued_newton(const RatPoly& f, const SubsetSpec& spec);

struct PrimitivityVerdict {
    bool primitive = false;
    /// A prime dividing f(a) for every a in S (non-primitive only).
    std::optional<Integer> offending_prime;
};

/// Throws ivp::Error("not integer-valued") for non-members. Both the
/// test-set check and the fixed-divisor identity d = d(S, g) are run and
/// must agree.
PrimitivityVerdict is_image_primitive(const RatPoly& f, const SubsetSpec& spec);

/// Certificate that a split g = g1*g2 cannot be turned into a factorization
/// of f in Int(S,Z): v_p(d) - v_p(r!_S) - v_p(s!_S) > v_p(b_r * c_s).
struct Witness {
    Integer p;
    std::size_t r = 0;
    std::size_t s = 0;
    std::int64_t lhs_exponent = 0;
    Valuation rhs_exponent;
    Integer b_r;
    Integer c_s;
};

struct SplitAnalysis {
    TwoFactorSplit split;
    NewtonForm g1_newton;
    NewtonForm g2_newton;
    std::optional<Witness> witness;
};

enum class Verdict { Irreducible, Reducible };

struct IrreducibilityReport {
    Verdict verdict = Verdict::Irreducible;
    RatPoly f;
    std::vector<Integer> nodes;  ///< the d_k-ordering shared by every Newton form
    std::vector<SplitAnalysis> splits;
    /// First split without a witness (Reducible only).
    std::optional<std::size_t> reducible_split;
    /// False for reports built by formal_irreducibility_report.
    bool preconditions_checked = true;
    bool integer_valued = true;
    /// Unknown when f is not integer-valued.
    std::optional<bool> image_primitive = true;
    /// A prime p dividing every value of a member f; then f = p * (f/p) and
    /// the verdict is Reducible whatever the splits say.
    std::optional<Integer> constant_factor;
};

/// Requires deg f >= 1 and f in Int(S,Z); throws ivp::Error naming the
/// failed precondition otherwise. A member that is not image primitive is
/// reported Reducible through constant_factor.
IrreducibilityReport irreducibility_report(const RatPoly& f, const SubsetSpec& spec);

/// Same as above, but expands the Newton forms over caller-supplied nodes,
/// which must form a d_k-ordering of S for d = denominator, k = deg f.
IrreducibilityReport irreducibility_report(const RatPoly& f, const SubsetSpec& spec, std::vector<Integer> nodes);

/// Runs the witness search without the membership and primitivity
/// preconditions, recording whether they hold. For a non-member the verdict
/// only says whether every split carries a witness; it is not a statement
/// about factorizations in Int(S,Z).
IrreducibilityReport formal_irreducibility_report(const RatPoly& f, const SubsetSpec& spec);

/// Witness search for a single split over given nodes; nullopt when none exists.
std::optional<Witness> find_witness(const Integer& d, const NewtonForm& b, const NewtonForm& c,
                                    const SubsetSpec& spec, std::size_t k);

/// False for members that are not image primitive; throws for non-members.
bool is_irreducible(const RatPoly& f, const SubsetSpec& spec);

} // namespace ivp
