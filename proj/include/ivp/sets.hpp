#pragma once

/**
 * @file sets.hpp
 * @brief Symbolic subsets S of Z: all integers, arithmetic progressions
 *        aZ+b, the squares, and explicit finite lists (inline or loaded
 *        from a file).
 */

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ivp/arith.hpp"

namespace ivp {

struct Integers {};

/// { step * n + offset : n in Z }, step != 0.
struct ArithmeticProgression {
    Integer step;
    Integer offset;
};

struct Squares {};

/// Distinct elements, sorted ascending.
struct FiniteList {
    std::vector<Integer> elements;
};

/// A FiniteList that was read from `path`.
struct FileBacked {
    std::string path;
    std::vector<Integer> elements;
};

class SubsetSpec {
public:
    using Variant = std::variant<Integers, ArithmeticProgression, Squares, FiniteList, FileBacked>;

    static SubsetSpec integers();
    static SubsetSpec progression(Integer step, Integer offset);
    static SubsetSpec squares();
    /// Sorts the elements; throws on duplicates or an empty list.
    static SubsetSpec finite(std::vector<Integer> elements);
    /// One decimal integer per line; blank lines and `#` comments ignored.
    static SubsetSpec from_file(const std::string& path);

    const Variant& variant() const { return variant_; }

    /// True for the three infinite families that have closed-form orderings.
    bool is_structured() const;
    bool is_finite() const { return !is_structured(); }
    /// Cardinality of finite variants.
    std::optional<std::size_t> size() const;
    bool contains(const Integer& n) const;
    /// Elements of a finite variant (ascending); empty span otherwise.
    const std::vector<Integer>& finite_elements() const;

    /// Canonical textual form, re-parseable by parse_subset.
    std::string to_string() const;

private:
    explicit SubsetSpec(Variant v) : variant_(std::move(v)) {}
    Variant variant_;
};

/// First n elements in canonical order: Z as 0,1,-1,2,-2,...;
/// aZ+b as b, b+a, b+2a, ...; squares as 0,1,4,...; finite sets ascending.
/// Throws ivp::Error("set exhausted") if a finite set has fewer than n elements.
std::vector<Integer> enumerate(const SubsetSpec& spec, std::size_t n);

/// The closed-form simultaneous ordering of length k+1 (0..k for Z,
/// b, a+b, ..., ak+b for progressions, 0^2..k^2 for squares), or
/// std::nullopt for finite variants.
std::optional<std::vector<Integer>> canonical_sequence(const SubsetSpec& spec, std::size_t k);

/// Grammar: `Z` | `<a>Z+<b>` | `<a>Z-<b>` | `squares` | `{n1,n2,...}` | `file:<path>`.
SubsetSpec parse_subset(std::string_view text);

} // namespace ivp
