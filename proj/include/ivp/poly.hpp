#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over Z, rational polynomials in the
 *        normalized form g/d, and the generalized falling-factorial
 *        (Newton) basis F_i(x) = (x - a_0)...(x - a_{i-1}).
 */

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ivp/arith.hpp"

namespace ivp {

/// Integer polynomial, coefficients in ascending degree. The zero
/// polynomial has no coefficients; otherwise the leading one is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coefficients);
    IntPoly(std::initializer_list<long> coefficients);

    static IntPoly constant(Integer c);
    static IntPoly x();
    /// (x - root)
    static IntPoly linear_root(const Integer& root);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Integer>& coefficients() const { return coeffs_; }
    /// Coefficient of x^i, zero beyond the degree.
    Integer coeff(std::size_t i) const;
    /// Precondition: !is_zero().
    const Integer& leading() const { return coeffs_.back(); }

    Integer operator()(const Integer& x) const;
    Rational operator()(const Rational& x) const;

    IntPoly derivative() const;

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);
    IntPoly& operator*=(const Integer& rhs);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
    friend IntPoly operator*(IntPoly a, const Integer& b) { return a *= b; }
    friend IntPoly operator*(const Integer& b, IntPoly a) { return a *= b; }
    friend IntPoly operator-(IntPoly a);
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

/// gcd of the coefficients; 0 for the zero polynomial.
Integer content(const IntPoly& g);
/// g / content(g) with a positive leading coefficient; zero stays zero.
IntPoly primitive_part(const IntPoly& g);
IntPoly pow(const IntPoly& g, unsigned exponent);
/// Divides every coefficient by c; c must divide all of them.
IntPoly divide_coefficients(const IntPoly& g, const Integer& c);
/// q with a = q*b exactly, or std::nullopt when b does not divide a in Z[x].
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);
/// Greatest common divisor in Z[x], positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Total order used to list factors deterministically: degree, then
/// coefficient magnitudes from the leading term down, then signed values.
bool canonical_less(const IntPoly& a, const IntPoly& b);

/// f = g/d with d >= 1 minimal, i.e. gcd(content(g), d) = 1.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(IntPoly numerator, Integer denominator = 1);

    const IntPoly& numerator() const { return num_; }
    const Integer& denominator() const { return den_; }
    int degree() const { return num_.degree(); }

    Rational operator()(const Integer& x) const;

    friend bool operator==(const RatPoly&, const RatPoly&) = default;

private:
    IntPoly num_;
    Integer den_{1};
};

/// Exact value f(x), reduced.
Rational eval(const RatPoly& f, const Integer& x);

/// Coordinates b_0..b_k of a degree-k polynomial in the basis
/// F_0 = 1, F_i = (x - a_0)...(x - a_{i-1}) over nodes a_0..a_{k-1}.
struct NewtonForm {
    std::vector<Integer> nodes;
    std::vector<Integer> coefficients;

    friend bool operator==(const NewtonForm&, const NewtonForm&) = default;
};

/// Repeated synthetic division by (x - a_0), (x - a_1), ...; stays in Z.
/// Uses the first deg(g) nodes. Throws on duplicate nodes or too few nodes.
NewtonForm to_newton(const IntPoly& g, std::span<const Integer> nodes);
IntPoly from_newton(const NewtonForm& nf);
/// F_r over the first r nodes.
IntPoly falling_product(std::span<const Integer> nodes, std::size_t r);

enum class TermOrder { Descending, Ascending };

/// "18x^6-48x^5+47x^4-29x^2+41x+6"; zero prints as "0".
std::string to_string(const IntPoly& g, TermOrder order = TermOrder::Descending);
/// Numerator alone when d = 1, otherwise "(g)/d".
std::string to_string(const RatPoly& f, TermOrder order = TermOrder::Descending);
/// Interchange form "coeffs:c0,c1,...[/d]".
std::string to_coeffs_string(const RatPoly& f);

/// Expression in x with + - * ^, parentheses and implicit multiplication
/// (`18x^6`, `x(x-1)`), optionally followed by `/<positive integer>`;
/// or `coeffs:c0,c1,...[/d]`. Throws ParseError with a character position.
RatPoly parse_poly(std::string_view text);

} // namespace ivp
