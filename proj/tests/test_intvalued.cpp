#include <doctest.h>

#include "instances.hpp"
#include "ivp/error.hpp"
#include "ivp/intvalued.hpp"
#include "ivp/oracle.hpp"

using namespace ivp;

using Ints = std::vector<Integer>;

namespace {

const RatPoly kSextic = parse_poly("(18x^6-48x^5+47x^4-29x^2+41x+6)/6");
const RatPoly kNinths = parse_poly("(2x^6+9x^5-38x^4-21x^3+57x^2-42x+9)/9");

} // namespace

TEST_CASE("membership") {
    CHECK(is_integer_valued(parse_poly("(x^2-x)/2"), SubsetSpec::integers()).member);
    auto v = is_integer_valued(parse_poly("(x^2+1)/2"), SubsetSpec::integers());
    CHECK_FALSE(v.member);
    CHECK(v.failing_node == std::optional<Integer>(0));
    CHECK(is_integer_valued(parse_poly("(x^2-2x)/8"), SubsetSpec::progression(2, 0)).member);
    CHECK_FALSE(is_integer_valued(parse_poly("(x^2-2x)/8"), SubsetSpec::integers()).member);
    CHECK(is_integer_valued(parse_poly("x^3+1"), SubsetSpec::squares()).member);
    CHECK(is_integer_valued(parse_poly("(x^2-x)/2"), SubsetSpec::squares()).member);
    CHECK_FALSE(is_integer_valued(kSextic, SubsetSpec::integers()).member);
    CHECK_FALSE(is_integer_valued(kNinths, SubsetSpec::integers()).member);
}

TEST_CASE("membership through Newton coefficients") {
    CHECK(is_integer_valued_newton(parse_poly("(x^2-x)/2"), SubsetSpec::integers()).member);
    auto v = is_integer_valued_newton(parse_poly("(x^2+1)/2"), SubsetSpec::integers());
    CHECK_FALSE(v.member);
    CHECK(v.failing_node == std::optional<Integer>(0));
    CHECK(is_integer_valued_newton(RatPoly(falling_product(Ints{0, 1, 2}, 3), 6), SubsetSpec::integers()).member);
    CHECK_FALSE(is_integer_valued_newton(RatPoly(falling_product(Ints{0, 1, 2}, 3), 12), SubsetSpec::integers()).member);
}

TEST_CASE("membership paths agree on random input") {
    std::mt19937_64 rng(17);
    const SubsetSpec sets[] = {SubsetSpec::integers(), SubsetSpec::progression(2, 0), SubsetSpec::progression(3, 1),
                               SubsetSpec::squares(), SubsetSpec::finite({-4, 0, 1, 3, 9, 10, 22})};
    int members = 0;
    for (int i = 0; i < 300; ++i) {
        const auto& spec = sets[i % 5];
        RatPoly f = testing::random_ratpoly(rng, 5, 9, 24);
        if (auto m = testing::primitive_member(spec, f.numerator(), 24); m && i % 3 == 0) f = *m;
        const bool a = is_integer_valued(f, spec).member;
        CHECK(a == is_integer_valued_newton(f, spec).member);
        CHECK(a == oracle::brute_membership(f, spec, 300));
        members += a;
    }
    CHECK(members > 20);
}

TEST_CASE("image primitivity") {
    CHECK(is_image_primitive(parse_poly("(x^2+x)/2"), SubsetSpec::integers()).primitive);
    auto v = is_image_primitive(parse_poly("x^2+x"), SubsetSpec::integers());
    CHECK_FALSE(v.primitive);
    CHECK(v.offending_prime == std::optional<Integer>(2));
    CHECK_FALSE(is_image_primitive(parse_poly("x(x-1)(x-2)/2"), SubsetSpec::integers()).primitive);
    CHECK(is_image_primitive(parse_poly("x^2+1"), SubsetSpec::squares()).primitive);
    // A prime outside k!_S that divides the content.
    CHECK(is_image_primitive(parse_poly("7x+7"), SubsetSpec::integers()).offending_prime == std::optional<Integer>(7));
    CHECK_THROWS_AS(is_image_primitive(kSextic, SubsetSpec::integers()), Error);
}

TEST_CASE("content primes join the primitivity test set") {
    // 2 divides the value of 2x^2+x at the first three elements but not at 7.
    auto v = is_image_primitive(parse_poly("2x^2+x"), SubsetSpec::finite({0, 2, 4, 7}));
    CHECK(v.primitive);
}

TEST_CASE("image primitivity agrees with value gcds") {
    std::mt19937_64 rng(23);
    const SubsetSpec sets[] = {SubsetSpec::integers(), SubsetSpec::progression(3, 1), SubsetSpec::squares(),
                               SubsetSpec::finite({1, 2, 5, 6, 13, 14, 21})};
    for (int i = 0; i < 200; ++i) {
        const auto& spec = sets[i % 4];
        const IntPoly g = testing::random_numerator(rng, 5, 9);
        const Integer d = fixed_divisor(spec, g);
        if (d == 0) continue;
        for (const auto& d1 : positive_divisors(d)) {
            RatPoly f(g, d1);
            if (f.denominator() != d1) continue;
            Integer value_gcd = 0;
            for (const auto& a : enumerate(spec, std::min<std::size_t>(200, spec.size().value_or(200))))
                value_gcd = gcd(value_gcd, g(a));
            CHECK(is_image_primitive(f, spec).primitive == (value_gcd == d1));
        }
    }
}

TEST_CASE("small irreducibility reports") {
    auto half = irreducibility_report(parse_poly("(x^2-x)/2"), SubsetSpec::integers());
    CHECK(half.verdict == Verdict::Irreducible);
    REQUIRE(half.splits.size() == 1);
    REQUIRE(half.splits[0].witness);
    CHECK(half.splits[0].witness->p == 2);
    CHECK(half.splits[0].witness->r == 1);
    CHECK(half.splits[0].witness->s == 0);
    CHECK(half.splits[0].g1_newton.coefficients == Ints{0, 1});
    CHECK(half.splits[0].g2_newton.coefficients == Ints{-1, 1});

    auto cubic = irreducibility_report(parse_poly("x(x-1)(x-2)/2"), SubsetSpec::integers());
    CHECK(cubic.verdict == Verdict::Reducible);
    CHECK(cubic.constant_factor == std::optional<Integer>(3));
    REQUIRE(cubic.splits.size() == 3);
    CHECK(cubic.splits[2].split.g1 == IntPoly{-2, 1});
    CHECK(cubic.splits[2].split.g2 == IntPoly{0, -1, 1});
    CHECK_FALSE(cubic.splits[2].witness);

    auto even = irreducibility_report(parse_poly("(x^2-2x)/8"), SubsetSpec::progression(2, 0));
    CHECK(even.verdict == Verdict::Irreducible);
    CHECK(even.nodes == Ints{0, 2, 4});
}

TEST_CASE("report preconditions") {
    CHECK_THROWS_WITH_AS(irreducibility_report(kSextic, SubsetSpec::integers()), doctest::Contains("not integer-valued"),
                         Error);
    CHECK_THROWS_AS(irreducibility_report(parse_poly("7/2"), SubsetSpec::integers()), Error);
}

TEST_CASE("formal reports reproduce the worked sextics") {
    auto a = formal_irreducibility_report(kSextic, SubsetSpec::integers());
    CHECK_FALSE(a.preconditions_checked);
    CHECK_FALSE(a.integer_valued);
    CHECK_FALSE(a.image_primitive.has_value());
    CHECK(a.verdict == Verdict::Irreducible);
    CHECK(a.nodes == Ints{0, 1, 2, 3, 4, 5, 6});
    REQUIRE(a.splits.size() == 1);
    CHECK(a.splits[0].g1_newton.coefficients == Ints{2, 3, 6, 2});
    CHECK(a.splits[0].g2_newton.coefficients == Ints{3, 4, 3, 9});
    REQUIRE(a.splits[0].witness);
    CHECK(a.splits[0].witness->p == 3);
    CHECK(a.splits[0].witness->r == 0);
    CHECK(a.splits[0].witness->s == 1);
    CHECK(a.splits[0].witness->b_r == 2);
    CHECK(a.splits[0].witness->c_s == 4);

    auto b = formal_irreducibility_report(kNinths, SubsetSpec::integers());
    CHECK(b.verdict == Verdict::Irreducible);
    REQUIRE(b.splits.size() == 1);
    CHECK(b.splits[0].g1_newton.coefficients == Ints{3, 1, 9, 1});
    CHECK(b.splits[0].g2_newton.coefficients == Ints{3, -9, 3, 2});
    REQUIRE(b.splits[0].witness);
    const auto& w = *b.splits[0].witness;
    CHECK(w.p == 3);
    CHECK(w.r == 1);
    CHECK(w.s == 3);
    CHECK(w.b_r == 1);
    CHECK(w.c_s == 2);
    CHECK(w.lhs_exponent == 1);
    CHECK(w.rhs_exponent == Valuation(0));
}

TEST_CASE("is_irreducible") {
    CHECK(is_irreducible(parse_poly("x"), SubsetSpec::integers()));
    CHECK_FALSE(is_irreducible(parse_poly("x^2-x"), SubsetSpec::integers()));
    CHECK(is_irreducible(parse_poly("(x^2-x)/2"), SubsetSpec::integers()));
    CHECK(is_irreducible(parse_poly("(x^2-2x)/8"), SubsetSpec::progression(2, 0)));
    CHECK(is_irreducible(parse_poly("x^2+1"), SubsetSpec::integers()));
    CHECK_FALSE(is_irreducible(parse_poly("x(x-1)(x-2)(x-3)/12"), SubsetSpec::integers()));
    CHECK(is_irreducible(parse_poly("x(x-1)(x-2)(x-3)/24"), SubsetSpec::integers()));
    CHECK_THROWS_AS(is_irreducible(parse_poly("(x^2+1)/2"), SubsetSpec::integers()), Error);
}

TEST_CASE("witnesses satisfy their inequality") {
    std::mt19937_64 rng(31);
    const SubsetSpec sets[] = {SubsetSpec::integers(), SubsetSpec::progression(2, 0), SubsetSpec::progression(3, 1),
                               SubsetSpec::squares()};
    int checked = 0;
    for (int i = 0; i < 400 && checked < 120; ++i) {
        const auto& spec = sets[i % 4];
        auto f = testing::primitive_member(spec, testing::random_numerator(rng, 5, 9), 24);
        if (!f) continue;
        ++checked;
        auto report = irreducibility_report(*f, spec);
        for (const auto& s : report.splits) {
            CHECK(from_newton(s.g1_newton) == s.split.g1);
            CHECK(from_newton(s.g2_newton) == s.split.g2);
            if (!s.witness) continue;
            const auto& w = *s.witness;
            const auto e = factorial_exponents(spec, w.p, f->degree());
            const auto vd = static_cast<std::int64_t>(valuation(f->denominator(), w.p).value());
            CHECK(w.lhs_exponent == vd - static_cast<std::int64_t>(e[w.r] + e[w.s]));
            CHECK(w.b_r == s.g1_newton.coefficients[w.r]);
            CHECK(w.c_s == s.g2_newton.coefficients[w.s]);
            CHECK(w.rhs_exponent == valuation(w.b_r, w.p) + valuation(w.c_s, w.p));
            REQUIRE(w.rhs_exponent.is_finite());
            CHECK(w.lhs_exponent > static_cast<std::int64_t>(w.rhs_exponent.value()));
        }
    }
    CHECK(checked >= 100);
}

TEST_CASE("multiplying by a prime makes a member reducible") {
    std::mt19937_64 rng(37);
    int checked = 0;
    for (int i = 0; i < 300 && checked < 60; ++i) {
        auto f = testing::primitive_member(SubsetSpec::integers(), testing::random_numerator(rng, 4, 9), 24);
        if (!f) continue;
        ++checked;
        for (long p : {2, 3, 5}) {
            RatPoly scaled(f->numerator() * Integer(p), f->denominator());
            CHECK_FALSE(is_irreducible(scaled, SubsetSpec::integers()));
        }
    }
}

TEST_CASE("verdicts do not depend on which d_k-ordering supplies the nodes") {
    std::mt19937_64 rng(41);
    const SubsetSpec sets[] = {SubsetSpec::integers(), SubsetSpec::progression(3, 1), SubsetSpec::squares()};
    int checked = 0;
    for (int i = 0; i < 600 && checked < 100; ++i) {
        const auto& spec = sets[i % 3];
        auto f = testing::primitive_member(spec, testing::random_numerator(rng, 5, 9), 24);
        if (!f) continue;
        ++checked;
        const std::size_t k = f->degree();
        auto dk = dk_ordering(spec, f->denominator(), k);
        Integer period = 1;
        for (const auto& m : dk.moduli) period *= m.modulus;
        // Shift every node by its own multiple of the period; congruences are preserved.
        std::vector<Integer> shifted = dk.elements;
        for (std::size_t j = 0; j < shifted.size(); ++j) shifted[j] += period * Integer(static_cast<long>(3 * j + 1 + rng() % 5));
        const auto base = irreducibility_report(*f, spec);
        const auto moved = irreducibility_report(*f, spec, shifted);
        CHECK(base.verdict == moved.verdict);
        REQUIRE(base.splits.size() == moved.splits.size());
        for (std::size_t s = 0; s < base.splits.size(); ++s)
            CHECK(base.splits[s].witness.has_value() == moved.splits[s].witness.has_value());
    }
    CHECK(checked >= 50);
}
