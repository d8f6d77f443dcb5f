#include <doctest.h>

#include "ivp/error.hpp"
#include "ivp/oracle.hpp"
#include "ivp/orderings.hpp"

using namespace ivp;

using Ints = std::vector<Integer>;
using Seq = std::vector<std::uint64_t>;

TEST_CASE("p-orderings") {
    auto z = p_ordering(SubsetSpec::integers(), 2, 3);
    CHECK(z.elements == Ints{0, 1, 2, 3});
    CHECK(z.p_sequence == Seq{0, 0, 1, 1});

    auto fin = p_ordering(SubsetSpec::finite({1, 2, 4, 8}), 2, 3);
    CHECK(fin.elements == Ints{1, 2, 4, 8});
    CHECK(fin.p_sequence == Seq{0, 0, 1, 3});

    auto sq = p_ordering(SubsetSpec::squares(), 2, 2);
    CHECK(sq.elements == Ints{0, 1, 4});
    CHECK(sq.p_sequence == Seq{0, 0, 2});

    CHECK_THROWS_AS(p_ordering(SubsetSpec::finite({1, 2}), 2, 2), Error);
    CHECK_THROWS_AS(p_ordering(SubsetSpec::integers(), 6, 2), Error);
}

TEST_CASE("p-sequence of an explicit sequence") {
    Ints seq{0, 1, 2, 3, 4};
    CHECK(p_sequence_of(seq, 2) == Seq{0, 0, 1, 1, 3});
}

TEST_CASE("generalized factorials") {
    CHECK(factorial(SubsetSpec::integers(), 4).integer() == 24);
    CHECK(factorial(SubsetSpec::squares(), 3).integer() == 360);
    CHECK(factorial(SubsetSpec::progression(2, 0), 2).integer() == 8);
    CHECK(factorial(SubsetSpec::integers(), 0).integer() == 1);
    CHECK_THROWS_AS(factorial(SubsetSpec::finite({0, 1}), 2), Error);
    CHECK(factorial(SubsetSpec::finite({1, 2, 4, 8}), 3).integer() == 8 * 3 * 7);
}

TEST_CASE("factorial identities on structured sets") {
    for (unsigned k = 0; k <= 12; ++k) CHECK(factorial(SubsetSpec::integers(), k).integer() == ivp::factorial(k));
    for (long a : {2, 3})
        for (long b : {0, 1})
            for (unsigned k = 0; k <= 8; ++k)
                CHECK(factorial(SubsetSpec::progression(a, b), k).integer() == pow(Integer(a), k) * ivp::factorial(k));
    for (unsigned k = 1; k <= 6; ++k)
        CHECK(factorial(SubsetSpec::squares(), k).integer() == ivp::factorial(2 * k) / 2);
}

TEST_CASE("closed-form orderings match greedy orderings of long truncations") {
    const SubsetSpec sets[] = {SubsetSpec::integers(), SubsetSpec::progression(2, 0), SubsetSpec::progression(3, 1),
                               SubsetSpec::squares()};
    for (const auto& spec : sets) {
        const Ints window = enumerate(spec, 400);
        for (long p : {2, 3, 5, 7, 11, 13, 17, 19})
            for (std::size_t k : {0u, 3u, 6u}) {
                auto fast = p_ordering(spec, p, k);
                auto greedy = oracle::greedy_p_ordering(window, p, k);
                CHECK_MESSAGE(fast.p_sequence == greedy.p_sequence, spec.to_string() << " p=" << p << " k=" << k);
                CHECK(p_sequence_of(fast.elements, p) == fast.p_sequence);
            }
    }
}

TEST_CASE("d_k-orderings") {
    CHECK(dk_ordering(SubsetSpec::integers(), 6, 2).elements == Ints{0, 1, 2});
    CHECK(dk_ordering(SubsetSpec::squares(), 6, 3).elements == Ints{0, 1, 4, 9});
    auto even = dk_ordering(SubsetSpec::progression(2, 0), 4, 1);
    CHECK(even.elements == Ints{0, 2});
    REQUIRE(even.moduli.size() == 1);
    CHECK(even.moduli[0].modulus == 4);
    CHECK(dk_ordering(SubsetSpec::integers(), 0, 3).elements == Ints{0, 1, 2, 3});
    CHECK(dk_ordering(SubsetSpec::integers(), 1, 2).elements == Ints{0, 1, -1});
    CHECK_THROWS_AS(dk_ordering(SubsetSpec::finite({1, 2, 4}), 0, 2), Error);
}

TEST_CASE("d_k-ordering nodes satisfy their congruences") {
    const SubsetSpec sets[] = {SubsetSpec::integers(), SubsetSpec::progression(3, 1), SubsetSpec::squares(),
                               SubsetSpec::finite({0, 3, 5, 6, 10, 11, 17, 24})};
    for (const auto& spec : sets)
        for (long d : {2, 6, 12, 30})
            for (std::size_t k = 1; k <= 5; ++k) {
                auto dk = dk_ordering(spec, d, k);
                for (const auto& m : dk.moduli) {
                    auto ord = p_ordering(spec, m.prime, k);
                    CHECK(m.modulus == pow(m.prime, m.exponent));
                    CHECK(m.exponent == ord.p_sequence[k] + 1);
                    for (std::size_t i = 0; i <= k; ++i)
                        CHECK(mod(dk.elements[i] - ord.elements[i], m.modulus) == 0);
                }
            }
}

TEST_CASE("mu") {
    CHECK(mu(SubsetSpec::integers(), 6, 3, 0) == 3);
    CHECK(mu(SubsetSpec::integers(), 6, 3, 1) == 3);
    CHECK(mu(SubsetSpec::progression(3, 0), 6, 3, 0) == 3);
    CHECK(mu(SubsetSpec::progression(3, 0), 6, 3, 1) == 1);
    CHECK(mu(SubsetSpec::integers(), 9, 3, 1) == 9);
    CHECK(mu(SubsetSpec::integers(), 9, 3, 3) == 3);
    CHECK_THROWS_AS(mu(SubsetSpec::integers(), 2, 2, 4), Error);
    CHECK_THROWS_AS(mu(SubsetSpec::integers(), 1, 2, 0), Error);
}

TEST_CASE("mu is non-increasing in i") {
    const SubsetSpec sets[] = {SubsetSpec::integers(), SubsetSpec::progression(2, 1), SubsetSpec::squares()};
    for (const auto& spec : sets)
        for (long d : {8, 9, 27, 64})
            for (long p : {2, 3}) {
                if (d % p) continue;
                Integer previous = -1;
                for (std::size_t i = 0;; ++i) {
                    Integer m;
                    try {
                        m = mu(spec, d, p, i);
                    } catch (const Error&) {
                        break;
                    }
                    if (previous > 0) CHECK(m <= previous);
                    previous = m;
                }
            }
}

TEST_CASE("fixed divisors") {
    CHECK(fixed_divisor(SubsetSpec::integers(), IntPoly{0, -1, 1}) == 2);
    CHECK(fixed_divisor(SubsetSpec::integers(), IntPoly{0, 1}) == 1);
    CHECK(fixed_divisor(SubsetSpec::integers(), IntPoly{0, 2, -3, 1}) == 6);
    CHECK(fixed_divisor(SubsetSpec::progression(2, 0), IntPoly{0, 1}) == 2);
    CHECK(fixed_divisor(SubsetSpec::finite({1, 3}), IntPoly{0, 0, 1}) == 1);
    CHECK(fixed_divisor(SubsetSpec::finite({0, 1}), IntPoly{0, -1, 1}) == 0);
}

TEST_CASE("fixed divisor of the falling product matches the factorial") {
    const SubsetSpec sets[] = {SubsetSpec::integers(), SubsetSpec::progression(2, 0), SubsetSpec::progression(3, 1),
                               SubsetSpec::squares()};
    for (const auto& spec : sets)
        for (std::size_t r = 0; r <= 6; ++r) {
            auto nodes = dk_ordering(spec, 0, r).elements;
            CHECK(fixed_divisor(spec, falling_product(nodes, r)) == factorial(spec, r).integer());
        }
}

TEST_CASE("fixed divisor agrees with a gcd over many values") {
    const SubsetSpec sets[] = {SubsetSpec::integers(), SubsetSpec::progression(3, 1), SubsetSpec::squares()};
    const IntPoly polys[] = {IntPoly{0, 1, 1}, IntPoly{2, 0, 6}, IntPoly{0, -1, 0, 1}, IntPoly{4, 8, 4},
                             IntPoly{12, -7, 0, 0, 1}};
    for (const auto& spec : sets)
        for (const auto& g : polys) {
            Integer expected = 0;
            for (const auto& a : enumerate(spec, 200)) expected = gcd(expected, g(a));
            CHECK(fixed_divisor(spec, g) == expected);
        }
}
