#include "doctest.h"

#include <set>

#include "abelpci/errors.hpp"
#include "abelpci/groupcore.hpp"
#include "abelpci/numtheory.hpp"
#include "abelpci/rational.hpp"
#include "brute.hpp"
#include "corpus.hpp"

using namespace abelpci;

TEST_CASE("spec parsing and printing") {
    const auto s = AbelianGroupSpec::parse("3:[1,2];2:[1,1]");
    REQUIRE(s.parts().size() == 2);
    CHECK(s.parts()[0].prime() == 2);
    CHECK(s.to_string() == "2:[1,1];3:[2,1]");
    CHECK(s.order() == 4 * 27);
    CHECK(AbelianGroupSpec::parse(" 2 : [ 3 ] ").to_string() == "2:[3]");
    CHECK(AbelianGroupSpec::parse("5:[]").order() == 1);

    for (const char* bad : {"", "4:[1]", "2:[0]", "2:[1", "2:1", "2:[1];2:[2]", "2:[a]", "x", "2:[1],3:[1]", "1:[1]"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(AbelianGroupSpec::parse(bad), InputError);
    }
}

TEST_CASE("primary spec invariants") {
    const auto s = PrimaryGroupSpec::from_exponents(2, {1, 3, 1, 2});
    CHECK(s.to_string() == "2:[3,2,1,1]");
    CHECK(s.rank() == 7);
    CHECK(s.max_exponent() == 3);
    CHECK(s.order() == 128);
    CHECK(s.multiplicity_of(1) == 2);
    CHECK(s.multiplicity_of(4) == 0);
    CHECK_FALSE(s.is_cyclic());
    CHECK(PrimaryGroupSpec(3, {{2, 1}}).is_cyclic());
    CHECK_THROWS_AS(PrimaryGroupSpec(2, {{1, 1}, {2, 1}}), InputError);
    CHECK_THROWS_AS(PrimaryGroupSpec(6, {{1, 1}}), InputError);
}

TEST_CASE("element layout is mixed radix with the last factor fastest") {
    AbelianGroup g(AbelianGroupSpec::parse("2:[2,1];3:[1]"));
    REQUIRE(g.factor_count() == 3);
    CHECK(g.factors()[0].order == 4);
    CHECK(g.factors()[1].order == 2);
    CHECK(g.factors()[2].order == 3);
    CHECK(g.order() == 24);
    CHECK(g.exponent() == 12);
    CHECK(g.element_at(1).exps == std::vector<std::uint64_t>{0, 0, 1});
    CHECK(g.element_at(3).exps == std::vector<std::uint64_t>{0, 1, 0});
    CHECK(g.format(g.element_at(23)) == "(3,1,2)");
    for (std::size_t i = 0; i < g.order(); ++i) CHECK(g.index_of(g.element_at(i)) == i);
}

TEST_CASE("group axioms against brute-force arithmetic") {
    for (const char* text : {"2:[3,1]", "3:[2,1]", "2:[1];3:[1];5:[1]", "2:[1,1];3:[2]"}) {
        AbelianGroup g(AbelianGroupSpec::parse(text));
        brute::Group b(g);
        for (std::size_t x = 0; x < g.order(); ++x) {
            CHECK(g.element_order(g.element_at(x)) == b.order_of(x));
            CHECK(g.mul_index(x, g.index_of(g.inverse(g.element_at(x)))) == 0);
            for (std::size_t y = 0; y < g.order(); y += 3) {
                CHECK(g.mul_index(x, y) == b.mul(x, y));
                CHECK(g.mul_index(x, y) == g.mul_index(y, x));
            }
            CHECK(g.index_of(g.power(g.element_at(x), 5)) == b.pow(x, 5));
        }
    }
}

TEST_CASE("canonical long generator sequence") {
    const auto s = PrimaryGroupSpec::from_exponents(2, {2, 1, 1});
    const auto seq = long_generator_sequence(s);
    std::vector<std::string> names;
    for (const auto& g : seq) names.push_back(to_string(g));
    CHECK(names == std::vector<std::string>{"x_{(2,1),1}", "x_{(2,1),2}", "x_{(1,2),1}", "x_{(1,1),1}"});
    CHECK(is_power_monotone(s, seq));

    AbelianGroup g(s);
    // x_{(2,1),1} = x^2 in the C_4 factor, x_{(2,1),2} = x.
    CHECK(g.format(embed_generator(s, seq[0])) == "(2,0,0)");
    CHECK(g.format(embed_generator(s, seq[1])) == "(1,0,0)");
    CHECK(g.format(embed_generator(s, seq[2])) == "(0,0,1)");
    CHECK(g.format(embed_generator(s, seq[3])) == "(0,1,0)");
}

TEST_CASE("the chain is a composition series") {
    for (const auto& text : corpus::primary_specs(2, 5)) {
        const auto s = AbelianGroupSpec::parse(text).parts().front();
        AbelianGroup g(s);
        const auto seq = long_generator_sequence(s);
        REQUIRE(seq.size() == s.rank());
        std::vector<GroupElement> prefix;
        std::size_t prev = 1;
        for (const auto& gen : seq) {
            prefix.push_back(embed_generator(s, gen));
            const auto h = subgroup_closure_indices(g, prefix);
            CHECK(h.size() == prev * 2);
            prev = h.size();
        }
        CHECK(prev == g.order());
    }
}

TEST_CASE("generator order overrides") {
    const auto s = PrimaryGroupSpec::from_exponents(3, {2, 1});
    const auto ord = parse_generator_order(s, "1.1.1,2.1.1,2.1.2");
    CHECK(ord.size() == 3);
    CHECK(is_power_monotone(s, ord));
    CHECK_THROWS_AS(parse_generator_order(s, "2.1.2,2.1.1,1.1.1"), InputError);
    CHECK_THROWS_AS(parse_generator_order(s, "2.1.1,2.1.2"), InputError);
    CHECK_THROWS_AS(parse_generator_order(s, "2.1.1,2.1.2,1.1.1,1.1.1"), InputError);
    CHECK_THROWS_AS(parse_generator_order(s, "2.1.1;2.1.2;1.1.1"), InputError);
    CHECK_THROWS_AS(parse_generator_order(s, "2.2.1,2.1.2,1.1.1"), InputError);
}

TEST_CASE("subgroup closure") {
    AbelianGroup g(AbelianGroupSpec::parse("2:[2,1]"));
    CHECK(subgroup_closure_indices(g, {}) == std::vector<std::size_t>{0});
    const auto h = subgroup_closure(g, {GroupElement{{1, 1}}});
    CHECK(h.size() == 4);
    CHECK(subgroup_closure_indices(g, {GroupElement{{2, 0}}, GroupElement{{0, 1}}}).size() == 4);
    CHECK(subgroup_closure_indices(g, {GroupElement{{1, 0}}, GroupElement{{0, 1}}}).size() == 8);
}

TEST_CASE("number theory helpers") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(36) == 12);
    CHECK(mobius(1) == 1);
    CHECK(mobius(30) == -1);
    CHECK(mobius(12) == 0);
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(ipow(3, 4) == 81);
    for (std::uint64_t n = 1; n <= 200; ++n) {
        std::uint64_t sum = 0;
        for (auto d : divisors(n)) sum += euler_phi(d);
        CHECK(sum == n);
        std::int64_t ms = 0;
        for (auto d : divisors(n)) ms += mobius(d);
        CHECK(ms == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("rationals print as num/den") {
    CHECK(to_string(make_rational(-2, 8)) == "-1/4");
    CHECK(to_string(make_rational(3, 1)) == "3/1");
    CHECK(to_string(Rational(0)) == "0/1");
    CHECK(parse_rational("6/-4") == make_rational(-3, 2));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("1.5"), InputError);
    CHECK_THROWS_AS(parse_rational(""), InputError);
}
