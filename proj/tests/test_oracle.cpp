#include "doctest.h"

#include "abelpci/errors.hpp"
#include "abelpci/numtheory.hpp"
#include "abelpci/oracle.hpp"
#include "abelpci/pcidiagram.hpp"
#include "brute.hpp"
#include "corpus.hpp"

using namespace abelpci;

namespace {

std::vector<brute::Vec> oracle_sets(GroupPtr g) {
    std::vector<brute::Vec> out;
    for (const auto& o : oracle_pci_set(g)) out.push_back(o.element.coeffs());
    return brute::sorted(out);
}

std::vector<brute::Vec> brute_sets(const AbelianGroup& g) {
    std::vector<brute::Vec> out;
    for (const auto& p : brute::rational_pcis(brute::Group(g))) out.push_back(p.e);
    return brute::sorted(out);
}

}  // namespace

TEST_CASE("dual group and character orders") {
    const AbelianGroup g(AbelianGroupSpec::parse("2:[2,1];3:[1]"));
    const auto dual = dual_characters(g);
    CHECK(dual.size() == g.order());
    std::map<std::uint64_t, std::uint64_t> by_order;
    for (const auto& chi : dual) ++by_order[character_order(g, chi)];
    // The dual of a finite abelian group is isomorphic to it.
    CHECK(by_order == order_census(g));
}

TEST_CASE("oracle PCIs equal the brute-force kernel construction") {
    for (const char* text : {"2:[1]", "2:[2,1]", "3:[1,1]", "3:[2,1]", "2:[1,1,1]", "5:[1]", "2:[1];3:[1]",
                             "2:[2];3:[1]", "2:[1];3:[1];5:[1]", "2:[1,1];3:[2]"}) {
        CAPTURE(text);
        auto g = make_group(AbelianGroupSpec::parse(text));
        CHECK(oracle_sets(g) == brute_sets(*g));
    }
}

TEST_CASE("the rational PCI is constant on Galois orbits") {
    auto g = make_group(AbelianGroupSpec::parse("3:[2,1]"));
    for (const auto& chi : dual_characters(*g)) {
        const auto ord = character_order(*g, chi);
        const auto e = rational_pci_of_character(g, chi);
        for (std::uint64_t k = 2; k < ord; ++k) {
            if (std::gcd(k, ord) != 1) continue;
            CharacterIndex kchi = chi;
            for (std::size_t i = 0; i < kchi.t.size(); ++i) kchi.t[i] = kchi.t[i] * k % g->factors()[i].order;
            CHECK(rational_pci_of_character(g, kchi) == e);
        }
    }
}

TEST_CASE("oracle orbit sizes are phi of the character order") {
    auto g = make_group(AbelianGroupSpec::parse("2:[3,1]"));
    std::uint64_t total = 0;
    for (const auto& o : oracle_pci_set(g)) {
        CHECK(o.orbit_size == euler_phi(o.character_order));
        CHECK(kernel_and_field(o.element).quotient_order == o.character_order);
        total += o.orbit_size;
    }
    CHECK(total == g->order());
    CHECK_THROWS_AS(oracle_pci_set(g, 8), InputError);
}

TEST_CASE("element order census against brute force") {
    for (const char* text : {"2:[3,2,1]", "3:[2,2]", "2:[1,1];3:[2]"}) {
        const AbelianGroup g(AbelianGroupSpec::parse(text));
        CHECK(order_census(g) == brute::order_census(brute::Group(g)));
    }
}

TEST_CASE("Wedderburn rows") {
    SUBCASE("C_9 x C_3") {
        const auto prof = wedderburn_profile(PrimaryGroupSpec(3, {{2, 1}, {1, 1}}));
        REQUIRE(prof.rows.size() == 3);
        CHECK(prof.rows[0].census_coefficient == 1);
        CHECK(prof.rows[1].census_coefficient == 4);
        CHECK(prof.rows[2].census_coefficient == 3);
        CHECK(prof.census_sums_to_order);
    }
    SUBCASE("C_4: the statement exponent gives 2 where the census gives 1") {
        const auto prof = wedderburn_profile(PrimaryGroupSpec(2, {{2, 1}}));
        REQUIRE(prof.rows.size() == 3);
        CHECK(prof.rows[2].census_coefficient == 1);
        CHECK(prof.rows[2].formula_coefficient == 1);
        CHECK(prof.rows[2].statement_coefficient == 2);
        CHECK_FALSE(prof.rows[2].statement_agree);
    }
    SUBCASE("a_r, b_r, c_r") {
        const auto prof = wedderburn_profile(PrimaryGroupSpec::from_exponents(2, {3, 1, 1}));
        REQUIRE(prof.rows.size() == 4);
        CHECK(prof.rows[1].a == 2);
        CHECK(prof.rows[1].b == 3);
        CHECK(prof.rows[2].a == 0);
        CHECK(prof.rows[2].b == 1);
        CHECK(prof.rows[2].c == 2);
        CHECK(prof.rows[3].c == 2);
    }
}

TEST_CASE("formula, census and factorization agree on every p-group in the corpus") {
    for (const auto& text : corpus::corpus_c()) {
        CAPTURE(text);
        const auto spec = AbelianGroupSpec::parse(text).parts().front();
        const auto prof = wedderburn_profile(spec);
        const auto p = spec.prime();
        Integer total = 0;
        for (const auto& r : prof.rows) {
            CHECK(r.agree);
            CHECK(r.factorization_ok);
            CHECK(r.power_part * r.coprime_part == r.formula_coefficient);
            CHECK(mpz_divisible_ui_p(r.coprime_part.get_mpz_t(), static_cast<unsigned long>(p)) == 0);
            total += r.census_coefficient * Integer(static_cast<unsigned long>(euler_phi(ipow(p, r.r))));
        }
        CHECK(total == Integer(static_cast<unsigned long>(spec.order())));
    }
}

TEST_CASE("set comparison reports a witness") {
    auto g = make_group(AbelianGroupSpec::parse("2:[1]"));
    const auto a = oracle_pci_set(g);
    std::vector<AlgebraElement> x{a[0].element, a[1].element};
    std::vector<AlgebraElement> y{a[1].element, a[0].element};
    CHECK(compare_pci_sets(x, y).equal);
    std::vector<AlgebraElement> z{a[0].element, AlgebraElement::identity(g)};
    const auto cmp = compare_pci_sets(x, z);
    CHECK_FALSE(cmp.equal);
    REQUIRE(cmp.witness.has_value());
}
