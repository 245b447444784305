#include "doctest.h"

#include <random>

#include "abelpci/errors.hpp"
#include "abelpci/exactalg.hpp"
#include "abelpci/numtheory.hpp"
#include "brute.hpp"

using namespace abelpci;

namespace {

GroupPtr grp(const char* text) { return make_group(AbelianGroupSpec::parse(text)); }

AlgebraElement random_element(GroupPtr g, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    std::vector<Rational> c(g->order());
    for (auto& q : c) q = make_rational(num(rng), static_cast<std::uint64_t>(den(rng)));
    return AlgebraElement(g, std::move(c));
}

}  // namespace

TEST_CASE("basic element operations") {
    auto g = grp("2:[2]");
    const auto one = AlgebraElement::identity(g);
    CHECK(one[0] == 1);
    CHECK(AlgebraElement(g).is_zero());
    const auto x = AlgebraElement::basis(g, GroupElement{{1}});
    CHECK(convolve(x, x) == AlgebraElement::basis(g, GroupElement{{2}}));
    CHECK(x.translate(GroupElement{{3}}) == one);
    CHECK((x - x).is_zero());
    CHECK((x * make_rational(1, 2))[1] == make_rational(1, 2));
    CHECK_THROWS_AS(AlgebraElement(g, {1, 2}), InputError);
    CHECK_FALSE(AlgebraElement::identity(grp("3:[1]")) == one);
    CHECK_THROWS_AS(convolve(one, AlgebraElement::identity(grp("3:[1]"))), InputError);
}

TEST_CASE("ring axioms hold exactly on random elements") {
    std::mt19937_64 rng(5);
    for (const char* text : {"2:[2,1]", "3:[1,1]", "2:[1];3:[1]"}) {
        auto g = grp(text);
        for (int rep = 0; rep < 8; ++rep) {
            const auto a = random_element(g, rng);
            const auto b = random_element(g, rng);
            const auto c = random_element(g, rng);
            CHECK(convolve(a, b) == convolve(b, a));
            CHECK(convolve(convolve(a, b), c) == convolve(a, convolve(b, c)));
            CHECK(convolve(a, b + c) == convolve(a, b) + convolve(a, c));
            CHECK(convolve(a, AlgebraElement::identity(g)) == a);
        }
    }
}

TEST_CASE("subgroup averages and e_z are idempotent") {
    auto g = grp("3:[2,1]");
    for (std::size_t i = 0; i < g->order(); ++i) {
        const auto z = g->element_at(i);
        const auto h = subgroup_closure_indices(*g, {z});
        const auto avg = AlgebraElement::subgroup_average(g, h);
        CHECK(is_idempotent(avg));
        CHECK(stabilizer(avg) == h);
        if (g->element_order(z) == 3) {
            CHECK(e_of(g, z) == avg);
            CHECK(is_idempotent(e_prime_of(g, z)));
            CHECK(are_orthogonal(e_of(g, z), e_prime_of(g, z)));
        }
    }
}

TEST_CASE("factored idempotents expand only when z is outside K and z^p inside") {
    auto g = grp("2:[2,1]");
    const GroupElement x{{1, 0}}, x2{{2, 0}}, y{{0, 1}};
    FactoredIdempotent ok{{y}, x2};
    const auto e = expand_factored(g, ok);
    CHECK(is_idempotent(e));
    CHECK(e == convolve(AlgebraElement::subgroup_average(g, subgroup_closure_indices(*g, {y})), e_prime_of(g, x2)));
    CHECK_THROWS_AS(expand_factored(g, {{y}, y}), InvariantError);
    CHECK_THROWS_AS(expand_factored(g, {{y}, x}), InvariantError);
    CHECK(expand_factored(g, {{x, y}, std::nullopt}) == AlgebraElement::subgroup_average(g, subgroup_closure_indices(*g, {x, y})));
}

TEST_CASE("kernel and field of brute-force PCIs") {
    for (const char* text : {"2:[3,1]", "3:[2,1]", "2:[1,1];3:[1]", "5:[2]"}) {
        auto g = grp(text);
        brute::Group b(*g);
        std::uint64_t total = 0;
        for (const auto& pci : brute::rational_pcis(b)) {
            const AlgebraElement e(g, pci.e);
            const auto info = kernel_and_field(e);
            CHECK(info.quotient_order == pci.quotient_order);
            CHECK(info.dimension == euler_phi(pci.quotient_order));
            if (g->is_primary()) {
                REQUIRE(info.field_index.has_value());
                CHECK(ipow(g->prime(), *info.field_index) == pci.quotient_order);
            }
            total += info.dimension;
        }
        CHECK(total == g->order());
    }
    auto g = grp("2:[1]");
    CHECK_THROWS_AS(kernel_and_field(AlgebraElement::basis(g, GroupElement{{1}})), InputError);
}

TEST_CASE("Bareiss rank") {
    using R = std::vector<Rational>;
    CHECK(rational_rank({}) == 0);
    CHECK(rational_rank({R{0, 0}, R{0, 0}}) == 0);
    CHECK(rational_rank({R{1, 2}, R{2, 4}}) == 1);
    CHECK(rational_rank({R{1, 2, 3}, R{4, 5, 6}, R{7, 8, 9}}) == 2);
    CHECK(rational_rank({R{make_rational(1, 3), 1}, R{1, make_rational(1, 7)}}) == 2);
    CHECK(rational_rank({R{0, 1}, R{1, 0}, R{1, 1}}) == 2);
    CHECK_THROWS_AS(rational_rank({R{1, 2}, R{1}}), InputError);
    std::vector<R> hilbert(6, R(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) hilbert[i][j] = make_rational(1, static_cast<std::uint64_t>(i + j + 1));
    CHECK(rational_rank(hilbert) == 6);
}

TEST_CASE("lift along an embedding preserves products") {
    auto h = grp("2:[2]");
    auto g = grp("2:[2];3:[1]");
    std::vector<std::size_t> map;
    for (std::size_t i = 0; i < h->order(); ++i) map.push_back(g->index_of(GroupElement{{h->element_at(i).exps[0], 0}}));
    std::mt19937_64 rng(9);
    const auto a = random_element(h, rng);
    const auto b = random_element(h, rng);
    CHECK(lift(convolve(a, b), g, map) == convolve(lift(a, g, map), lift(b, g, map)));
}

TEST_CASE("canonical order is a strict weak order") {
    auto g = grp("2:[1]");
    const AlgebraElement a(g, {make_rational(1, 2), make_rational(1, 2)});
    const AlgebraElement b(g, {make_rational(1, 2), make_rational(-1, 2)});
    CHECK(canonical_less(b, a));
    CHECK_FALSE(canonical_less(a, b));
    CHECK_FALSE(canonical_less(a, a));
}
