#include "doctest.h"

#include <cmath>
#include <numeric>

#include "abelpci/cyclotome.hpp"
#include "abelpci/errors.hpp"
#include "abelpci/numtheory.hpp"

using namespace abelpci;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) {
    std::vector<Integer> out;
    for (auto x : v) out.emplace_back(x);
    return out;
}

std::vector<Integer> poly_mul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::vector<Integer> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Numerical sum of cos(2 pi t k / m) over units k, rounded.
long numeric_ramanujan(std::uint64_t m, std::int64_t t) {
    long double s = 0;
    const long double pi = std::acos(-1.0L);
    for (std::uint64_t k = 1; k <= m; ++k) {
        if (std::gcd(k, m) == 1) s += std::cos(2 * pi * static_cast<long double>(t) * k / m);
    }
    return std::lround(static_cast<double>(s));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == ints({-1, 1}));
    CHECK(cyclotomic_polynomial(2) == ints({1, 1}));
    CHECK(cyclotomic_polynomial(6) == ints({1, -1, 1}));
    CHECK(cyclotomic_polynomial(9) == ints({1, 0, 0, 1, 0, 0, 1}));
    CHECK(cyclotomic_polynomial(12) == ints({1, 0, -1, 0, 1}));
    const auto& p105 = cyclotomic_polynomial(105);
    CHECK(p105.size() == 49);
    CHECK(p105[7] == -2);
    for (std::uint64_t n = 1; n <= 40; ++n) {
        std::vector<Integer> prod{1};
        for (auto d : divisors(n)) prod = poly_mul(prod, cyclotomic_polynomial(d));
        std::vector<Integer> target(n + 1, 0);
        target[0] = -1;
        target[n] = 1;
        CHECK(prod == target);
        CHECK(cyclotomic_polynomial(n).size() == euler_phi(n) + 1);
    }
}

TEST_CASE("field arithmetic in Q(zeta_m)") {
    for (std::uint64_t m : {1u, 2u, 3u, 4u, 8u, 9u, 12u, 15u, 25u}) {
        CAPTURE(m);
        const auto z = CycloNumber::zeta_power(m, 1);
        CHECK(CycloNumber::zeta_power(m, static_cast<std::int64_t>(m)) == CycloNumber::rational(m, 1));
        CHECK(CycloNumber::zeta_power(m, -1) * z == CycloNumber::rational(m, 1));
        CycloNumber sum(m);
        for (std::uint64_t k = 0; k < m; ++k) sum += CycloNumber::zeta_power(m, static_cast<std::int64_t>(k));
        CHECK(sum == CycloNumber::rational(m, m == 1 ? 1 : 0));
        for (std::int64_t a = -3; a < 5; ++a)
            for (std::int64_t b = 0; b < 4; ++b)
                CHECK(CycloNumber::zeta_power(m, a) * CycloNumber::zeta_power(m, b) == CycloNumber::zeta_power(m, a + b));
        const auto x = CycloNumber(m, {make_rational(1, 2), 3, make_rational(-2, 7)});
        const auto y = CycloNumber(m, {2, make_rational(5, 3)});
        CHECK(cyclo_mul(x, y) == cyclo_mul(y, x));
        CHECK(cyclo_mul(x, y + z) == cyclo_mul(x, y) + cyclo_mul(x, z));
        CHECK((x - x).is_zero());
    }
    CHECK(CycloNumber::rational(5, make_rational(2, 3)).rational_value() == make_rational(2, 3));
    CHECK_THROWS_AS(CycloNumber::zeta_power(5, 1).rational_value(), InvariantError);
    CHECK_THROWS_AS(CycloNumber::zeta_power(5, 1) + CycloNumber::zeta_power(7, 1), InputError);
}

TEST_CASE("Galois action and embeddings") {
    const std::uint64_t m = 12;
    const auto z = CycloNumber::zeta_power(m, 1);
    CHECK(galois_apply(5, z) == CycloNumber::zeta_power(m, 5));
    CHECK(galois_apply(-1, z) == CycloNumber::zeta_power(m, 11));
    CHECK_THROWS_AS(galois_apply(2, z), InputError);
    const auto x = z + CycloNumber::zeta_power(m, 7) * make_rational(3, 2);
    const auto y = CycloNumber::zeta_power(m, 2) - CycloNumber::rational(m, 4);
    for (std::int64_t k : {1, 5, 7, 11}) CHECK(galois_apply(k, x * y) == galois_apply(k, x) * galois_apply(k, y));
    CHECK(embed_cyclo(CycloNumber::zeta_power(4, 1), 12) == CycloNumber::zeta_power(12, 3));
    CHECK(embed_cyclo(x, 24) * embed_cyclo(y, 24) == embed_cyclo(x * y, 24));
}

TEST_CASE("Ramanujan sums: closed form, summation and a numerical oracle agree") {
    for (std::uint64_t m = 1; m <= 60; ++m) {
        for (std::int64_t t = 0; t < static_cast<std::int64_t>(m); ++t) {
            const auto c = ramanujan_sum(m, t);
            CHECK(c == ramanujan_sum_by_summation(m, t));
            CHECK(c == numeric_ramanujan(m, t));
        }
        CHECK(ramanujan_sum(m, 0) == static_cast<std::int64_t>(euler_phi(m)));
        CHECK(ramanujan_sum(m, 1) == mobius(m));
    }
}

TEST_CASE("group algebra over a cyclotomic field") {
    auto g = make_group(AbelianGroupSpec::parse("3:[1]"));
    const std::uint64_t m = 3;
    // (1/3) sum_k (zeta x)^k for each zeta spans a one-dimensional component.
    std::vector<CycloAlgebraElement> es;
    for (std::int64_t t = 0; t < 3; ++t) {
        CycloAlgebraElement e(g, m);
        for (std::int64_t k = 0; k < 3; ++k) e[static_cast<std::size_t>(k)] = CycloNumber::zeta_power(m, t * k) * make_rational(1, 3);
        CHECK(is_idempotent(e));
        CHECK(spans_rank_one(e));
        es.push_back(e);
    }
    CHECK(are_orthogonal(es[0], es[1]));
    CHECK(are_orthogonal(es[1], es[2]));
    CHECK(es[0].is_rational());
    CHECK_FALSE(es[1].is_rational());
    CHECK((es[1] + es[2]).is_rational());
    CHECK(es[0] + es[1] + es[2] == CycloAlgebraElement::identity(g, m));
    CHECK_FALSE(spans_rank_one(CycloAlgebraElement::identity(g, m)));
    CHECK_FALSE(spans_rank_one(CycloAlgebraElement(g, m)));
}
