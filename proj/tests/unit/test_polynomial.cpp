#include "diffpass/errors.hpp"
#include "diffpass/polynomial.hpp"

#include "../support/builders.hpp"
#include "../support/random_instances.hpp"

#include "doctest.h"

using namespace diffpass;
using testing::Builder;
using testing::du;

namespace {
const Builder P{{2, 2}};
}

TEST_CASE("ring operations stay canonical") {
    CHECK((P.x(1) + P.u(1, {0, 0})) + (-P.x(1)) == P.u(1, {0, 0}));
    auto u = P.u(1, {0, 0});
    auto sq = u * u;
    REQUIRE(sq.size() == 1);
    CHECK(sq.terms().begin()->first == Monomial(Variable{du(1, {0, 0})}, 2));
    CHECK(scale(0, P.x(1) + u).is_zero());
    auto f = P.x(1) * u + P.c(Rational(3, 2));
    CHECK((f + scale(-1, f)).is_zero());
    CHECK((f + scale(-1, f)).terms().empty());
}

TEST_CASE("mixed ambients are rejected") {
    Builder other{{3, 1}};
    CHECK_THROWS_AS(P.x(1) + other.x(1), StructuralError);
    CHECK_THROWS_AS(P.x(1) * other.x(1), StructuralError);
    CHECK_THROWS_AS(DiffPoly::x(P.amb, 3), StructuralError);
    CHECK_THROWS_AS(DiffPoly::u(P.amb, 3, {0, 0}), StructuralError);
    CHECK_THROWS_AS(DiffPoly::u(P.amb, 1, {0, 0, 0}), StructuralError);
}

TEST_CASE("partial derivatives") {
    CHECK(partial(P.x(1) * P.x(1), Indep{1}) == scale(2, P.x(1)));
    CHECK(partial(P.u(1, {1, 0}) * P.x(2), du(1, {1, 0})) == P.x(2));
    CHECK(partial(P.x(1), du(1, {0, 0})).is_zero());
}

TEST_CASE("total derivative combines the x-partial with chain terms") {
    CHECK(total_derivative(P.u(1, {0, 0}), 1) == P.u(1, {1, 0}));
    CHECK(total_derivative(P.x(1) * P.u(1, {0, 0}), 1) == P.u(1, {0, 0}) + P.x(1) * P.u(1, {1, 0}));
    CHECK(total_derivative(P.x(1), 2).is_zero());
    CHECK_THROWS_AS(total_derivative(P.x(1), 3), StructuralError);
}

TEST_CASE("D^a for multi-indices") {
    auto f = P.x(1) * P.u(2, {0, 1}) + P.c(7);
    CHECK(total_derivative_multi(f, {0, 0}) == f);
    CHECK(total_derivative_multi(P.u(1, {0, 0}), {1, 1}) == P.u(1, {1, 1}));
    CHECK(total_derivative_multi(P.x(1) * P.x(1), {2, 0}) == P.c(2));
}

TEST_CASE("substitution") {
    Variable v = du(1, {0, 0});
    auto vp = P.u(1, {0, 0});
    CHECK(substitute(vp * vp, v, P.x(1) + P.c(1)) == P.x(1) * P.x(1) + scale(2, P.x(1)) + P.c(1));
    auto f = vp * P.x(2) + vp * vp * vp;
    CHECK(substitute(f, v, vp) == f);
    CHECK(substitute(P.x(1), v, P.x(2) * P.x(2)) == P.x(1));
}

TEST_CASE("support_derivs") {
    CHECK(support_derivs(P.x(1) * P.x(1) + P.c(3)).empty());
    auto s = support_derivs(P.u(1, {1, 0}) * P.u(2, {0, 1}));
    CHECK(s == std::set<Derivative>{du(1, {1, 0}), du(2, {0, 1})});
    CHECK(support_derivs(P.zero()).empty());
}

TEST_CASE("pretty printer") {
    auto f = P.u(1, {2, 0}) - P.u(1, {0, 1});
    CHECK(to_string(f) == "u[1,(2,0)] - u[1,(0,1)]");
    CHECK(to_string(P.zero()) == "0");
    CHECK(to_string(scale(Rational(-3, 2), P.x(1) * P.x(1)) + P.c(1)) == "-3/2*x1^2 + 1");
}

TEST_CASE("property: derivation laws on random polynomials") {
    testing::Rng rng(2024);
    for (int trial = 0; trial < 150; ++trial) {
        Ambient amb{testing::uniform(rng, 1, 3), testing::uniform(rng, 1, 3)};
        auto f = testing::random_poly(rng, amb, 4, 3, 3);
        auto g = testing::random_poly(rng, amb, 4, 3, 3);
        auto c = testing::random_coefficient(rng);
        for (std::size_t i = 1; i <= amb.n; ++i) {
            CHECK(total_derivative(f * g, i) == total_derivative(f, i) * g + f * total_derivative(g, i));
            CHECK(total_derivative(f + scale(c, g), i) == total_derivative(f, i) + scale(c, total_derivative(g, i)));
            for (std::size_t j = 1; j <= amb.n; ++j) {
                CHECK(total_derivative(total_derivative(f, i), j) == total_derivative(total_derivative(f, j), i));
            }
        }
        auto a = testing::random_index(rng, amb.n, 2);
        auto b = testing::random_index(rng, amb.n, 2);
        CHECK(total_derivative_multi(total_derivative_multi(f, b), a) == total_derivative_multi(f, add(a, b)));
    }
}
