#include "diffpass/errors.hpp"
#include "diffpass/ranking.hpp"

#include "builders.hpp"
#include "random_instances.hpp"

#include "doctest.h"

using namespace diffpass;
using testing::Builder;
using testing::du;

TEST_CASE("orderly compares total order first") {
    auto r = Ranking::orderly({2, 2});
    CHECK(r.less(du(1, {0, 1}), du(1, {1, 0})));
    CHECK(r.less(du(2, {1, 0}), du(1, {1, 1})));
    CHECK(r.less(du(1, {1, 0}), du(2, {1, 0})));
    CHECK(r.compare(du(1, {2, 0}), du(1, {2, 0})) == std::strong_ordering::equal);
}

TEST_CASE("elimination compares the unknown first") {
    auto r = Ranking::elimination({2, 2});
    CHECK(r.less(du(1, {3, 3}), du(2, {0, 0})));
    CHECK(r.less(du(2, {1, 0}), du(2, {0, 2})));
}

TEST_CASE("class_of and leading derivative") {
    Builder P{{2, 1}};
    auto r = Ranking::orderly(P.amb);
    CHECK(class_of(r, P.x(1) * P.x(2) + P.c(4)).is_base());
    CHECK(class_of(r, P.u(1, {0, 1}) + P.u(1, {1, 0})) == class_of(r, du(1, {1, 0})));
    CHECK(ClassKey::base() < class_of(r, du(1, {0, 0})));
    auto lead = leading_derivative(r, P.x(1) * P.u(1, {0, 1}) + P.u(1, {0, 0}));
    REQUIRE(lead);
    CHECK(lead->var == du(1, {0, 1}));
    CHECK_FALSE(lead->block_tie);
    CHECK_FALSE(leading_derivative(r, P.x(1)).has_value());
}

TEST_CASE("standard rankings pass the audit") {
    for (Ambient amb : {Ambient{1, 1}, Ambient{2, 2}, Ambient{3, 2}}) {
        CHECK(audit_compatibility(Ranking::orderly(amb), {3, 500}).passed());
        CHECK(audit_compatibility(Ranking::elimination(amb), {3, 500}).passed());
    }
}

TEST_CASE("adversarial weights fail with a counterexample") {
    Ambient amb{2, 1};
    CHECK_THROWS_AS(Ranking::from_weights(amb, {{1, 0, 0}}), StructuralError);
    auto r = Ranking::unchecked_weights(amb, {{1, 0, 0}});
    auto report = audit_compatibility(r, {2, 100});
    CHECK_FALSE(report.passed());
    REQUIRE_FALSE(report.counterexamples.empty());
    bool axiom_b = false;
    for (const auto& c : report.counterexamples) axiom_b |= c.axiom == "b";
    CHECK(axiom_b);
}

TEST_CASE("a negative weight breaks order preservation") {
    Ambient amb{2, 1};
    auto r = Ranking::unchecked_weights(amb, {{0, 1, -1}, {0, 1, 1}});
    CHECK_FALSE(audit_compatibility(r, {3, 0}).passed());
}

TEST_CASE("weights with a positive total-order row are accepted") {
    Ambient amb{2, 1};
    auto r = Ranking::from_weights(amb, {{0, 1, 1}, {1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
    CHECK(r.audited());
    CHECK(r.less(du(1, {1, 0}), du(1, {0, 1})));
}

TEST_CASE("malformed weight rows are structural errors") {
    CHECK_THROWS_AS(Ranking::unchecked_weights({2, 1}, {{1, 1}}), StructuralError);
    CHECK_THROWS_AS(Ranking::unchecked_weights({2, 1}, {}), StructuralError);
}

TEST_CASE("coarsened ranking yields block ties") {
    Builder P{{2, 1}};
    auto r = Ranking::orderly(P.amb).coarsened(
        [](const Derivative& d) { return RankKey{static_cast<std::int64_t>(d.order.total())}; }, "by-order");
    CHECK(r.audited());
    CHECK(r.compare(du(1, {1, 0}), du(1, {0, 1})) == std::strong_ordering::equal);
    CHECK(r.total_less(du(1, {0, 1}), du(1, {1, 0})));
    auto lead = leading_derivative(r, P.u(1, {1, 0}) + P.u(1, {0, 1}));
    REQUIRE(lead);
    CHECK(lead->block_tie);
    CHECK(lead->var == du(1, {1, 0}));
}

TEST_CASE("coarsening that breaks the axioms is left unaudited") {
    auto base = Ranking::orderly({2, 1});
    auto bad = [](const Derivative& d) {
        return RankKey{d.order.total() == 0 ? 0 : (d.order.entries()[0] == 1 && d.order.total() == 1 ? 1 : 2)};
    };
    CHECK_FALSE(base.coarsened(bad, "bad").audited());
}

TEST_CASE("property: shifts preserve order under the standard rankings") {
    testing::Rng rng(7);
    Ambient amb{3, 2};
    for (const auto& r : {Ranking::orderly(amb), Ranking::elimination(amb)}) {
        for (int t = 0; t < 400; ++t) {
            auto u = testing::random_derivative(rng, amb, 6);
            auto v = testing::random_derivative(rng, amb, 6);
            for (std::size_t k = 0; k < amb.n; ++k) {
                Derivative su{u.unknown, u.order.shifted(k)};
                Derivative sv{v.unknown, v.order.shifted(k)};
                CHECK(r.less(u, su));
                if (r.less(u, v)) CHECK(r.less(su, sv));
            }
        }
    }
}
