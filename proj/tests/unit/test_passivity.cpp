#include "diffpass/oracle.hpp"
#include "diffpass/passivity.hpp"

#include "brute_force.hpp"
#include "builders.hpp"
#include "random_instances.hpp"

#include "doctest.h"

using namespace diffpass;
using testing::Builder;
using testing::du;

namespace {

const Builder P{{2, 1}};

SolvedSystem sys_of(std::vector<SolvedForm> eqs) { return SolvedSystem(Ranking::orderly(P.amb), std::move(eqs)); }

SolvedSystem gradient(const DiffPoly& tail2) {
    return sys_of({SolvedForm(du(1, {1, 0}), P.zero()), SolvedForm(du(1, {0, 1}), tail2)});
}

} // namespace

TEST_CASE("remainder classification") {
    CHECK(classify_remainder(P.zero()) == PairStatus::Satisfied);
    CHECK(classify_remainder(P.x(1) + P.c(1)) == PairStatus::Inconsistent);
    CHECK(classify_remainder(P.u(1, {0, 0})) == PairStatus::Obstructed);
}

TEST_CASE("check_pair on the gradient systems") {
    auto ok = gradient(-P.x(2));
    auto taus = tau_generators(ok.leads());
    REQUIRE(taus.size() == 1);
    auto good = check_pair(ok, taus[0]);
    CHECK(good.status == PairStatus::Satisfied);
    CHECK(good.remainder.is_zero());

    auto bad = gradient(-P.x(1));
    auto res = check_pair(bad, tau_generators(bad.leads())[0]);
    CHECK(res.status == PairStatus::Inconsistent);
    CHECK(res.combination == P.c(1));
    CHECK(res.remainder == P.c(1));
}

TEST_CASE("is_passive verdicts") {
    auto heat = sys_of({SolvedForm(du(1, {2, 0}), -P.u(1, {0, 1}))});
    auto r = is_passive(heat);
    CHECK(r.verdict == Verdict::Passive);
    CHECK(r.pairs.empty());
    REQUIRE(r.slice);
    CHECK(r.slice->certified);

    CHECK(is_passive(gradient(-P.x(2))).verdict == Verdict::Passive);
    CHECK(is_passive(gradient(-P.x(1))).verdict == Verdict::Inconsistent);

    auto obstructed = sys_of({SolvedForm(du(1, {1, 0}), -P.u(1, {0, 0})),
                              SolvedForm(du(1, {0, 1}), -P.x(1) * P.u(1, {0, 0}))});
    auto o = is_passive(obstructed);
    CHECK(o.verdict == Verdict::NotPassive);
    REQUIRE(o.pairs.size() == 1);
    CHECK(o.pairs[0].status == PairStatus::Obstructed);
    CHECK_FALSE(o.autoreduced);

    auto single = sys_of({SolvedForm(du(1, {1, 0}), -P.u(1, {0, 1}))});
    CHECK(is_passive(single).verdict == Verdict::Passive);
}

TEST_CASE("theta is the least lead class") {
    auto r = is_passive(sys_of({SolvedForm(du(1, {2, 0}), P.zero()), SolvedForm(du(1, {0, 1}), P.zero())}));
    REQUIRE(r.theta);
    CHECK(*r.theta == class_of(Ranking::orderly(P.amb), du(1, {0, 1})));
}

TEST_CASE("unsolvable systems are not passive") {
    auto r = is_passive(sys_of({SolvedForm(du(1, {0, 1}), -P.u(1, {2, 0}))}));
    CHECK(r.verdict == Verdict::NotPassive);
    CHECK_FALSE(r.solvability.solvable);
}

TEST_CASE("coincident leads") {
    auto r = Ranking::orderly(P.amb);
    SolvedForm a(du(1, {1, 0}), -P.x(2));
    auto dup = coincident_lead_analysis(r, {a, a});
    CHECK(dup.merged.size() == 1);
    CHECK(dup.consistent());

    auto clash = coincident_lead_analysis(r, {a, SolvedForm(du(1, {1, 0}), -P.x(1))});
    CHECK(clash.merged.size() == 1);
    REQUIRE(clash.relations.size() == 1);
    CHECK(clash.relations[0].remainder == P.x(1) - P.x(2));
    CHECK(clash.relations[0].status == PairStatus::Inconsistent);
    CHECK_FALSE(clash.consistent());
    CHECK(is_passive(r, {a, SolvedForm(du(1, {1, 0}), -P.x(1))}).verdict == Verdict::Inconsistent);

    SolvedForm b(du(1, {0, 1}), P.zero());
    auto apart = coincident_lead_analysis(r, {a, b});
    CHECK(apart.merged.equations() == std::vector<SolvedForm>{a, b});
    CHECK(apart.relations.empty());
}

TEST_CASE("quotient census") {
    auto heat = quotient_census(sys_of({SolvedForm(du(1, {2, 0}), -P.u(1, {0, 1}))}), 2);
    CHECK(heat.parametric ==
          std::vector<Derivative>{du(1, {0, 0}), du(1, {0, 1}), du(1, {1, 0}), du(1, {0, 2}), du(1, {1, 1})});
    CHECK(heat.counts == std::map<std::uint64_t, std::uint64_t>{{0, 1}, {1, 2}, {2, 2}});

    Builder L{{1, 1}};
    SolvedSystem empty(Ranking::orderly(L.amb), {});
    CHECK(quotient_census(empty, 7).parametric.size() == 8);

    auto grad = quotient_census(gradient(-P.x(2)), 3);
    CHECK(grad.parametric == std::vector<Derivative>{du(1, {0, 0})});
}

TEST_CASE("property: verdict is stable under autoreduction") {
    testing::Rng rng(4242);
    int passive = 0;
    for (int trial = 0; trial < 40; ++trial) {
        Ambient amb{2, testing::uniform(rng, 1, 2)};
        auto r = trial % 2 ? Ranking::orderly(amb) : Ranking::elimination(amb);
        auto sys = testing::random_solvable_system(rng, r, {2, 2, 2, 1});
        auto v = is_passive(sys).verdict;
        CHECK(is_passive(autoreduce(sys)).verdict == v);
        passive += v == Verdict::Passive;
    }
    MESSAGE("passive instances: " << passive);
}

TEST_CASE("property: satisfied pairs are ideal members, obstructions are principal-free members") {
    testing::Rng rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        auto sys = testing::random_solvable_system(rng, Ranking::orderly(P.amb), {2, 1, 2, 1});
        auto leads = sys.leads();
        for (const auto& tau : tau_generators(leads)) {
            auto res = check_pair(sys, tau);
            auto order = 0u;
            for (const auto& s : res.trace) order = std::max<unsigned>(order, s.eliminated.order.total());
            order = std::max<unsigned>(order, leads[tau.i].order.total() + tau.shift_i.total());
            auto gens = prolongation_polys(sys, order);
            auto cert = membership({res.combination, gens, 2, order});
            REQUIRE(cert);
            CHECK(expand(*cert, gens) == res.combination);
            if (res.status != PairStatus::Satisfied) {
                auto rc = membership({res.remainder, gens, 2, order});
                REQUIRE(rc);
                for (const auto& d : support_derivs(res.remainder)) CHECK_FALSE(find_principal(sys, d));
            }
        }
    }
}

TEST_CASE("property: census is monotone when a passive system gains an equation") {
    auto base = sys_of({SolvedForm(du(1, {2, 0}), P.zero())});
    auto more = sys_of({SolvedForm(du(1, {2, 0}), P.zero()), SolvedForm(du(1, {0, 2}), P.zero())});
    REQUIRE(is_passive(base).verdict == Verdict::Passive);
    REQUIRE(is_passive(more).verdict == Verdict::Passive);
    auto c0 = quotient_census(base, 5);
    auto c1 = quotient_census(more, 5);
    for (const auto& [order, count] : c1.counts) CHECK(count <= c0.counts[order]);
    auto cone = testing::cone_by_shifting(more.leads(), 2, 5);
    CHECK(c1.principal.size() == cone.size());
}
