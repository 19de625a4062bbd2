#pragma once

// Hand-rolled generators for property tests. Everything is driven by an
// explicit std::mt19937_64 so failures reproduce from the seed alone.

#include "diffpass/normal.hpp"
#include "diffpass/polynomial.hpp"
#include "diffpass/ranking.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace diffpass::testing {

using Rng = std::mt19937_64;

inline std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

inline MultiIndex random_index(Rng& rng, std::size_t n, std::uint32_t max_total) {
    std::vector<MultiIndex::value_type> e(n, 0);
    auto budget = static_cast<std::uint32_t>(uniform(rng, 0, max_total));
    for (std::uint32_t t = 0; t < budget; ++t) ++e[uniform(rng, 0, n - 1)];
    return MultiIndex(std::move(e));
}

inline Derivative random_derivative(Rng& rng, const Ambient& amb, std::uint32_t max_order) {
    return {static_cast<std::uint32_t>(uniform(rng, 1, amb.m)), random_index(rng, amb.n, max_order)};
}

inline Rational random_coefficient(Rng& rng) {
    static const int nums[] = {-3, -2, -1, 1, 1, 2, 3, 5};
    static const int dens[] = {1, 1, 1, 2, 3};
    Rational q(nums[uniform(rng, 0, 7)], dens[uniform(rng, 0, 4)]);
    q.canonicalize();
    return q;
}

/// Random monomial of degree <= max_degree drawn from the given variables.
inline Monomial random_monomial(Rng& rng, const std::vector<Variable>& vars, std::uint32_t max_degree) {
    Monomial m;
    if (vars.empty()) return m;
    auto degree = uniform(rng, 0, max_degree);
    for (std::uint64_t d = 0; d < degree; ++d) m = m * Monomial(vars[uniform(rng, 0, vars.size() - 1)]);
    return m;
}

inline DiffPoly random_poly_over(Rng& rng, const Ambient& amb, const std::vector<Variable>& vars,
                                 std::size_t max_terms, std::uint32_t max_degree) {
    DiffPoly f(amb);
    auto terms = uniform(rng, 1, max_terms);
    for (std::uint64_t t = 0; t < terms; ++t) f.add_term(random_monomial(rng, vars, max_degree), random_coefficient(rng));
    return f;
}

/// x's plus a handful of random derivatives of order <= max_order.
inline std::vector<Variable> random_variable_pool(Rng& rng, const Ambient& amb, std::uint32_t max_order,
                                                  std::size_t derivatives) {
    std::vector<Variable> vars;
    for (std::uint32_t j = 1; j <= amb.n; ++j) vars.emplace_back(Indep{j});
    std::set<Derivative> ds;
    for (std::size_t k = 0; k < derivatives; ++k) ds.insert(random_derivative(rng, amb, max_order));
    for (const auto& d : ds) vars.emplace_back(d);
    return vars;
}

inline DiffPoly random_poly(Rng& rng, const Ambient& amb, std::size_t max_terms, std::uint32_t max_degree,
                            std::uint32_t max_order) {
    auto vars = random_variable_pool(rng, amb, max_order, 4);
    return random_poly_over(rng, amb, vars, max_terms, max_degree);
}

/// Conditionally solvable system with distinct leads: each tail only uses x's
/// and derivatives ranked strictly below its lead.
struct SystemShape {
    std::size_t equations = 2;
    std::uint32_t lead_order = 2;
    std::size_t tail_terms = 3;
    std::uint32_t tail_degree = 1;
};

inline SolvedSystem random_solvable_system(Rng& rng, const Ranking& ranking, const SystemShape& shape) {
    const Ambient& amb = ranking.ambient();
    std::set<Derivative> leads;
    std::size_t guard = 0;
    while (leads.size() < shape.equations && guard++ < 100) {
        Derivative d = random_derivative(rng, amb, shape.lead_order);
        if (d.order.is_zero() && shape.lead_order > 0) d.order = d.order.shifted(uniform(rng, 0, amb.n - 1));
        leads.insert(d);
    }
    std::vector<SolvedForm> eqs;
    for (const auto& lead : leads) {
        std::vector<Variable> vars;
        for (std::uint32_t j = 1; j <= amb.n; ++j) vars.emplace_back(Indep{j});
        for (std::uint32_t i = 1; i <= amb.m; ++i) {
            for (auto& a : indices_up_to(amb.n, lead.order.total())) {
                Derivative d{i, std::move(a)};
                if (ranking.less(d, lead)) vars.emplace_back(d);
            }
        }
        std::shuffle(vars.begin(), vars.end(), rng);
        vars.resize(std::min<std::size_t>(vars.size(), amb.n + 3));
        eqs.emplace_back(lead, random_poly_over(rng, amb, vars, shape.tail_terms, shape.tail_degree));
    }
    return SolvedSystem(ranking, std::move(eqs));
}

} // namespace diffpass::testing
