#include "diffpass/normal.hpp"

#include "diffpass/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace diffpass {

SolvedForm::SolvedForm(Derivative lead, DiffPoly tail) : lead_(std::move(lead)), tail_(std::move(tail)) {
    validate(Variable{lead_}, tail_.ambient());
    if (support_derivs(tail_).contains(lead_)) {
        throw StructuralError("tail of solved form depends on its lead " + to_string(lead_));
    }
}

DiffPoly SolvedForm::as_poly() const {
    return DiffPoly::variable(tail_.ambient(), lead_) + tail_;
}

SolvedSystem::SolvedSystem(Ranking ranking, std::vector<SolvedForm> equations)
    : ranking_(std::move(ranking)), equations_(std::move(equations)) {
    if (!ranking_.audited()) {
        throw StructuralError("ranking '" + ranking_.name() + "' has not passed the compatibility audit");
    }
    std::set<Derivative> seen;
    for (std::size_t i = 0; i < equations_.size(); ++i) {
        const auto& eq = equations_[i];
        if (!(eq.tail().ambient() == ranking_.ambient())) {
            throw StructuralError("equation " + std::to_string(i) + " ambient differs from the ranking's");
        }
        if (!seen.insert(eq.lead()).second) {
            throw StructuralError("duplicate lead " + to_string(eq.lead()) + " at equation " +
                                  std::to_string(i));
        }
    }
}

std::vector<Derivative> SolvedSystem::leads() const {
    std::vector<Derivative> out;
    out.reserve(equations_.size());
    for (const auto& eq : equations_) out.push_back(eq.lead());
    return out;
}

SolvabilityReport check_conditionally_solvable(const SolvedSystem& sys) {
    SolvabilityReport report;
    for (std::size_t i = 0; i < sys.size(); ++i) {
        ClassKey lead_class = class_of(sys.ranking(), sys[i].lead());
        ClassKey tail_class = class_of(sys.ranking(), sys[i].tail());
        if (!(tail_class < lead_class)) {
            report.solvable = false;
            report.violations.push_back({i, std::move(lead_class), std::move(tail_class)});
        }
    }
    return report;
}

std::optional<PrincipalMatch> find_principal(const SolvedSystem& sys, const Derivative& v) {
    std::optional<PrincipalMatch> best;
    for (std::size_t i = 0; i < sys.size(); ++i) {
        const auto& lead = sys[i].lead();
        if (lead.unknown != v.unknown) continue;
        auto shift = try_subtract(lead.order, v.order);
        if (!shift) continue;
        if (!best || shift->total() < best->shift.total() ||
            (shift->total() == best->shift.total() && *shift < best->shift)) {
            best = PrincipalMatch{i, std::move(*shift)};
        }
    }
    return best;
}

Reduction reduce(const DiffPoly& f, const SolvedSystem& sys, const ReduceOptions& options) {
    if (!(f.ambient() == sys.ambient())) {
        throw StructuralError("reduce: polynomial ambient differs from the system's");
    }
    auto solvability = check_conditionally_solvable(sys);
    if (!solvability.solvable) {
        throw StructuralError("reduce: system is not conditionally solvable (equation " +
                              std::to_string(solvability.violations.front().equation) + ")");
    }

    const Ranking& ranking = sys.ranking();
    std::map<std::pair<std::size_t, MultiIndex>, DiffPoly> replacements;
    auto replacement = [&](std::size_t eq, const MultiIndex& shift) -> const DiffPoly& {
        auto key = std::make_pair(eq, shift);
        auto it = replacements.find(key);
        if (it == replacements.end()) {
            it = replacements.emplace(key, total_derivative_multi(-sys[eq].tail(), shift)).first;
        }
        return it->second;
    };

    Reduction out{f, {}};
    for (;;) {
        std::optional<Derivative> top;
        std::optional<PrincipalMatch> top_match;
        for (const auto& d : support_derivs(out.remainder)) {
            if (top && !ranking.total_less(*top, d)) continue;
            if (auto match = find_principal(sys, d)) {
                top = d;
                top_match = std::move(match);
            }
        }
        if (!top) break;
        if (out.trace.size() >= options.max_steps) {
            throw ResourceError("reduce: exceeded max_steps=" + std::to_string(options.max_steps),
                                to_string(out.remainder));
        }
        out.remainder = substitute(out.remainder, Variable{*top},
                                   replacement(top_match->equation, top_match->shift));
        out.trace.push_back({top_match->equation, top_match->shift, *top});
    }
    return out;
}

SolvedSystem autoreduce(const SolvedSystem& sys, const ReduceOptions& options) {
    // Leads never change, so the principal set is fixed and one pass suffices.
    std::vector<SolvedForm> eqs = sys.equations();
    for (std::size_t i = 0; i < eqs.size(); ++i) {
        SolvedSystem current(sys.ranking(), eqs);
        auto reduced = reduce(eqs[i].tail(), current, options);
        eqs[i] = SolvedForm(eqs[i].lead(), std::move(reduced.remainder));
    }
    return SolvedSystem(sys.ranking(), std::move(eqs));
}

void validate_normalized(std::span<const SolvedForm> b) {
    std::set<Derivative> leads;
    for (const auto& eq : b) {
        if (!leads.insert(eq.lead()).second) {
            throw StructuralError("normalized set has duplicate lead " + to_string(eq.lead()));
        }
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i > 0 && !(b[i].tail().ambient() == b[0].tail().ambient())) {
            throw StructuralError("normalized set mixes ambients");
        }
        for (const auto& d : support_derivs(b[i].tail())) {
            if (leads.contains(d)) {
                throw StructuralError("tail of member " + std::to_string(i) + " mentions lead " +
                                      to_string(d));
            }
        }
    }
}

DiffPoly divide_by_normalized(const DiffPoly& f, std::span<const SolvedForm> b) {
    std::vector<std::size_t> order(b.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    return divide_by_normalized(f, b, order);
}

DiffPoly divide_by_normalized(const DiffPoly& f, std::span<const SolvedForm> b,
                              std::span<const std::size_t> order) {
    validate_normalized(b);
    std::vector<bool> used(b.size(), false);
    if (order.size() != b.size()) throw StructuralError("substitution order is not a permutation");
    for (auto i : order) {
        if (i >= b.size() || used[i]) throw StructuralError("substitution order is not a permutation");
        used[i] = true;
    }
    DiffPoly r = f;
    auto present = support_derivs(r);
    for (auto i : order) {
        if (!present.contains(b[i].lead())) continue;
        r = substitute(r, Variable{b[i].lead()}, -b[i].tail());
    }
    return r;
}

} // namespace diffpass
