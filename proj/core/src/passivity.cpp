#include "diffpass/passivity.hpp"

#include "diffpass/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace diffpass {

std::string to_string(PairStatus s) {
    switch (s) {
    case PairStatus::Satisfied: return "satisfied";
    case PairStatus::Obstructed: return "obstructed";
    case PairStatus::Inconsistent: return "inconsistent";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Passive: return "passive";
    case Verdict::NotPassive: return "not-passive";
    case Verdict::Inconsistent: return "inconsistent";
    }
    return "?";
}

PairStatus classify_remainder(const DiffPoly& remainder) {
    if (remainder.is_zero()) return PairStatus::Satisfied;
    if (support_derivs(remainder).empty()) return PairStatus::Inconsistent;
    return PairStatus::Obstructed;
}

CompatibilityResult check_pair(const SolvedSystem& sys, const TauGenerator& tau, const ReduceOptions& options) {
    DiffPoly combination = operator_apply(tau.vector, sys);
    Derivative top{sys[tau.i].lead().unknown, componentwise_max(sys[tau.i].lead().order, sys[tau.j].lead().order)};
    if (support_derivs(combination).contains(top)) {
        throw std::logic_error("check_pair: shared derivative " + to_string(top) + " did not cancel");
    }
    ClassKey bound = class_of(sys.ranking(), combination);
    auto reduction = reduce(combination, sys, options);
    PairStatus status = classify_remainder(reduction.remainder);
    return {tau.i, tau.j, std::move(combination), std::move(reduction.remainder), status, std::move(bound),
            std::move(reduction.trace)};
}

NormalizedSlice normalized_slice(const SolvedSystem& sys, std::uint64_t order_bound, const ReduceOptions& options) {
    NormalizedSlice slice;
    slice.order_bound = order_bound;
    const Ambient& amb = sys.ambient();

    for (std::uint32_t i = 1; i <= amb.m; ++i) {
        for (auto& a : indices_up_to(amb.n, order_bound)) {
            Derivative v{i, std::move(a)};
            if (!find_principal(sys, v)) continue;
            auto rem = reduce(DiffPoly::variable(amb, v), sys, options).remainder;
            slice.generators.emplace_back(v, -rem);
        }
    }

    try {
        validate_normalized(slice.generators);
    } catch (const StructuralError& e) {
        slice.failure = e.what();
        return slice;
    }
    for (const auto& g : slice.generators) {
        if (!find_principal(sys, g.lead())) {
            slice.failure = "lead " + to_string(g.lead()) + " is not in the orbit of the leads";
            return slice;
        }
        for (const auto& d : support_derivs(g.tail())) {
            if (find_principal(sys, d)) {
                slice.failure = "tail of " + to_string(g.lead()) + " keeps principal derivative " + to_string(d);
                return slice;
            }
        }
    }
    slice.certified = true;
    return slice;
}

bool CoincidenceAnalysis::consistent() const {
    return std::all_of(relations.begin(), relations.end(),
                       [](const DerivedRelation& r) { return r.status == PairStatus::Satisfied; });
}

CoincidenceAnalysis coincident_lead_analysis(const Ranking& ranking, const std::vector<SolvedForm>& raw,
                                             const ReduceOptions& options) {
    std::vector<SolvedForm> kept;
    std::vector<std::size_t> kept_source;
    std::vector<std::pair<std::size_t, std::size_t>> duplicates; // (kept position, dropped raw index)
    for (std::size_t r = 0; r < raw.size(); ++r) {
        auto it = std::find_if(kept.begin(), kept.end(),
                               [&](const SolvedForm& f) { return f.lead() == raw[r].lead(); });
        if (it == kept.end()) {
            kept.push_back(raw[r]);
            kept_source.push_back(r);
        } else {
            duplicates.emplace_back(static_cast<std::size_t>(it - kept.begin()), r);
        }
    }

    CoincidenceAnalysis out{SolvedSystem(ranking, kept), {}};
    const bool solvable = check_conditionally_solvable(out.merged).solvable;
    for (const auto& [pos, dropped] : duplicates) {
        DiffPoly diff = kept[pos].tail() - raw[dropped].tail();
        DiffPoly rem = solvable ? reduce(diff, out.merged, options).remainder : diff;
        PairStatus status = classify_remainder(rem);
        out.relations.push_back({kept_source[pos], dropped, std::move(rem), status});
    }
    return out;
}

Census quotient_census(const SolvedSystem& sys, std::uint64_t order_bound) {
    Census census;
    census.order_bound = order_bound;
    const Ambient& amb = sys.ambient();
    for (std::uint64_t t = 0; t <= order_bound; ++t) census.counts[t] = 0;
    for (std::uint64_t t = 0; t <= order_bound; ++t) {
        auto layer = indices_of_total(amb.n, t);
        std::sort(layer.begin(), layer.end());
        for (std::uint32_t i = 1; i <= amb.m; ++i) {
            for (const auto& a : layer) {
                Derivative v{i, a};
                if (find_principal(sys, v)) {
                    census.principal.push_back(std::move(v));
                } else {
                    census.parametric.push_back(std::move(v));
                    ++census.counts[t];
                }
            }
        }
    }
    return census;
}

PassivityReport is_passive(const SolvedSystem& sys, const PassivityOptions& options) {
    PassivityReport report;
    report.solvability = check_conditionally_solvable(sys);
    for (const auto& lead : sys.leads()) {
        ClassKey k = class_of(sys.ranking(), lead);
        if (!report.theta || k < *report.theta) report.theta = std::move(k);
    }
    if (!report.solvability.solvable) {
        report.verdict = Verdict::NotPassive;
        return report;
    }

    auto leads = sys.leads();
    bool inconsistent = false;
    bool obstructed = false;
    for (const auto& tau : tau_generators(leads)) {
        auto result = check_pair(sys, tau, options.reduce);
        inconsistent |= result.status == PairStatus::Inconsistent;
        obstructed |= result.status == PairStatus::Obstructed;
        report.pairs.push_back(std::move(result));
    }
    if (inconsistent) {
        report.verdict = Verdict::Inconsistent;
    } else if (obstructed) {
        report.verdict = Verdict::NotPassive;
    } else {
        report.verdict = Verdict::Passive;
        report.autoreduced = autoreduce(sys, options.reduce);
        report.slice = normalized_slice(sys, options.order_bound, options.reduce);
    }
    return report;
}

PassivityReport is_passive(const Ranking& ranking, const std::vector<SolvedForm>& raw,
                           const PassivityOptions& options) {
    auto analysis = coincident_lead_analysis(ranking, raw, options.reduce);
    PassivityReport report = is_passive(analysis.merged, options);
    report.derived_relations = std::move(analysis.relations);
    for (const auto& rel : report.derived_relations) {
        if (rel.status == PairStatus::Inconsistent) {
            report.verdict = Verdict::Inconsistent;
        } else if (rel.status == PairStatus::Obstructed && report.verdict == Verdict::Passive) {
            report.verdict = Verdict::NotPassive;
        }
    }
    if (report.verdict != Verdict::Passive) {
        report.autoreduced.reset();
        report.slice.reset();
    }
    return report;
}

} // namespace diffpass
