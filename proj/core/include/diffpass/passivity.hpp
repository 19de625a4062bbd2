#pragma once

#include "diffpass/normal.hpp"
#include "diffpass/ranking.hpp"
#include "diffpass/syzygy.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace diffpass {

enum class PairStatus { Satisfied, Obstructed, Inconsistent };
enum class Verdict { Passive, NotPassive, Inconsistent };

std::string to_string(PairStatus s);
std::string to_string(Verdict v);

/// Satisfied for a zero remainder, inconsistent for a nonzero remainder
/// free of derivative variables, obstructed otherwise.
PairStatus classify_remainder(const DiffPoly& remainder);

struct CompatibilityResult {
    std::size_t i;
    std::size_t j;
    DiffPoly combination; // operator_apply(τ_ij, sys)
    DiffPoly remainder;   // reduce(combination, sys)
    PairStatus status;
    ClassKey class_bound; // class of the combination
    std::vector<RewriteStep> trace;
};

struct PassivityOptions {
    ReduceOptions reduce;
    /// Order bound for the normalized slice and census.
    std::uint64_t order_bound = 6;
};

/// Cross-derivative combination for one τ, reduced by the system. Throws
/// std::logic_error if the shared top derivative fails to cancel.
CompatibilityResult check_pair(const SolvedSystem& sys, const TauGenerator& tau,
                               const ReduceOptions& options = {});

/// Bounded slice of the normalized generating set: for each principal
/// derivative v of order <= order_bound, the generator v - reduce(v).
struct NormalizedSlice {
    std::uint64_t order_bound = 0;
    std::vector<SolvedForm> generators;
    bool certified = false;
    std::string failure; // empty when certified
};

NormalizedSlice normalized_slice(const SolvedSystem& sys, std::uint64_t order_bound,
                                 const ReduceOptions& options = {});

/// Equation dropped because its lead duplicated an earlier one, with the
/// reduced difference of the two tails.
struct DerivedRelation {
    std::size_t kept;
    std::size_t dropped;
    DiffPoly remainder; // (f_kept - f_dropped) reduced by the merged system
    PairStatus status;
};

struct CoincidenceAnalysis {
    SolvedSystem merged;
    /// Nonzero entries are relations the input must imply; zero ones record merges.
    std::vector<DerivedRelation> relations;

    bool consistent() const;
};

/// Merges equations sharing a lead, keeping the first occurrence.
CoincidenceAnalysis coincident_lead_analysis(const Ranking& ranking, const std::vector<SolvedForm>& raw,
                                             const ReduceOptions& options = {});

struct Census {
    std::uint64_t order_bound = 0;
    std::vector<Derivative> principal;
    std::vector<Derivative> parametric;
    /// Parametric derivatives per total order.
    std::map<std::uint64_t, std::uint64_t> counts;
};

/// Splits every u^i_a with |a| <= order_bound into principal (in the orbit of
/// the leads) and parametric. Meaningful as a quotient description when the
/// system is passive.
Census quotient_census(const SolvedSystem& sys, std::uint64_t order_bound);

struct PassivityReport {
    Verdict verdict = Verdict::NotPassive;
    SolvabilityReport solvability;
    std::optional<ClassKey> theta;
    std::vector<DerivedRelation> derived_relations;
    std::vector<CompatibilityResult> pairs;
    std::optional<SolvedSystem> autoreduced;
    std::optional<NormalizedSlice> slice;
};

/// Conditional solvability plus one compatibility check per τ generator.
/// A passive verdict also carries the autoreduced system and the certified
/// normalized slice up to options.order_bound.
PassivityReport is_passive(const SolvedSystem& sys, const PassivityOptions& options = {});

/// is_passive after coincident_lead_analysis; derived relations downgrade the verdict.
PassivityReport is_passive(const Ranking& ranking, const std::vector<SolvedForm>& raw,
                           const PassivityOptions& options = {});

} // namespace diffpass
