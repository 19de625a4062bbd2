#pragma once

#include "diffpass/polynomial.hpp"
#include "diffpass/ranking.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace diffpass {

/// f = lead + tail, read as the rewrite rule lead -> -tail.
class SolvedForm {
public:
    /// Throws StructuralError if the tail mentions the lead or lives in another ambient.
    SolvedForm(Derivative lead, DiffPoly tail);

    const Derivative& lead() const noexcept { return lead_; }
    const DiffPoly& tail() const noexcept { return tail_; }
    /// lead + tail as a polynomial.
    DiffPoly as_poly() const;

    friend bool operator==(const SolvedForm&, const SolvedForm&) = default;

private:
    Derivative lead_;
    DiffPoly tail_;
};

/// A finite collection of solved forms with pairwise distinct leads, together
/// with the ranking that orders its derivatives.
class SolvedSystem {
public:
    /// Validates ambient agreement, distinct leads, and that the ranking passed
    /// its compatibility audit.
    SolvedSystem(Ranking ranking, std::vector<SolvedForm> equations);

    const Ambient& ambient() const noexcept { return ranking_.ambient(); }
    const Ranking& ranking() const noexcept { return ranking_; }
    const std::vector<SolvedForm>& equations() const noexcept { return equations_; }
    std::size_t size() const noexcept { return equations_.size(); }
    const SolvedForm& operator[](std::size_t i) const { return equations_[i]; }

    std::vector<Derivative> leads() const;

private:
    Ranking ranking_;
    std::vector<SolvedForm> equations_;
};

struct SolvabilityViolation {
    std::size_t equation;
    ClassKey lead_class;
    ClassKey tail_class;
};

struct SolvabilityReport {
    bool solvable = true;
    std::vector<SolvabilityViolation> violations;
};

/// class(tail) ≺ class(lead) for every equation.
SolvabilityReport check_conditionally_solvable(const SolvedSystem& sys);

struct PrincipalMatch {
    std::size_t equation;
    MultiIndex shift;
};

/// The equation whose lead has v in its orbit, preferring the smallest
/// |shift| and then the lexicographically smallest shift.
std::optional<PrincipalMatch> find_principal(const SolvedSystem& sys, const Derivative& v);

struct ReduceOptions {
    std::uint64_t max_steps = 100'000;
};

struct RewriteStep {
    std::size_t equation;
    MultiIndex shift;
    Derivative eliminated;

    friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

struct Reduction {
    DiffPoly remainder;
    std::vector<RewriteStep> trace;
};

/// Repeatedly rewrites the ranking-greatest principal derivative v = D^s(lead_e)
/// as D^s(-tail_e) until only parametric derivatives and x's remain.
/// Requires a conditionally solvable system; throws ResourceError past max_steps.
Reduction reduce(const DiffPoly& f, const SolvedSystem& sys, const ReduceOptions& options = {});

/// Replaces every tail by its remainder against the system. Leads are kept.
SolvedSystem autoreduce(const SolvedSystem& sys, const ReduceOptions& options = {});

/// Throws StructuralError unless leads are pairwise distinct and no tail
/// mentions any lead.
void validate_normalized(std::span<const SolvedForm> b);

/// Remainder of f modulo a normalized set: substitute lead -> -tail for every
/// member. The result does not depend on the substitution order.
DiffPoly divide_by_normalized(const DiffPoly& f, std::span<const SolvedForm> b);

/// As above, substituting in the given order (a permutation of b's positions).
DiffPoly divide_by_normalized(const DiffPoly& f, std::span<const SolvedForm> b,
                              std::span<const std::size_t> order);

} // namespace diffpass
