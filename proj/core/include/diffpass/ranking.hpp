#pragma once

#include "diffpass/polynomial.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace diffpass {

/// Comparison key of a derivative under a ranking. Two derivatives share a
/// block exactly when their keys are equal.
using RankKey = std::vector<std::int64_t>;

/// Block of f̂ containing a polynomial: the key of its highest derivative, or
/// the bottom element "base" for polynomials free of derivative variables.
class ClassKey {
public:
    ClassKey() = default;
    explicit ClassKey(RankKey key) : key_(std::move(key)) {}
    static ClassKey base() { return ClassKey(); }

    bool is_base() const noexcept { return !key_.has_value(); }
    const RankKey& key() const { return *key_; }

    friend bool operator==(const ClassKey&, const ClassKey&) = default;
    friend std::strong_ordering operator<=>(const ClassKey& a, const ClassKey& b) {
        if (a.is_base() || b.is_base()) return !a.is_base() <=> !b.is_base();
        return *a.key_ <=> *b.key_;
    }

private:
    std::optional<RankKey> key_;
};

std::string to_string(const ClassKey& k);

/// Total preorder on derivative variables realizing a partition of U into
/// blocks. Every rule is a sequence of linear functionals on (i, a_1..a_n)
/// compared lexicographically; an optional coarsening replaces the key.
class Ranking {
public:
    enum class Kind { Orderly, Elimination, Weights };
    using Coarsening = std::function<RankKey(const Derivative&)>;

    /// Compare |a|, then i, then a lexicographically.
    static Ranking orderly(Ambient ambient);
    /// Compare i, then |a|, then a lexicographically.
    static Ranking elimination(Ambient ambient);
    /// Weight rows of length n + 1 (column 0 weighs i). Runs the compatibility
    /// audit and throws StructuralError with the first counterexample if it fails.
    static Ranking from_weights(Ambient ambient, std::vector<std::vector<std::int64_t>> rows);
    /// Same rule without the audit gate. Not accepted by SolvedSystem; meant
    /// for auditing candidate rankings.
    static Ranking unchecked_weights(Ambient ambient, std::vector<std::vector<std::int64_t>> rows);

    /// Coarser partition: derivatives are compared by coarsen(d) instead.
    Ranking coarsened(Coarsening coarsen, std::string label) const;

    const Ambient& ambient() const noexcept { return ambient_; }
    Kind kind() const noexcept { return kind_; }
    const std::vector<std::vector<std::int64_t>>& rows() const noexcept { return rows_; }
    bool audited() const noexcept { return audited_; }
    bool is_coarsened() const noexcept { return static_cast<bool>(coarsen_); }
    std::string name() const;

    RankKey key(const Derivative& d) const;
    std::strong_ordering compare(const Derivative& u, const Derivative& v) const;
    bool less(const Derivative& u, const Derivative& v) const { return compare(u, v) < 0; }
    /// compare, with ties inside a block broken by (i, a) lexicographically.
    bool total_less(const Derivative& u, const Derivative& v) const;

private:
    Ranking(Ambient ambient, Kind kind, std::vector<std::vector<std::int64_t>> rows, bool audited);

    Ambient ambient_;
    Kind kind_;
    std::vector<std::vector<std::int64_t>> rows_;
    bool audited_;
    Coarsening coarsen_;
    std::string coarsen_label_;
};

ClassKey class_of(const Ranking& r, const DiffPoly& f);
ClassKey class_of(const Ranking& r, const Derivative& d);

struct LeadingDerivative {
    Derivative var;
    /// The top block held more than one support derivative; var is the
    /// lexicographically largest of them.
    bool block_tie = false;
};

std::optional<LeadingDerivative> leading_derivative(const Ranking& r, const DiffPoly& f);

struct AuditCounterexample {
    /// "a": order not preserved by a shift; "b": shift does not raise;
    /// "sim": a shift splits a block.
    std::string axiom;
    Derivative u;
    std::optional<Derivative> v;
    std::size_t direction = 1; // 1-based
};

struct AuditReport {
    std::uint64_t exhaustive_order = 0;
    std::uint64_t samples = 0;
    std::uint64_t checks = 0;
    std::uint64_t counterexample_count = 0;
    /// First few counterexamples, verbatim.
    std::vector<AuditCounterexample> counterexamples;

    bool passed() const noexcept { return counterexample_count == 0; }
};

struct AuditOptions {
    std::uint64_t exhaustive_order = 5;
    std::uint64_t sample_budget = 10'000;
    std::uint32_t max_sample_entry = 12;
    std::uint64_t seed = 0x5eed;
    std::size_t keep_counterexamples = 16;
};

/// Checks, for every direction k: (a) u ≺ v ⇒ shift_k u ≺ shift_k v,
/// (b) u ≺ shift_k u, and block preservation, over all derivatives of order
/// <= exhaustive_order plus sample_budget random pairs.
AuditReport audit_compatibility(const Ranking& r, const AuditOptions& options = {});

} // namespace diffpass
