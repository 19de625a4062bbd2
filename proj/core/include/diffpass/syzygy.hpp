#pragma once

#include "diffpass/normal.hpp"
#include "diffpass/polynomial.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace diffpass {

/// Element of P = Q[X_1..X_n], keyed by exponent.
using OperatorPoly = std::map<MultiIndex, Rational>;

/// Element of P^k; component i acts on the i-th equation or lead.
class ModuleVector {
public:
    ModuleVector() = default;
    explicit ModuleVector(std::size_t k) : components_(k) {}

    /// c·X^exponent·e_position
    static ModuleVector monomial(std::size_t k, std::size_t position, MultiIndex exponent,
                                 Rational c = 1);

    std::size_t size() const noexcept { return components_.size(); }
    const OperatorPoly& operator[](std::size_t i) const { return components_[i]; }
    const std::vector<OperatorPoly>& components() const noexcept { return components_; }
    bool is_zero() const;
    /// Largest |exponent| over all components, 0 for the zero vector.
    std::uint64_t degree() const;

    void add_term(std::size_t position, const MultiIndex& exponent, const Rational& c);
    /// X^sigma · this
    ModuleVector shifted(const MultiIndex& sigma) const;

    ModuleVector& operator+=(const ModuleVector& other);
    ModuleVector& operator-=(const ModuleVector& other);
    friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
    friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
    friend ModuleVector operator*(const Rational& c, const ModuleVector& v);
    friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

private:
    std::vector<OperatorPoly> components_;
};

/// τ_ij = X^{a_i ⋄ a_j} e_i - X^{a_j ⋄ a_i} e_j for leads u^q_{a_i}, u^q_{a_j}.
struct TauGenerator {
    std::size_t i;
    std::size_t j;
    MultiIndex shift_i;
    MultiIndex shift_j;
    ModuleVector vector;
};

/// One τ per position pair i < j whose leads share an unknown. Throws
/// StructuralError on duplicate leads.
std::vector<TauGenerator> tau_generators(std::span<const Derivative> leads);

/// Formal Q-combination of derivative variables.
using DerivCombination = std::map<Derivative, Rational>;

/// Σ_i d_i · leads_i under the shift action X^a u^q_b = u^q_{a+b}.
DerivCombination module_apply(const ModuleVector& d, std::span<const Derivative> leads);

/// Σ_i Σ_a c_{i,a} D^a(f_i), each f_i = lead_i + tail_i.
DiffPoly operator_apply(const ModuleVector& d, const SolvedSystem& sys);

struct TauCertificateTerm {
    std::size_t generator; // index into the τ list
    MultiIndex sigma;
    Rational coefficient;
};

/// Exhaustive description of the syzygies of a lead list whose components
/// have degree <= degree_bound.
struct SyzygySlice {
    std::uint64_t degree_bound = 0;
    std::vector<TauGenerator> taus;
    /// Basis of all syzygies in the slice, from exact linear algebra.
    std::vector<ModuleVector> basis;
    /// certificates[b] expresses basis[b] as Σ c · X^sigma · τ_generator.
    std::vector<std::vector<TauCertificateTerm>> certificates;
    /// Basis vectors that could not be written through the τ generators.
    std::vector<ModuleVector> uncertified;

    bool certified() const noexcept { return uncertified.empty(); }
};

/// Computes the slice kernel of the shift map and certifies every kernel
/// vector as a P-combination of τ generators, checking each certificate by
/// re-expansion.
SyzygySlice syzygy_oracle(std::span<const Derivative> leads, std::uint64_t degree_bound);

/// Expands Σ c · X^sigma · τ_generator.
ModuleVector expand_certificate(std::span<const TauGenerator> taus,
                                std::span<const TauCertificateTerm> terms, std::size_t k);

} // namespace diffpass
