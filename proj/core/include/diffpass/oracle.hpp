#pragma once

#include "diffpass/normal.hpp"
#include "diffpass/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace diffpass {

struct Prolongation {
    std::size_t equation;
    MultiIndex shift;
    DiffPoly poly; // D^shift(f_equation)
};

/// Every D^b(f_i) with |b| + |order(lead_i)| <= order_bound.
std::vector<Prolongation> prolong(const SolvedSystem& sys, std::uint64_t order_bound);

std::vector<DiffPoly> prolongation_polys(const SolvedSystem& sys, std::uint64_t order_bound);

/// target =? Σ q_i g_i with each q_i a combination of monomials of total degree
/// <= cofactor_degree in the variables of target and generators whose
/// derivative order is <= variable_order.
struct MembershipInstance {
    DiffPoly target;
    std::vector<DiffPoly> generators;
    std::uint64_t cofactor_degree = 2;
    std::uint64_t variable_order = 6;
};

struct MembershipCertificate {
    std::vector<DiffPoly> cofactors; // one per generator
};

/// Explicit cofactors, or nullopt when no combination exists inside the
/// bounds. A refusal is not a proof of non-membership.
std::optional<MembershipCertificate> membership(const MembershipInstance& inst);

/// Σ q_i g_i
DiffPoly expand(const MembershipCertificate& cert, const std::vector<DiffPoly>& generators);

} // namespace diffpass
