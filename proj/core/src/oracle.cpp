#include "diffpass/oracle.hpp"

#include "diffpass/errors.hpp"
#include "diffpass/linear_algebra.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace diffpass {

namespace {

void collect_variables(const DiffPoly& f, std::uint64_t variable_order, std::set<Variable>& out) {
    for (const auto& [m, c] : f.terms()) {
        for (const auto& [v, e] : m.factors()) {
            if (const auto* d = std::get_if<Derivative>(&v); d && d->order.total() > variable_order) continue;
            out.insert(v);
        }
    }
}

void monomials_up_to(const std::vector<Variable>& vars, std::size_t from, std::uint64_t budget,
                     const Monomial& current, std::vector<Monomial>& out) {
    out.push_back(current);
    if (budget == 0) return;
    for (std::size_t i = from; i < vars.size(); ++i) {
        monomials_up_to(vars, i, budget - 1, current * Monomial(vars[i]), out);
    }
}

} // namespace

std::vector<Prolongation> prolong(const SolvedSystem& sys, std::uint64_t order_bound) {
    std::vector<Prolongation> out;
    for (std::size_t i = 0; i < sys.size(); ++i) {
        std::uint64_t own = sys[i].lead().order.total();
        if (own > order_bound) continue;
        DiffPoly f = sys[i].as_poly();
        for (const auto& shift : indices_up_to(sys.ambient().n, order_bound - own)) {
            out.push_back({i, shift, total_derivative_multi(f, shift)});
        }
    }
    return out;
}

std::vector<DiffPoly> prolongation_polys(const SolvedSystem& sys, std::uint64_t order_bound) {
    std::vector<DiffPoly> out;
    for (auto& p : prolong(sys, order_bound)) out.push_back(std::move(p.poly));
    return out;
}

DiffPoly expand(const MembershipCertificate& cert, const std::vector<DiffPoly>& generators) {
    if (cert.cofactors.size() != generators.size()) {
        throw StructuralError("certificate has " + std::to_string(cert.cofactors.size()) +
                              " cofactors for " + std::to_string(generators.size()) + " generators");
    }
    if (generators.empty()) throw StructuralError("expand: no generators");
    DiffPoly out(generators.front().ambient());
    for (std::size_t i = 0; i < generators.size(); ++i) out += cert.cofactors[i] * generators[i];
    return out;
}

std::optional<MembershipCertificate> membership(const MembershipInstance& inst) {
    const Ambient amb = inst.target.ambient();
    for (const auto& g : inst.generators) {
        if (!(g.ambient() == amb)) throw StructuralError("membership: generator ambient mismatch");
    }
    if (inst.target.is_zero()) {
        MembershipCertificate zero;
        zero.cofactors.assign(inst.generators.size(), DiffPoly(amb));
        return zero;
    }
    if (inst.generators.empty()) return std::nullopt;

    // Any certificate can be pushed onto these variables: sending a foreign
    // variable to 0 fixes target and generators and never raises degrees.
    std::set<Variable> var_set;
    collect_variables(inst.target, inst.variable_order, var_set);
    for (const auto& g : inst.generators) collect_variables(g, inst.variable_order, var_set);
    std::vector<Variable> vars(var_set.begin(), var_set.end());

    std::vector<Monomial> basis;
    monomials_up_to(vars, 0, inst.cofactor_degree, Monomial{}, basis);

    std::map<Monomial, std::size_t, DisplayOrder> coords;
    auto coord = [&](const Monomial& m) { return coords.try_emplace(m, coords.size()).first->second; };
    auto to_sparse = [&](const DiffPoly& f) {
        SparseVector v;
        for (const auto& [m, c] : f.terms()) v.emplace(coord(m), c);
        return v;
    };

    ColumnEchelon echelon;
    std::vector<std::pair<std::size_t, std::size_t>> columns; // (generator, basis monomial)
    for (std::size_t g = 0; g < inst.generators.size(); ++g) {
        for (std::size_t b = 0; b < basis.size(); ++b) {
            DiffPoly product = DiffPoly::term(amb, 1, basis[b]) * inst.generators[g];
            if (product.is_zero()) continue;
            echelon.add_column(to_sparse(product));
            columns.emplace_back(g, b);
        }
    }

    auto combo = echelon.express(to_sparse(inst.target));
    if (!combo) return std::nullopt;

    MembershipCertificate cert;
    cert.cofactors.assign(inst.generators.size(), DiffPoly(amb));
    for (const auto& [col, c] : *combo) {
        const auto& [g, b] = columns[col];
        cert.cofactors[g].add_term(basis[b], c);
    }
    if (!(expand(cert, inst.generators) == inst.target)) {
        throw std::logic_error("membership: certificate does not reproduce the target");
    }
    return cert;
}

} // namespace diffpass
