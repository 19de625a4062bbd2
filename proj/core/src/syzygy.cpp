#include "diffpass/syzygy.hpp"

#include "diffpass/errors.hpp"
#include "diffpass/linear_algebra.hpp"

#include <algorithm>
#include <set>

namespace diffpass {

namespace {

void add_coefficient(OperatorPoly& p, const MultiIndex& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = p.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

void require_length(std::size_t got, std::size_t want, const char* op) {
    if (got != want) {
        throw StructuralError(std::string(op) + ": module vector has " + std::to_string(got) +
                              " components, expected " + std::to_string(want));
    }
}

/// Interns (position, exponent) pairs as dense coordinates.
class CoordinateIndex {
public:
    std::size_t operator()(std::size_t position, const MultiIndex& e) {
        auto [it, inserted] = ids_.try_emplace({position, e}, keys_.size());
        if (inserted) keys_.push_back({position, e});
        return it->second;
    }
    const std::pair<std::size_t, MultiIndex>& key(std::size_t id) const { return keys_[id]; }

private:
    std::map<std::pair<std::size_t, MultiIndex>, std::size_t> ids_;
    std::vector<std::pair<std::size_t, MultiIndex>> keys_;
};

SparseVector to_sparse(const ModuleVector& v, CoordinateIndex& index) {
    SparseVector out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (const auto& [e, c] : v[i]) out.emplace(index(i, e), c);
    }
    return out;
}

} // namespace

ModuleVector ModuleVector::monomial(std::size_t k, std::size_t position, MultiIndex exponent, Rational c) {
    ModuleVector v(k);
    v.add_term(position, exponent, c);
    return v;
}

bool ModuleVector::is_zero() const {
    return std::all_of(components_.begin(), components_.end(), [](const auto& p) { return p.empty(); });
}

std::uint64_t ModuleVector::degree() const {
    std::uint64_t d = 0;
    for (const auto& p : components_) {
        for (const auto& [e, c] : p) d = std::max(d, e.total());
    }
    return d;
}

void ModuleVector::add_term(std::size_t position, const MultiIndex& exponent, const Rational& c) {
    if (position >= components_.size()) {
        throw StructuralError("module vector position " + std::to_string(position) + " out of range");
    }
    add_coefficient(components_[position], exponent, c);
}

ModuleVector ModuleVector::shifted(const MultiIndex& sigma) const {
    ModuleVector r(size());
    for (std::size_t i = 0; i < size(); ++i) {
        for (const auto& [e, c] : components_[i]) r.components_[i].emplace(add(e, sigma), c);
    }
    return r;
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& other) {
    require_length(other.size(), size(), "module add");
    for (std::size_t i = 0; i < size(); ++i) {
        for (const auto& [e, c] : other.components_[i]) add_coefficient(components_[i], e, c);
    }
    return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& other) {
    require_length(other.size(), size(), "module sub");
    for (std::size_t i = 0; i < size(); ++i) {
        for (const auto& [e, c] : other.components_[i]) add_coefficient(components_[i], e, -c);
    }
    return *this;
}

ModuleVector operator*(const Rational& c, const ModuleVector& v) {
    ModuleVector r(v.size());
    if (c == 0) return r;
    r.components_ = v.components_;
    for (auto& p : r.components_) {
        for (auto& [e, coeff] : p) coeff *= c;
    }
    return r;
}

std::vector<TauGenerator> tau_generators(std::span<const Derivative> leads) {
    std::set<Derivative> seen;
    for (const auto& l : leads) {
        if (!seen.insert(l).second) throw StructuralError("duplicate lead " + to_string(l));
    }
    std::vector<TauGenerator> out;
    const std::size_t k = leads.size();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            if (leads[i].unknown != leads[j].unknown) continue;
            MultiIndex si = diamond(leads[i].order, leads[j].order);
            MultiIndex sj = diamond(leads[j].order, leads[i].order);
            ModuleVector v(k);
            v.add_term(i, si, 1);
            v.add_term(j, sj, -1);
            out.push_back({i, j, std::move(si), std::move(sj), std::move(v)});
        }
    }
    return out;
}

DerivCombination module_apply(const ModuleVector& d, std::span<const Derivative> leads) {
    require_length(d.size(), leads.size(), "module_apply");
    DerivCombination out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (const auto& [e, c] : d[i]) {
            Derivative target = leads[i].shifted_by(e);
            auto [it, inserted] = out.try_emplace(target, c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

DiffPoly operator_apply(const ModuleVector& d, const SolvedSystem& sys) {
    require_length(d.size(), sys.size(), "operator_apply");
    DiffPoly out(sys.ambient());
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i].empty()) continue;
        DiffPoly f = sys[i].as_poly();
        for (const auto& [e, c] : d[i]) out += c * total_derivative_multi(f, e);
    }
    return out;
}

ModuleVector expand_certificate(std::span<const TauGenerator> taus,
                                std::span<const TauCertificateTerm> terms, std::size_t k) {
    ModuleVector out(k);
    for (const auto& t : terms) out += t.coefficient * taus[t.generator].vector.shifted(t.sigma);
    return out;
}

SyzygySlice syzygy_oracle(std::span<const Derivative> leads, std::uint64_t degree_bound) {
    const std::size_t k = leads.size();
    SyzygySlice slice;
    slice.degree_bound = degree_bound;
    slice.taus = tau_generators(leads);
    if (k == 0) return slice;
    const std::size_t n = leads.front().order.size();

    // Kernel of X^a e_i -> u^{q_i}_{a + a_i} on the slice |a| <= degree_bound.
    auto exponents = indices_up_to(n, degree_bound);
    std::vector<std::pair<std::size_t, MultiIndex>> unknowns;
    std::map<Derivative, std::size_t> image_ids;
    std::vector<SparseVector> columns;
    for (std::size_t i = 0; i < k; ++i) {
        for (const auto& e : exponents) {
            Derivative image = leads[i].shifted_by(e);
            auto [it, inserted] = image_ids.try_emplace(image, image_ids.size());
            columns.push_back(SparseVector{{it->second, Rational(1)}});
            unknowns.emplace_back(i, e);
        }
    }
    for (const auto& kv : kernel_basis(columns)) {
        ModuleVector v(k);
        for (const auto& [col, c] : kv) v.add_term(unknowns[col].first, unknowns[col].second, c);
        slice.basis.push_back(std::move(v));
    }

    // Span of the τ multiples that stay inside the slice.
    CoordinateIndex coords;
    ColumnEchelon echelon;
    std::vector<std::pair<std::size_t, MultiIndex>> multiples;
    for (std::size_t t = 0; t < slice.taus.size(); ++t) {
        const auto& tau = slice.taus[t];
        std::uint64_t own = std::max(tau.shift_i.total(), tau.shift_j.total());
        if (own > degree_bound) continue;
        for (const auto& sigma : indices_up_to(n, degree_bound - own)) {
            echelon.add_column(to_sparse(tau.vector.shifted(sigma), coords));
            multiples.emplace_back(t, sigma);
        }
    }

    for (const auto& v : slice.basis) {
        auto combo = echelon.express(to_sparse(v, coords));
        std::vector<TauCertificateTerm> cert;
        if (combo) {
            for (const auto& [col, c] : *combo) cert.push_back({multiples[col].first, multiples[col].second, c});
        }
        if (!combo || !(expand_certificate(slice.taus, cert, k) == v)) {
            slice.uncertified.push_back(v);
            cert.clear();
        }
        slice.certificates.push_back(std::move(cert));
    }
    return slice;
}

} // namespace diffpass
