#include "diffpass/polynomial.hpp"

#include "diffpass/errors.hpp"

#include <algorithm>
#include <sstream>

namespace diffpass {

namespace {

void require_same_ambient(const Ambient& a, const Ambient& b, const char* op) {
    if (!(a == b)) {
        throw StructuralError(std::string(op) + ": ambient mismatch (n=" + std::to_string(a.n) +
                              ", m=" + std::to_string(a.m) + ") vs (n=" + std::to_string(b.n) +
                              ", m=" + std::to_string(b.m) + ")");
    }
}

bool factor_less(const Monomial::Factor& f, const Variable& v) { return f.first < v; }

} // namespace

std::string to_string(const Derivative& d) {
    return "u[" + std::to_string(d.unknown) + "," + d.order.to_string() + "]";
}

std::string to_string(const Variable& v) {
    if (const auto* x = std::get_if<Indep>(&v)) return "x" + std::to_string(x->index);
    return to_string(std::get<Derivative>(v));
}

void validate(const Variable& v, const Ambient& ambient) {
    if (const auto* x = std::get_if<Indep>(&v)) {
        if (x->index < 1 || x->index > ambient.n) {
            throw StructuralError("x index " + std::to_string(x->index) + " outside 1.." +
                                  std::to_string(ambient.n));
        }
        return;
    }
    const auto& d = std::get<Derivative>(v);
    if (d.unknown < 1 || d.unknown > ambient.m) {
        throw StructuralError("unknown index " + std::to_string(d.unknown) + " outside 1.." +
                              std::to_string(ambient.m));
    }
    if (d.order.size() != ambient.n) {
        throw StructuralError("derivative order " + d.order.to_string() + " has length " +
                              std::to_string(d.order.size()) + ", expected n=" +
                              std::to_string(ambient.n));
    }
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(const Variable& v, std::uint32_t exponent) {
    if (exponent > 0) factors_.emplace_back(v, exponent);
}

std::uint64_t Monomial::degree() const noexcept {
    std::uint64_t d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

std::uint32_t Monomial::exponent_of(const Variable& v) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v, factor_less);
    return (it != factors_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::with_exponent(const Variable& v, std::uint32_t exponent) const {
    Monomial r = *this;
    auto it = std::lower_bound(r.factors_.begin(), r.factors_.end(), v, factor_less);
    if (it != r.factors_.end() && it->first == v) {
        if (exponent == 0) {
            r.factors_.erase(it);
        } else {
            it->second = exponent;
        }
    } else if (exponent > 0) {
        r.factors_.insert(it, {v, exponent});
    }
    return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first < j->first) {
            r.factors_.push_back(*i++);
        } else if (j->first < i->first) {
            r.factors_.push_back(*j++);
        } else {
            r.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    r.factors_.insert(r.factors_.end(), i, a.factors_.end());
    r.factors_.insert(r.factors_.end(), j, b.factors_.end());
    return r;
}

namespace {

// Display precedence: derivatives before x's, higher order first.
bool precedes(const Variable& a, const Variable& b) {
    const auto* da = std::get_if<Derivative>(&a);
    const auto* db = std::get_if<Derivative>(&b);
    if (da && db) {
        auto ta = da->order.total();
        auto tb = db->order.total();
        if (ta != tb) return ta > tb;
        if (da->order != db->order) return da->order > db->order;
        return da->unknown < db->unknown;
    }
    if (da || db) return da != nullptr;
    return std::get<Indep>(a).index < std::get<Indep>(b).index;
}

} // namespace

bool DisplayOrder::operator()(const Monomial& a, const Monomial& b) const {
    auto da = a.degree();
    auto db = b.degree();
    if (da != db) return da > db;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t k = 0;
    for (; k < fa.size() && k < fb.size(); ++k) {
        if (fa[k].first != fb[k].first) {
            return precedes(fa[k].first, fb[k].first);
        }
        if (fa[k].second != fb[k].second) return fa[k].second > fb[k].second;
    }
    // Equal degree forces equal length once all shared factors agree.
    return false;
}

// ---------------------------------------------------------------------------
// DiffPoly

DiffPoly DiffPoly::constant(Ambient ambient, const Rational& c) {
    DiffPoly f(ambient);
    f.add_term(Monomial{}, c);
    return f;
}

DiffPoly DiffPoly::variable(Ambient ambient, const Variable& v) {
    validate(v, ambient);
    DiffPoly f(ambient);
    f.terms_.emplace(Monomial(v), Rational(1));
    return f;
}

DiffPoly DiffPoly::term(Ambient ambient, const Rational& c, const Monomial& m) {
    for (const auto& [v, e] : m.factors()) validate(v, ambient);
    DiffPoly f(ambient);
    f.add_term(m, c);
    return f;
}

std::uint64_t DiffPoly::total_degree() const noexcept {
    // DisplayOrder puts the highest degree first.
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

Rational DiffPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void DiffPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) {
        it->second.canonicalize();
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& g) {
    require_same_ambient(ambient_, g.ambient_, "add");
    for (const auto& [m, c] : g.terms_) add_term(m, c);
    return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& g) {
    require_same_ambient(ambient_, g.ambient_, "sub");
    for (const auto& [m, c] : g.terms_) add_term(m, -c);
    return *this;
}

DiffPoly operator-(const DiffPoly& f) {
    DiffPoly r = f;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

DiffPoly operator*(const DiffPoly& f, const DiffPoly& g) {
    require_same_ambient(f.ambient_, g.ambient_, "mul");
    DiffPoly r(f.ambient_);
    for (const auto& [mf, cf] : f.terms_) {
        for (const auto& [mg, cg] : g.terms_) r.add_term(mf * mg, cf * cg);
    }
    return r;
}

DiffPoly operator*(const Rational& c, const DiffPoly& f) {
    DiffPoly r(f.ambient_);
    if (c == 0) return r;
    r.terms_ = f.terms_;
    for (auto& [m, coeff] : r.terms_) coeff *= c;
    return r;
}

DiffPoly add(const DiffPoly& f, const DiffPoly& g) { return f + g; }
DiffPoly mul(const DiffPoly& f, const DiffPoly& g) { return f * g; }
DiffPoly scale(const Rational& c, const DiffPoly& f) { return c * f; }

DiffPoly power(const DiffPoly& f, std::uint32_t e) {
    DiffPoly result = DiffPoly::constant(f.ambient(), 1);
    DiffPoly base = f;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

DiffPoly partial(const DiffPoly& f, const Variable& v) {
    DiffPoly r(f.ambient());
    for (const auto& [m, c] : f.terms()) {
        auto e = m.exponent_of(v);
        if (e == 0) continue;
        r.add_term(m.with_exponent(v, e - 1), c * e);
    }
    return r;
}

DiffPoly total_derivative(const DiffPoly& f, std::size_t k) {
    const auto& amb = f.ambient();
    if (k < 1 || k > amb.n) {
        throw StructuralError("total derivative direction " + std::to_string(k) + " outside 1.." +
                              std::to_string(amb.n));
    }
    DiffPoly r(amb);
    for (const auto& [m, c] : f.terms()) {
        for (const auto& [v, e] : m.factors()) {
            Monomial lowered = m.with_exponent(v, e - 1);
            if (const auto* x = std::get_if<Indep>(&v)) {
                if (x->index == k) r.add_term(lowered, c * e);
            } else {
                Variable next = std::get<Derivative>(v).shifted(k - 1);
                r.add_term(lowered * Monomial(next), c * e);
            }
        }
    }
    return r;
}

DiffPoly total_derivative_multi(const DiffPoly& f, const MultiIndex& a) {
    if (a.size() != f.ambient().n) {
        throw StructuralError("D^a: multi-index length " + std::to_string(a.size()) +
                              " does not match n=" + std::to_string(f.ambient().n));
    }
    DiffPoly r = f;
    for (std::size_t k = 0; k < a.size(); ++k) {
        for (MultiIndex::value_type t = 0; t < a[k] && !r.is_zero(); ++t) {
            r = total_derivative(r, k + 1);
        }
    }
    return r;
}

DiffPoly substitute(const DiffPoly& f, const Variable& v, const DiffPoly& g) {
    if (!(f.ambient() == g.ambient())) {
        throw StructuralError("substitute: ambient mismatch");
    }
    DiffPoly r(f.ambient());
    std::vector<DiffPoly> powers{DiffPoly::constant(f.ambient(), 1)};
    for (const auto& [m, c] : f.terms()) {
        auto e = m.exponent_of(v);
        if (e == 0) {
            r.add_term(m, c);
            continue;
        }
        while (powers.size() <= e) powers.push_back(powers.back() * g);
        DiffPoly rest = DiffPoly::term(f.ambient(), c, m.with_exponent(v, 0));
        r += rest * powers[e];
    }
    return r;
}

std::set<Derivative> support_derivs(const DiffPoly& f) {
    std::set<Derivative> out;
    for (const auto& [m, c] : f.terms()) {
        for (const auto& [v, e] : m.factors()) {
            if (const auto* d = std::get_if<Derivative>(&v)) out.insert(*d);
        }
    }
    return out;
}

std::string to_string(const DiffPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = mag == 1;
        if (!unit || m.is_one()) os << format_rational(mag);
        bool need_star = !unit;
        for (const auto& [v, e] : m.factors()) {
            if (need_star) os << "*";
            os << to_string(v);
            if (e > 1) os << "^" << e;
            need_star = true;
        }
    }
    return os.str();
}

} // namespace diffpass
