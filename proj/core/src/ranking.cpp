#include "diffpass/ranking.hpp"

#include "diffpass/errors.hpp"

#include <random>

namespace diffpass {

namespace {

std::vector<std::int64_t> unit_row(std::size_t width, std::size_t col) {
    std::vector<std::int64_t> row(width, 0);
    row[col] = 1;
    return row;
}

std::vector<std::int64_t> total_order_row(std::size_t n) {
    std::vector<std::int64_t> row(n + 1, 1);
    row[0] = 0;
    return row;
}

void validate_rows(const Ambient& ambient, const std::vector<std::vector<std::int64_t>>& rows) {
    if (rows.empty()) throw StructuralError("weight ranking needs at least one row");
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != ambient.n + 1) {
            throw StructuralError("weight row " + std::to_string(r) + " has " +
                                  std::to_string(rows[r].size()) + " entries, expected n+1=" +
                                  std::to_string(ambient.n + 1));
        }
    }
}

void require_ambient(const Ranking& r, const Derivative& d) {
    validate(Variable{d}, r.ambient());
}

std::string describe(const AuditCounterexample& c) {
    std::string s = "axiom (" + c.axiom + ") fails for " + to_string(c.u);
    if (c.v) s += " and " + to_string(*c.v);
    s += " in direction " + std::to_string(c.direction);
    return s;
}

} // namespace

std::string to_string(const ClassKey& k) {
    if (k.is_base()) return "base";
    std::string s = "[";
    for (std::size_t i = 0; i < k.key().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(k.key()[i]);
    }
    return s + "]";
}

Ranking::Ranking(Ambient ambient, Kind kind, std::vector<std::vector<std::int64_t>> rows, bool audited)
    : ambient_(ambient), kind_(kind), rows_(std::move(rows)), audited_(audited) {}

Ranking Ranking::orderly(Ambient ambient) {
    const std::size_t w = ambient.n + 1;
    std::vector<std::vector<std::int64_t>> rows{total_order_row(ambient.n), unit_row(w, 0)};
    for (std::size_t k = 1; k < w; ++k) rows.push_back(unit_row(w, k));
    return Ranking(ambient, Kind::Orderly, std::move(rows), true);
}

Ranking Ranking::elimination(Ambient ambient) {
    const std::size_t w = ambient.n + 1;
    std::vector<std::vector<std::int64_t>> rows{unit_row(w, 0), total_order_row(ambient.n)};
    for (std::size_t k = 1; k < w; ++k) rows.push_back(unit_row(w, k));
    return Ranking(ambient, Kind::Elimination, std::move(rows), true);
}

Ranking Ranking::unchecked_weights(Ambient ambient, std::vector<std::vector<std::int64_t>> rows) {
    validate_rows(ambient, rows);
    return Ranking(ambient, Kind::Weights, std::move(rows), false);
}

Ranking Ranking::from_weights(Ambient ambient, std::vector<std::vector<std::int64_t>> rows) {
    Ranking r = unchecked_weights(ambient, std::move(rows));
    AuditOptions gate;
    gate.exhaustive_order = 4;
    gate.sample_budget = 2'000;
    auto report = audit_compatibility(r, gate);
    if (!report.passed()) {
        throw StructuralError("weight ranking fails the compatibility audit: " +
                              describe(report.counterexamples.front()));
    }
    r.audited_ = true;
    return r;
}

Ranking Ranking::coarsened(Coarsening coarsen, std::string label) const {
    Ranking r = *this;
    r.coarsen_ = std::move(coarsen);
    r.coarsen_label_ = std::move(label);
    AuditOptions gate;
    gate.exhaustive_order = 4;
    gate.sample_budget = 2'000;
    r.audited_ = audit_compatibility(r, gate).passed();
    return r;
}

std::string Ranking::name() const {
    std::string base;
    switch (kind_) {
    case Kind::Orderly: base = "orderly"; break;
    case Kind::Elimination: base = "elimination"; break;
    case Kind::Weights: base = "weights"; break;
    }
    if (coarsen_) base += "/" + coarsen_label_;
    return base;
}

RankKey Ranking::key(const Derivative& d) const {
    if (coarsen_) return coarsen_(d);
    RankKey k;
    k.reserve(rows_.size());
    for (const auto& row : rows_) {
        std::int64_t acc = row[0] * static_cast<std::int64_t>(d.unknown);
        for (std::size_t j = 0; j < d.order.size(); ++j) {
            acc += row[j + 1] * static_cast<std::int64_t>(d.order[j]);
        }
        k.push_back(acc);
    }
    return k;
}

std::strong_ordering Ranking::compare(const Derivative& u, const Derivative& v) const {
    require_ambient(*this, u);
    require_ambient(*this, v);
    return key(u) <=> key(v);
}

bool Ranking::total_less(const Derivative& u, const Derivative& v) const {
    auto c = compare(u, v);
    if (c != 0) return c < 0;
    return u < v;
}

ClassKey class_of(const Ranking& r, const Derivative& d) { return ClassKey(r.key(d)); }

ClassKey class_of(const Ranking& r, const DiffPoly& f) {
    ClassKey best = ClassKey::base();
    for (const auto& d : support_derivs(f)) {
        ClassKey k = class_of(r, d);
        if (k > best) best = std::move(k);
    }
    return best;
}

std::optional<LeadingDerivative> leading_derivative(const Ranking& r, const DiffPoly& f) {
    auto support = support_derivs(f);
    if (support.empty()) return std::nullopt;
    std::optional<Derivative> best;
    RankKey best_key;
    bool tie = false;
    for (const auto& d : support) {
        RankKey k = r.key(d);
        if (!best || k > best_key) {
            best = d;
            best_key = std::move(k);
            tie = false;
        } else if (k == best_key) {
            // support is iterated in ascending (i, a), so d is the lex larger one.
            best = d;
            tie = true;
        }
    }
    return LeadingDerivative{*best, tie};
}

AuditReport audit_compatibility(const Ranking& r, const AuditOptions& options) {
    const Ambient& amb = r.ambient();
    AuditReport report;
    report.exhaustive_order = options.exhaustive_order;

    auto record = [&](std::string axiom, const Derivative& u, const Derivative* v, std::size_t k) {
        ++report.counterexample_count;
        if (report.counterexamples.size() < options.keep_counterexamples) {
            report.counterexamples.push_back(
                {std::move(axiom), u, v ? std::optional<Derivative>(*v) : std::nullopt, k + 1});
        }
    };

    auto check_single = [&](const Derivative& u) {
        RankKey ku = r.key(u);
        for (std::size_t k = 0; k < amb.n; ++k) {
            ++report.checks;
            if (!(ku < r.key(u.shifted(k)))) record("b", u, nullptr, k);
        }
    };

    auto check_pair = [&](const Derivative& u, const Derivative& v) {
        RankKey ku = r.key(u);
        RankKey kv = r.key(v);
        if (ku > kv) return;
        for (std::size_t k = 0; k < amb.n; ++k) {
            ++report.checks;
            RankKey su = r.key(u.shifted(k));
            RankKey sv = r.key(v.shifted(k));
            if (ku < kv) {
                if (!(su < sv)) record("a", u, &v, k);
            } else if (su != sv) {
                record("sim", u, &v, k);
            }
        }
    };

    std::vector<Derivative> pool;
    for (std::uint32_t i = 1; i <= amb.m; ++i) {
        for (auto& a : indices_up_to(amb.n, options.exhaustive_order)) pool.push_back({i, std::move(a)});
    }
    for (const auto& u : pool) check_single(u);
    for (const auto& u : pool) {
        for (const auto& v : pool) check_pair(u, v);
    }

    if (amb.m > 0 && amb.n > 0) {
        std::mt19937_64 rng(options.seed);
        std::uniform_int_distribution<std::uint32_t> unknown(1, static_cast<std::uint32_t>(amb.m));
        std::uniform_int_distribution<std::uint32_t> entry(0, options.max_sample_entry);
        auto draw = [&] {
            std::vector<MultiIndex::value_type> a(amb.n);
            for (auto& x : a) x = entry(rng);
            return Derivative{unknown(rng), MultiIndex(std::move(a))};
        };
        for (std::uint64_t s = 0; s < options.sample_budget; ++s) {
            Derivative u = draw();
            Derivative v = draw();
            check_single(u);
            check_pair(u, v);
            check_pair(v, u);
        }
        report.samples = options.sample_budget;
    }
    return report;
}

} // namespace diffpass
