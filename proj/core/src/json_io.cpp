#include "diffpass/json_io.hpp"

#include <limits>

namespace diffpass::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw ParseError(path.empty() ? "/" : path, message);
}

std::uint64_t expect_uint(const json& j, const std::string& path, std::uint64_t max_value) {
    if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0)) {
        fail(path, "expected a nonnegative integer");
    }
    auto v = j.get<std::uint64_t>();
    if (v > max_value) fail(path, "integer " + std::to_string(v) + " out of range");
    return v;
}

const json& member(const json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing field \"") + key + "\"");
    return *it;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

} // namespace

json parse_json_text(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        auto [line, column] = line_column(text, e.byte);
        throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column),
                         "malformed JSON");
    }
}

// ---------------------------------------------------------------------------
// Serialization

json to_json(const MultiIndex& a) {
    json out = json::array();
    for (auto v : a.entries()) out.push_back(v);
    return out;
}

json to_json(const Derivative& d) { return json::array({"u", d.unknown, to_json(d.order)}); }

json to_json(const Variable& v) {
    if (const auto* x = std::get_if<Indep>(&v)) return json::array({"x", x->index});
    return to_json(std::get<Derivative>(v));
}

json to_json(const DiffPoly& f) {
    json out = json::array();
    for (const auto& [m, c] : f.terms()) {
        json mono = json::array();
        for (const auto& [v, e] : m.factors()) mono.push_back(json::array({to_json(v), e}));
        out.push_back({{"c", format_rational(c)}, {"m", std::move(mono)}});
    }
    return out;
}

json to_json(const ClassKey& k) {
    if (k.is_base()) return "base";
    return k.key();
}

json to_json(const SolvedForm& f) { return {{"lead", to_json(f.lead())}, {"tail", to_json(f.tail())}}; }

json to_json(const std::vector<RewriteStep>& trace) {
    json out = json::array();
    for (const auto& s : trace) {
        out.push_back({{"eq", s.equation}, {"shift", to_json(s.shift)}, {"eliminated", to_json(s.eliminated)}});
    }
    return out;
}

json to_json(const std::vector<TauGenerator>& taus) {
    json out = json::array();
    for (const auto& t : taus) {
        out.push_back({{"i", t.i}, {"j", t.j}, {"shift_i", to_json(t.shift_i)}, {"shift_j", to_json(t.shift_j)}});
    }
    return out;
}

json to_json(const Census& c) {
    json principal = json::array();
    json parametric = json::array();
    for (const auto& d : c.principal) principal.push_back(to_json(d));
    for (const auto& d : c.parametric) parametric.push_back(to_json(d));
    json counts = json::object();
    for (const auto& [order, count] : c.counts) counts[std::to_string(order)] = count;
    return {{"order_bound", c.order_bound},
            {"principal", std::move(principal)},
            {"parametric", std::move(parametric)},
            {"parametric_total", c.parametric.size()},
            {"counts", std::move(counts)}};
}

json to_json(const AuditReport& r, const Ranking& ranking) {
    json examples = json::array();
    for (const auto& c : r.counterexamples) {
        examples.push_back({{"axiom", c.axiom},
                            {"u", to_json(c.u)},
                            {"v", c.v ? to_json(*c.v) : json(nullptr)},
                            {"direction", c.direction}});
    }
    return {{"ranking", ranking.name()},
            {"exhaustive_order", r.exhaustive_order},
            {"samples", r.samples},
            {"checks", r.checks},
            {"counterexample_count", r.counterexample_count},
            {"counterexamples", std::move(examples)},
            {"passed", r.passed()}};
}

json to_json(const PassivityReport& r, const Census& census) {
    json violations = json::array();
    for (const auto& v : r.solvability.violations) {
        violations.push_back(
            {{"equation", v.equation}, {"lead_class", to_json(v.lead_class)}, {"tail_class", to_json(v.tail_class)}});
    }
    json pairs = json::array();
    for (const auto& p : r.pairs) {
        pairs.push_back({{"i", p.i},
                         {"j", p.j},
                         {"combination", to_json(p.combination)},
                         {"remainder", to_json(p.remainder)},
                         {"status", to_string(p.status)},
                         {"class_bound", to_json(p.class_bound)},
                         {"trace", to_json(p.trace)}});
    }
    json relations = json::array();
    for (const auto& d : r.derived_relations) {
        relations.push_back({{"kept", d.kept},
                             {"dropped", d.dropped},
                             {"remainder", to_json(d.remainder)},
                             {"status", to_string(d.status)}});
    }
    json out = {{"verdict", to_string(r.verdict)},
                {"theta", r.theta ? to_json(*r.theta) : json(nullptr)},
                {"solvability", {{"solvable", r.solvability.solvable}, {"violations", std::move(violations)}}},
                {"derived_relations", std::move(relations)},
                {"pairs", std::move(pairs)},
                {"census", to_json(census)}};
    if (r.autoreduced) {
        json eqs = json::array();
        for (const auto& eq : r.autoreduced->equations()) eqs.push_back(to_json(eq));
        out["autoreduced"] = std::move(eqs);
    }
    if (r.slice) {
        json gens = json::array();
        for (const auto& g : r.slice->generators) gens.push_back(to_json(g));
        out["normalized"] = {{"order_bound", r.slice->order_bound},
                             {"certified", r.slice->certified},
                             {"failure", r.slice->failure},
                             {"generators", std::move(gens)}};
    }
    return out;
}

json to_json(const MembershipCertificate& c) {
    json out = json::array();
    for (const auto& q : c.cofactors) out.push_back(to_json(q));
    return out;
}

json ranking_to_json(const Ranking& r) {
    if (r.is_coarsened()) throw StructuralError("coarsened rankings have no JSON form");
    switch (r.kind()) {
    case Ranking::Kind::Orderly: return "orderly";
    case Ranking::Kind::Elimination: return "elimination";
    case Ranking::Kind::Weights: return {{"weights", r.rows()}};
    }
    return nullptr;
}

json to_json(const ProblemFile& p) {
    json eqs = json::array();
    for (const auto& eq : p.equations) eqs.push_back(to_json(eq));
    return {{"n", p.ambient.n},
            {"m", p.ambient.m},
            {"ranking", ranking_to_json(p.ranking)},
            {"equations", std::move(eqs)},
            {"bounds",
             {{"order_bound", p.bounds.order_bound},
              {"degree_bound", p.bounds.degree_bound},
              {"max_steps", p.bounds.max_steps}}}};
}

std::string dump(const json& j) { return j.dump() + "\n"; }

// ---------------------------------------------------------------------------
// Parsing

MultiIndex multi_index_from_json(const json& j, std::size_t n, const std::string& path) {
    if (!j.is_array()) fail(path, "expected a multi-index array");
    if (j.size() != n) {
        fail(path, "multi-index has " + std::to_string(j.size()) + " entries, expected n=" + std::to_string(n));
    }
    std::vector<MultiIndex::value_type> entries;
    for (std::size_t k = 0; k < j.size(); ++k) {
        entries.push_back(static_cast<MultiIndex::value_type>(
            expect_uint(j[k], path + "/" + std::to_string(k), std::numeric_limits<MultiIndex::value_type>::max())));
    }
    return MultiIndex(std::move(entries));
}

Variable variable_from_json(const json& j, const Ambient& ambient, const std::string& path) {
    if (!j.is_array() || j.empty() || !j[0].is_string()) fail(path, "expected [\"x\", j] or [\"u\", i, [a...]]");
    const auto tag = j[0].get<std::string>();
    if (tag == "x") {
        if (j.size() != 2) fail(path, "x variable takes exactly one index");
        auto idx = expect_uint(j[1], path + "/1", ambient.n);
        if (idx < 1) fail(path + "/1", "x index must be in 1..n");
        return Indep{static_cast<std::uint32_t>(idx)};
    }
    if (tag == "u") return derivative_from_json(j, ambient, path);
    fail(path + "/0", "unknown variable tag \"" + tag + "\"");
}

Derivative derivative_from_json(const json& j, const Ambient& ambient, const std::string& path) {
    if (!j.is_array() || j.size() != 3 || j[0] != "u") fail(path, "expected [\"u\", i, [a...]]");
    auto idx = expect_uint(j[1], path + "/1", ambient.m);
    if (idx < 1) fail(path + "/1", "unknown index must be in 1..m");
    return Derivative{static_cast<std::uint32_t>(idx), multi_index_from_json(j[2], ambient.n, path + "/2")};
}

DiffPoly poly_from_json(const json& j, const Ambient& ambient, const std::string& path) {
    if (!j.is_array()) fail(path, "expected a list of terms");
    DiffPoly f(ambient);
    for (std::size_t t = 0; t < j.size(); ++t) {
        const std::string tp = path + "/" + std::to_string(t);
        const json& term = j[t];
        if (!term.is_object()) fail(tp, "expected a term object {\"c\": ..., \"m\": ...}");
        const json& c = member(term, "c", tp);
        if (!c.is_string()) fail(tp + "/c", "coefficient must be a rational string");
        Rational coeff;
        try {
            coeff = parse_rational(c.get<std::string>());
        } catch (const StructuralError& e) {
            fail(tp + "/c", e.what());
        }
        const json& m = member(term, "m", tp);
        if (!m.is_array()) fail(tp + "/m", "expected a list of [variable, exponent] pairs");
        Monomial mono;
        for (std::size_t k = 0; k < m.size(); ++k) {
            const std::string fp = tp + "/m/" + std::to_string(k);
            if (!m[k].is_array() || m[k].size() != 2) fail(fp, "expected [variable, exponent]");
            Variable v = variable_from_json(m[k][0], ambient, fp + "/0");
            auto e = expect_uint(m[k][1], fp + "/1", std::numeric_limits<std::uint32_t>::max());
            if (e == 0) fail(fp + "/1", "exponent must be positive");
            mono = mono * Monomial(v, static_cast<std::uint32_t>(e));
        }
        f.add_term(mono, coeff);
    }
    return f;
}

Ranking ranking_from_json(const json& j, const Ambient& ambient, bool audit_gate, const std::string& path) {
    if (j.is_string()) {
        const auto name = j.get<std::string>();
        if (name == "orderly") return Ranking::orderly(ambient);
        if (name == "elimination") return Ranking::elimination(ambient);
        fail(path, "unknown ranking \"" + name + "\"");
    }
    if (!j.is_object()) fail(path, "ranking must be \"orderly\", \"elimination\" or {\"weights\": [...]}");
    const json& w = member(j, "weights", path);
    if (!w.is_array()) fail(path + "/weights", "expected a list of rows");
    std::vector<std::vector<std::int64_t>> rows;
    for (std::size_t r = 0; r < w.size(); ++r) {
        const std::string rp = path + "/weights/" + std::to_string(r);
        if (!w[r].is_array()) fail(rp, "expected a row of integers");
        std::vector<std::int64_t> row;
        for (std::size_t c = 0; c < w[r].size(); ++c) {
            if (!w[r][c].is_number_integer()) fail(rp + "/" + std::to_string(c), "expected an integer");
            row.push_back(w[r][c].get<std::int64_t>());
        }
        rows.push_back(std::move(row));
    }
    try {
        return audit_gate ? Ranking::from_weights(ambient, std::move(rows))
                          : Ranking::unchecked_weights(ambient, std::move(rows));
    } catch (const ParseError&) {
        throw;
    } catch (const StructuralError& e) {
        fail(path, e.what());
    }
}

ProblemFile problem_from_json(const json& j, bool audit_gate) {
    if (!j.is_object()) fail("", "problem file must be a JSON object");
    Ambient amb;
    amb.n = expect_uint(member(j, "n", ""), "/n", 64);
    amb.m = expect_uint(member(j, "m", ""), "/m", 1u << 16);
    if (amb.n < 1) fail("/n", "n must be positive");
    if (amb.m < 1) fail("/m", "m must be positive");

    json ranking_json = j.contains("ranking") ? j["ranking"] : json("orderly");
    Ranking ranking = ranking_from_json(ranking_json, amb, audit_gate);

    const json& eqs = member(j, "equations", "");
    if (!eqs.is_array()) fail("/equations", "expected a list of equations");
    std::vector<SolvedForm> equations;
    for (std::size_t i = 0; i < eqs.size(); ++i) {
        const std::string ep = "/equations/" + std::to_string(i);
        if (!eqs[i].is_object()) fail(ep, "expected {\"lead\": ..., \"tail\": ...}");
        Derivative lead = derivative_from_json(member(eqs[i], "lead", ep), amb, ep + "/lead");
        DiffPoly tail = poly_from_json(member(eqs[i], "tail", ep), amb, ep + "/tail");
        try {
            equations.emplace_back(std::move(lead), std::move(tail));
        } catch (const StructuralError& e) {
            fail(ep, e.what());
        }
    }

    Bounds bounds;
    if (j.contains("bounds")) {
        const json& b = j["bounds"];
        if (!b.is_object()) fail("/bounds", "expected an object");
        constexpr auto max = std::numeric_limits<std::uint32_t>::max();
        if (b.contains("order_bound")) bounds.order_bound = expect_uint(b["order_bound"], "/bounds/order_bound", 64);
        if (b.contains("degree_bound")) bounds.degree_bound = expect_uint(b["degree_bound"], "/bounds/degree_bound", 16);
        if (b.contains("max_steps")) bounds.max_steps = expect_uint(b["max_steps"], "/bounds/max_steps", max);
    }
    return ProblemFile{amb, std::move(ranking), std::move(equations), bounds};
}

ProblemFile parse_problem(std::string_view text, bool audit_gate) {
    return problem_from_json(parse_json_text(text), audit_gate);
}

} // namespace diffpass::io
