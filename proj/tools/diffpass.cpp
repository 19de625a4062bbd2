// diffpass: command-line front end for the passivity toolkit.
//
//   diffpass check          FILE                 passivity report
//   diffpass reduce         FILE --target POLY   remainder and rewrite trace
//   diffpass syzygies       FILE                 τ generators of the leads
//   diffpass quotient       FILE --order N       principal/parametric census
//   diffpass ranking-audit  FILE --samples K     compatibility audit
//
// Exit codes: 0 passive/ok, 1 input error, 2 obstructed (or failed audit),
// 3 inconsistent, 4 step budget exhausted.

#include "diffpass/errors.hpp"
#include "diffpass/json_io.hpp"
#include "diffpass/normal.hpp"
#include "diffpass/passivity.hpp"
#include "diffpass/ranking.hpp"
#include "diffpass/syzygy.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace diffpass;
using io::json;

enum ExitCode : int { kOk = 0, kInputError = 1, kObstructed = 2, kInconsistent = 3, kResource = 4 };

struct Options {
    std::string file;
    std::optional<std::string> ranking;
    std::optional<std::uint64_t> order;
    std::optional<std::uint64_t> samples;
    std::optional<std::uint64_t> max_steps;
    std::string target;
    bool pretty = false;
    bool json = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw StructuralError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

io::ProblemFile load(const Options& opt, bool audit_gate = true) {
    auto problem = io::parse_problem(read_file(opt.file), audit_gate);
    if (opt.ranking) {
        const std::string& text = *opt.ranking;
        json j = (!text.empty() && (text.front() == '{' || text.front() == '"')) ? io::parse_json_text(text)
                                                                                  : json(text);
        problem.ranking = io::ranking_from_json(j, problem.ambient, audit_gate, "--ranking");
    }
    if (opt.max_steps) problem.bounds.max_steps = *opt.max_steps;
    if (opt.order) problem.bounds.order_bound = *opt.order;
    return problem;
}

int verdict_exit(Verdict v) {
    switch (v) {
    case Verdict::Passive: return kOk;
    case Verdict::NotPassive: return kObstructed;
    case Verdict::Inconsistent: return kInconsistent;
    }
    return kInputError;
}

PassivityOptions passivity_options(const io::ProblemFile& p) {
    PassivityOptions o;
    o.reduce.max_steps = p.bounds.max_steps;
    o.order_bound = p.bounds.order_bound;
    return o;
}

int cmd_check(const Options& opt) {
    auto problem = load(opt);
    auto report = is_passive(problem.ranking, problem.equations, passivity_options(problem));
    SolvedSystem merged = coincident_lead_analysis(problem.ranking, problem.equations).merged;
    auto census = quotient_census(merged, problem.bounds.order_bound);
    if (opt.pretty) {
        std::cout << "verdict: " << to_string(report.verdict) << "\n";
        if (report.theta) std::cout << "theta: " << to_string(*report.theta) << "\n";
        for (const auto& v : report.solvability.violations) {
            std::cout << "equation " << v.equation << " is not conditionally solvable\n";
        }
        for (const auto& r : report.derived_relations) {
            std::cout << "coincident leads " << r.kept << "/" << r.dropped << ": " << to_string(r.remainder)
                      << " (" << to_string(r.status) << ")\n";
        }
        for (const auto& p : report.pairs) {
            std::cout << "pair (" << p.i << "," << p.j << "): " << to_string(p.status)
                      << ", remainder " << to_string(p.remainder) << "\n";
        }
        std::cout << "parametric derivatives up to order " << census.order_bound << ": "
                  << census.parametric.size() << "\n";
    } else {
        std::cout << io::dump(io::to_json(report, census));
    }
    return verdict_exit(report.verdict);
}

int cmd_reduce(const Options& opt) {
    auto problem = load(opt);
    SolvedSystem sys(problem.ranking, problem.equations);
    DiffPoly target = io::poly_from_json(io::parse_json_text(opt.target), problem.ambient, "--target");
    auto reduction = reduce(target, sys, ReduceOptions{problem.bounds.max_steps});
    if (opt.pretty) {
        std::cout << "remainder: " << to_string(reduction.remainder) << "\n";
        for (const auto& s : reduction.trace) {
            std::cout << "  eq " << s.equation << " shift " << s.shift.to_string() << " eliminates "
                      << to_string(s.eliminated) << "\n";
        }
    } else {
        std::cout << io::dump({{"remainder", io::to_json(reduction.remainder)}, {"trace", io::to_json(reduction.trace)}});
    }
    return kOk;
}

int cmd_syzygies(const Options& opt) {
    auto problem = load(opt);
    SolvedSystem sys(problem.ranking, problem.equations);
    auto leads = sys.leads();
    auto taus = tau_generators(leads);
    if (opt.pretty) {
        for (const auto& t : taus) {
            std::cout << "tau(" << t.i << "," << t.j << ") = X^" << t.shift_i.to_string() << " e" << t.i << " - X^"
                      << t.shift_j.to_string() << " e" << t.j << "\n";
        }
        if (taus.empty()) std::cout << "no syzygy pairs\n";
    } else {
        std::cout << io::dump(io::to_json(taus));
    }
    return kOk;
}

int cmd_quotient(const Options& opt) {
    auto problem = load(opt);
    auto report = is_passive(problem.ranking, problem.equations, passivity_options(problem));
    if (report.verdict != Verdict::Passive) {
        std::cerr << "diffpass: system is " << to_string(report.verdict)
                  << "; the census describes a regular quotient only for passive systems\n";
        return verdict_exit(report.verdict);
    }
    SolvedSystem merged = coincident_lead_analysis(problem.ranking, problem.equations).merged;
    auto census = quotient_census(merged, problem.bounds.order_bound);
    if (opt.pretty) {
        for (const auto& [order, count] : census.counts) {
            std::cout << "order " << order << ": " << count << " parametric\n";
        }
        std::cout << "parametric total: " << census.parametric.size() << "\n";
    } else {
        std::cout << io::dump(io::to_json(census));
    }
    return kOk;
}

int cmd_ranking_audit(const Options& opt) {
    auto problem = load(opt, /*audit_gate=*/false);
    AuditOptions audit;
    if (opt.samples) audit.sample_budget = *opt.samples;
    if (opt.order) audit.exhaustive_order = *opt.order;
    auto report = audit_compatibility(problem.ranking, audit);
    if (opt.pretty) {
        std::cout << problem.ranking.name() << ": " << report.counterexample_count << " counterexamples\n";
        for (const auto& c : report.counterexamples) {
            std::cout << "  axiom (" << c.axiom << ") " << to_string(c.u);
            if (c.v) std::cout << " vs " << to_string(*c.v);
            std::cout << " direction " << c.direction << "\n";
        }
    } else {
        std::cout << io::dump(io::to_json(report, problem.ranking));
    }
    return report.passed() ? kOk : kObstructed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Passivity checks for solved-form differential systems over exact rationals"};
    app.require_subcommand(1);

    Options opt;
    auto common = [&](CLI::App* sub) {
        sub->add_option("file", opt.file, "Problem file (JSON)")->required();
        sub->add_option("--ranking", opt.ranking, "Ranking override: orderly | elimination | {\"weights\": [[...]]}");
        sub->add_option("--max-steps", opt.max_steps, "Reduction step budget");
        sub->add_flag("--pretty", opt.pretty, "Human-readable output");
        sub->add_flag("--json", opt.json, "JSON output (default)")->excludes("--pretty");
    };

    auto* check = app.add_subcommand("check", "Decide passivity and report compatibility results");
    common(check);
    check->add_option("--order", opt.order, "Order bound for the normalized slice and census");

    auto* red = app.add_subcommand("reduce", "Reduce a polynomial by the system");
    common(red);
    red->add_option("--target", opt.target, "Polynomial JSON")->required();

    auto* syz = app.add_subcommand("syzygies", "List the τ syzygy generators of the leads");
    common(syz);

    auto* quo = app.add_subcommand("quotient", "Census of principal and parametric derivatives");
    common(quo);
    quo->add_option("--order", opt.order, "Order bound");

    auto* audit = app.add_subcommand("ranking-audit", "Audit the ranking's compatibility axioms");
    common(audit);
    audit->add_option("--samples", opt.samples, "Random sample pairs");
    audit->add_option("--order", opt.order, "Exhaustive order bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*check) return cmd_check(opt);
        if (*red) return cmd_reduce(opt);
        if (*syz) return cmd_syzygies(opt);
        if (*quo) return cmd_quotient(opt);
        if (*audit) return cmd_ranking_audit(opt);
    } catch (const ResourceError& e) {
        std::cerr << "diffpass: " << e.what() << "\n  last state: " << e.last_state() << "\n";
        return kResource;
    } catch (const StructuralError& e) {
        std::cerr << "diffpass: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
