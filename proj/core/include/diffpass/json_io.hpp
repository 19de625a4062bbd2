#pragma once

#include "diffpass/errors.hpp"
#include "diffpass/normal.hpp"
#include "diffpass/oracle.hpp"
#include "diffpass/passivity.hpp"
#include "diffpass/ranking.hpp"
#include "diffpass/syzygy.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace diffpass::io {

using nlohmann::json;

/// Input that failed to parse or validate. `where` is "line L, column C" for
/// syntax errors and a JSON pointer for schema errors.
class ParseError : public StructuralError {
public:
    ParseError(const std::string& where, const std::string& message)
        : StructuralError(where + ": " + message), where_(where) {}
    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

struct Bounds {
    std::uint64_t order_bound = 6;
    std::uint64_t degree_bound = 3;
    std::uint64_t max_steps = 100'000;

    friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// Contents of a problem file. Equations are kept raw: leads may repeat until
/// coincident_lead_analysis merges them.
struct ProblemFile {
    Ambient ambient;
    Ranking ranking;
    std::vector<SolvedForm> equations;
    Bounds bounds;
};

/// Parses JSON text, reporting line and column on syntax errors.
json parse_json_text(std::string_view text);

json to_json(const MultiIndex& a);
json to_json(const Variable& v);
json to_json(const Derivative& d);
json to_json(const DiffPoly& f);
json to_json(const ClassKey& k);
json to_json(const SolvedForm& f);
json to_json(const std::vector<RewriteStep>& trace);
json to_json(const std::vector<TauGenerator>& taus);
json to_json(const Census& c);
json to_json(const AuditReport& r, const Ranking& ranking);
json to_json(const PassivityReport& r, const Census& census);
json to_json(const MembershipCertificate& c);

MultiIndex multi_index_from_json(const json& j, std::size_t n, const std::string& path = "");
Variable variable_from_json(const json& j, const Ambient& ambient, const std::string& path = "");
Derivative derivative_from_json(const json& j, const Ambient& ambient, const std::string& path = "");
DiffPoly poly_from_json(const json& j, const Ambient& ambient, const std::string& path = "");

/// "orderly" | "elimination" | {"weights": [[...], ...]}. Weight rankings go
/// through the audit gate unless audit_gate is false.
Ranking ranking_from_json(const json& j, const Ambient& ambient, bool audit_gate = true,
                          const std::string& path = "/ranking");
json ranking_to_json(const Ranking& r);

ProblemFile problem_from_json(const json& j, bool audit_gate = true);
ProblemFile parse_problem(std::string_view text, bool audit_gate = true);
json to_json(const ProblemFile& p);

/// Compact single-line JSON with a trailing newline.
std::string dump(const json& j);

} // namespace diffpass::io
