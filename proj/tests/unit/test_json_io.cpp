#include "diffpass/json_io.hpp"

#include "builders.hpp"
#include "random_instances.hpp"

#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace diffpass;
using testing::Builder;
using testing::du;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::filesystem::path corpus{DIFFPASS_CORPUS_DIR};

} // namespace

TEST_CASE("polynomials round-trip") {
    testing::Rng rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        Ambient amb{testing::uniform(rng, 1, 3), testing::uniform(rng, 1, 3)};
        auto f = testing::random_poly(rng, amb, 5, 3, 3);
        CHECK(io::poly_from_json(io::to_json(f), amb) == f);
        CHECK(io::poly_from_json(io::parse_json_text(io::dump(io::to_json(f))), amb) == f);
    }
}

TEST_CASE("polynomial wire format") {
    Builder P{{2, 1}};
    auto j = io::to_json(scale(Rational(-1, 2), P.x(1) * P.u(1, {1, 0})));
    CHECK(io::dump(j) == R"([{"c":"-1/2","m":[[["x",1],1],[["u",1,[1,0]],1]]}])" "\n");
}

TEST_CASE("every corpus problem round-trips") {
    for (const auto& entry : std::filesystem::directory_iterator(corpus)) {
        auto name = entry.path().filename().string();
        if (name == "malformed.json" || name == "broken_ranking.json") continue;
        CAPTURE(name);
        auto p = io::parse_problem(slurp(entry.path()));
        auto q = io::problem_from_json(io::to_json(p));
        CHECK(q.ambient == p.ambient);
        CHECK(q.equations == p.equations);
        CHECK(q.bounds == p.bounds);
        CHECK(io::ranking_to_json(q.ranking) == io::ranking_to_json(p.ranking));
    }
}

TEST_CASE("syntax errors carry line and column") {
    try {
        io::parse_problem(slurp(corpus / "malformed.json"));
        FAIL("expected a parse error");
    } catch (const io::ParseError& e) {
        CHECK(std::string(e.where()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("schema errors carry a JSON pointer") {
    Ambient amb{2, 1};
    auto bad_exp = io::parse_json_text(R"([{"c":"1","m":[[["u",1,[1]],1]]}])");
    CHECK_THROWS_AS(io::poly_from_json(bad_exp, amb), io::ParseError);
    try {
        io::poly_from_json(io::parse_json_text(R"([{"c":"1/0","m":[]}])"), amb);
        FAIL("expected a parse error");
    } catch (const io::ParseError& e) {
        CHECK(e.where() == "/0/c");
    }
    CHECK_THROWS_AS(io::variable_from_json(io::parse_json_text(R"(["u",2,[0,0]])"), amb), io::ParseError);
    CHECK_THROWS_AS(io::variable_from_json(io::parse_json_text(R"(["x",0])"), amb), io::ParseError);
    CHECK_THROWS_AS(io::variable_from_json(io::parse_json_text(R"(["y",1])"), amb), io::ParseError);
    CHECK_THROWS_AS(io::parse_problem(R"({"n":2,"m":1,"ranking":"lex","equations":[]})"), io::ParseError);
    CHECK_THROWS_AS(io::parse_problem(R"({"n":2,"m":1,"ranking":"orderly"})"), io::ParseError);
}

TEST_CASE("broken weight rankings are rejected unless the audit gate is off") {
    auto text = slurp(corpus / "broken_ranking.json");
    CHECK_THROWS_AS(io::parse_problem(text), StructuralError);
    auto p = io::parse_problem(text, false);
    CHECK_FALSE(p.ranking.audited());
}

TEST_CASE("rationals parse strictly") {
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(format_rational(Rational(4, 2)) == "2");
    CHECK_THROWS_AS(parse_rational("1.5"), StructuralError);
    CHECK_THROWS_AS(parse_rational("1/0"), StructuralError);
    CHECK_THROWS_AS(parse_rational(""), StructuralError);
}
