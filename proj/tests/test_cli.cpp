#include "oracle.hpp"

#include "domtorso/dot.hpp"
#include "domtorso/example4.hpp"
#include "domtorso/scenario.hpp"
#include "domtorso/search.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace domtorso;

namespace {

Vertex v(const std::string& a) { return parse_vertex(a); }

std::string message_of(const std::string& text, const std::filesystem::path& base = {})
{
    try {
        parse_scenario(text, base);
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("built-in scenario parses and every check passes")
{
    Scenario s = parse_scenario(example4_scenario_text());
    CHECK(s.sets.at("U") == VertexSet{v("X[0]")});
    CHECK(s.sets.at("F") == parse_vertex_set("{X[2],X[3]}"));
    CHECK(s.rays.contains("S"));
    CHECK(s.checks.size() == 10);
    for (const auto& r : run_checks(s)) {
        CAPTURE(r.kind);
        CAPTURE(r.message);
        CHECK(r.ok);
    }
    CHECK(run_checks(s, {"lemma"}).size() == 2);

    Scenario again = parse_scenario(serialize(s));
    CHECK(serialize(again) == serialize(s));
    CHECK(again.presentation == s.presentation);
}

TEST_CASE("scenario errors")
{
    CHECK(message_of("host family X index nat\nset U = {X[0]\n").find("line 2") != std::string::npos);
    CHECK(message_of("host family X index nat\nset U = {Q[0]}\n").find("out of range") != std::string::npos);
    CHECK(message_of("host family X index nat\nhost edge X[i] -- X[i+1]\nray S period X[n+2] start 0 step 2\n").find("adjacent") != std::string::npos);
    CHECK(message_of("include nowhere.graph\n").find("file not found") != std::string::npos);
    CHECK(message_of("host family X index nat\nfrobnicate\n").find("unknown directive") != std::string::npos);
    CHECK(message_of("host family X index nat\ncheck lemma F\n").find("key=value") != std::string::npos);
    CHECK_THROWS_AS(load_scenario("/nonexistent/missing.graph"), FileNotFoundError);
}

TEST_CASE("scenario include")
{
    auto dir = std::filesystem::temp_directory_path() / "domtorso_include_test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream(dir / "g.graph") << example4_presentation_text();
    }
    Scenario s = parse_scenario("include g.graph\nset U = {X[0]}\nset F = {X[2],X[3]}\nray S prefix X[2] Z#0.z period X[n] Y@n.y start 3\ncheck lemma\n", dir);
    auto results = run_checks(s);
    REQUIRE(results.size() == 1);
    CHECK(results[0].ok);
    CHECK(message_of("include g.graph\nhost family W size 1\n", dir).find("not both") != std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("failed checks report what went wrong")
{
    Scenario s = parse_scenario(std::string(example4_presentation_text()) + "set U = {X[0]}\nset F = {X[2],X[3]}\nray S prefix X[2] Z#0.z period X[n] Y@n.y start 3\n"
                                "check lemma separator=x\ncheck torso edge=X[0]--X[2]\ncheck classify component=Z#0 expect=prime\n");
    auto results = run_checks(s);
    REQUIRE(results.size() == 3);
    for (const auto& r : results)
        CHECK_FALSE(r.ok);
    CHECK(results[0].message.find("separator-fails") != std::string::npos);
}

TEST_CASE("example4 runner")
{
    Example4Result r = run_example4();
    REQUIRE(r.assertions.size() == 6);
    CHECK(r.ok());

    Example4Options shallow;
    shallow.depths = {10};
    Example4Result s = run_example4(shallow);
    CHECK(s.ok());
    for (std::size_t k = 0; k < 6; ++k)
        CHECK(s.assertions[k].ok == r.assertions[k].ok);

    Example4Options withX;
    withX.useX = true;
    Example4Result x = run_example4(withX);
    CHECK_FALSE(x.ok());
    CHECK(x.first_failure() == "fs-separates");
    CHECK(x.assertions[5].detail.find("(X[0],X[1],Z#0.z)") != std::string::npos);
    CHECK(report(x).find("first_failure=fs-separates") != std::string::npos);
}

TEST_CASE("dot export")
{
    Scenario s = parse_scenario(example4_scenario_text());
    Torso t = build_torso(s.presentation);
    FiniteTruncation k = t.truncate(5, 2);
    DotHighlights h;
    h.f = s.sets.at("F");
    std::string dot = export_dot(k.graph, h);
    CHECK(dot.rfind("graph G {", 0) == 0);
    for (int j = 0; j <= 5; ++j)
        CHECK(dot.find("\"X[" + std::to_string(j) + "]\"") != std::string::npos);
    for (int j = 0; j <= 4; ++j)
        CHECK(dot.find("\"V[Y@" + std::to_string(j) + "]\"") != std::string::npos);
    CHECK(dot.find("\"X[1]\" -- \"X[3]\"") != std::string::npos);
    CHECK(dot.find("\"X[2]\" [shape=box, color=blue, penwidth=2]") != std::string::npos);
    CHECK(dot == export_dot(k.graph, h));

    std::string plain = export_dot(k.graph);
    CHECK(plain.find("color") == std::string::npos);
    CHECK(plain.find("fill") == std::string::npos);

    FiniteTruncation g = truncate(s.presentation, 5, 2);
    DotHighlights w;
    w.witness = parse_vertex_list("(X[0],X[1],Z#0.z)");
    std::string fig = export_dot(g.graph, w);
    CHECK(fig.find("\"X[0]\" -- \"X[1]\" [color=green, penwidth=2]") != std::string::npos);
    CHECK(fig.find("\"X[1]\" -- \"Z#0.z\" [color=green, penwidth=2]") != std::string::npos);
}

TEST_CASE("search is deterministic and its findings replay")
{
    SearchConfig none;
    none.trials = 0;
    SearchResult empty = random_search(none);
    CHECK(empty.findings().empty());
    CHECK(report(empty).find("count.finding=0") != std::string::npos);

    SearchConfig cfg;
    cfg.seed = 7;
    cfg.trials = 60;
    cfg.depths = {10, 20};
    SearchResult a = random_search(cfg);
    cfg.jobs = 4;
    SearchResult b = random_search(cfg);
    CHECK(report(a) == report(b));
    CHECK(a.count(TrialOutcome::Violation) == 0);
    CHECK(a.count(TrialOutcome::Failed) == 0);
    for (const TrialRecord* f : a.findings()) {
        CAPTURE(f->trial);
        Scenario s = parse_scenario(f->scenario);
        auto results = run_checks(s);
        REQUIRE(results.size() == 2);
        CHECK(results[0].ok);
        CHECK(results[1].ok);
    }
}
