// domtorso command-line driver.

#include "domtorso/adhesion.hpp"
#include "domtorso/dot.hpp"
#include "domtorso/example4.hpp"
#include "domtorso/projection.hpp"
#include "domtorso/scenario.hpp"
#include "domtorso/search.hpp"
#include "domtorso/separation.hpp"
#include "domtorso/torso.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace domtorso;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Input {
    std::string file;
    bool example4 = false;

    void add_to(CLI::App* cmd)
    {
        cmd->add_option("file", file, "Scenario or presentation file");
        cmd->add_flag("--example4", example4, "Use the built-in example4 scenario");
    }

    Scenario load() const
    {
        if (example4 == !file.empty())
            throw CLI::ValidationError("input", "give exactly one of a file or --example4");
        if (example4)
            return parse_scenario(example4_scenario_text());
        return load_scenario(file);
    }
};

struct Grid {
    std::string depths = "10,20,40";
    Index reps = kDefaultReps;

    void add_to(CLI::App* cmd)
    {
        cmd->add_option("--depths", depths, "Comma-separated truncation depths")->capture_default_str();
        cmd->add_option("--reps", reps, "Copies of each replicated pattern")->capture_default_str();
    }

    std::vector<Index> list() const { return parse_index_list(depths); }
};

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write " + path);
    out << text;
}

int print_checks(const std::vector<CheckResult>& results)
{
    bool ok = true;
    for (const auto& r : results) {
        std::cout << "check." << r.line << "." << r.kind << "=" << (r.ok ? "pass" : "FAIL") << "\n";
        std::cout << "check." << r.line << ".message=" << r.message << "\n";
        std::istringstream lines(r.report);
        for (std::string l; std::getline(lines, l);)
            std::cout << "check." << r.line << "." << l << "\n";
        ok = ok && r.ok;
    }
    return ok ? 0 : kExitFail;
}

/// Runs the scenario's checks of one kind, or an ad hoc check built from
/// the default names when the scenario has none.
int run_kind(const Scenario& s, const std::string& kind, CheckSpec adhoc)
{
    auto results = run_checks(s, {kind});
    if (results.empty()) {
        Scenario copy = s;
        adhoc.kind = kind;
        copy.checks = {adhoc};
        results = run_checks(copy, {kind});
    }
    return print_checks(results);
}

DotHighlights titled(std::string title)
{
    DotHighlights h;
    h.title = std::move(title);
    return h;
}

std::string graph_report(const FiniteGraph& g)
{
    std::ostringstream out;
    out << "vertices=" << g.size() << "\n";
    out << "edges=" << g.edge_count() << "\n";
    for (const auto& v : g.vertices())
        out << "vertex=" << to_string(v) << "\n";
    for (auto [a, b] : g.edges())
        out << "edge=" << to_string(g.vertex(a)) << "--" << to_string(g.vertex(b)) << "\n";
    return out.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Dominated torso construction and separator checks on finitely presented graphs"};
    app.require_subcommand(1);
    app.fallthrough(false);

    // validate
    Input validateIn;
    Index validateDepth = 20;
    auto* validate = app.add_subcommand("validate", "Check a presentation (and scenario) for well-formedness");
    validateIn.add_to(validate);
    validate->add_option("--depth", validateDepth, "Depth for the connectivity check")->capture_default_str();

    // truncate
    Input truncIn;
    Index truncDepth = 5;
    Index truncReps = 2;
    std::string truncDot;
    auto* trunc = app.add_subcommand("truncate", "Print a finite truncation of G");
    truncIn.add_to(trunc);
    trunc->add_option("--depth", truncDepth)->capture_default_str();
    trunc->add_option("--reps", truncReps)->capture_default_str();
    trunc->add_option("--dot", truncDot, "Also write DOT to this path");

    // classify
    Input classifyIn;
    auto* classify = app.add_subcommand("classify", "Classify adhesion sets into the finite and infinite sides");
    classifyIn.add_to(classify);

    // torso
    Input torsoIn;
    Index torsoDepth = 5;
    Index torsoReps = 2;
    bool torsoReversed = false;
    bool torsoPresentation = false;
    std::string torsoDot;
    auto* torso = app.add_subcommand("torso", "Build K and print its truncation");
    torsoIn.add_to(torso);
    torso->add_option("--depth", torsoDepth)->capture_default_str();
    torso->add_option("--reps", torsoReps)->capture_default_str();
    torso->add_flag("--reversed-eta", torsoReversed, "Contract onto adhesion vertices in reversed order");
    torso->add_flag("--as-presentation", torsoPresentation, "Print K as a host-only presentation");
    torso->add_option("--dot", torsoDot, "Also write DOT to this path");

    // project
    Input projectIn;
    std::string projectRay = "S";
    auto* project = app.add_subcommand("project", "Mask a ray and project it into K");
    projectIn.add_to(project);
    project->add_option("--ray", projectRay)->capture_default_str();

    // separate
    Input sepIn;
    Grid sepGrid;
    std::string sepWhere = "G";
    std::string sepU = "U";
    std::string sepF = "F";
    std::string sepTarget = "S";
    std::string sepDot;
    auto* separate = app.add_subcommand("separate", "Check whether F separates U from a target");
    sepIn.add_to(separate);
    sepGrid.add_to(separate);
    separate->add_option("--in", sepWhere, "G or K")->check(CLI::IsMember({"G", "K"}))->capture_default_str();
    separate->add_option("--U", sepU, "Set name or literal")->capture_default_str();
    separate->add_option("--F", sepF, "Set name or literal")->capture_default_str();
    separate->add_option("--target", sepTarget, "Ray name or set")->capture_default_str();
    separate->add_option("--dot", sepDot, "Write the deepest truncation as DOT");

    // lemma-check
    Input lemmaIn;
    std::string lemmaSeparator = "fs";
    auto* lemma = app.add_subcommand("lemma-check", "Run the scenario's lemma checks");
    lemmaIn.add_to(lemma);
    lemma->add_option("--separator", lemmaSeparator, "fs or x, for scenarios without lemma checks")->check(CLI::IsMember({"fs", "x"}))->capture_default_str();

    // remark-check
    Input remarkIn;
    auto* remark = app.add_subcommand("remark-check", "Run the scenario's tail-separation checks");
    remarkIn.add_to(remark);

    // run
    Input runIn;
    auto* run = app.add_subcommand("run", "Run every check in a scenario");
    runIn.add_to(run);

    // example4
    Grid exGrid;
    bool exUseX = false;
    std::string exScenario;
    std::string exDot;
    auto* example4 = app.add_subcommand("example4", "Run the built-in ladder-and-fan scenario");
    exGrid.add_to(example4);
    example4->add_flag("--use-x", exUseX, "Check X in place of F_S");
    example4->add_option("--scenario-out", exScenario, "Write the scenario file here");
    example4->add_option("--dot", exDot, "Write K at depth 5 with F boxed");

    // search
    SearchConfig searchCfg;
    Grid searchGrid;
    std::string searchOut;
    auto* search = app.add_subcommand("search", "Randomized hunt for instances where X fails but F_S separates");
    search->add_option("--seed", searchCfg.seed)->capture_default_str();
    search->add_option("--trials", searchCfg.trials)->capture_default_str();
    search->add_option("--jobs", searchCfg.jobs, "Worker threads, 0 for all cores")->capture_default_str();
    searchGrid.add_to(search);
    search->add_option("--out", searchOut, "Directory for finding scenarios");

    // dot
    Input dotIn;
    std::string dotWhere = "G";
    Index dotDepth = 5;
    Index dotReps = 2;
    std::string dotU;
    std::string dotF;
    std::string dotRay;
    std::string dotWitness;
    std::string dotOut;
    auto* dot = app.add_subcommand("dot", "Write a truncation of G or K as DOT");
    dotIn.add_to(dot);
    dot->add_option("--in", dotWhere, "G or K")->check(CLI::IsMember({"G", "K"}))->capture_default_str();
    dot->add_option("--depth", dotDepth)->capture_default_str();
    dot->add_option("--reps", dotReps)->capture_default_str();
    dot->add_option("--U", dotU, "Set to fill");
    dot->add_option("--F", dotF, "Set to box");
    dot->add_option("--ray", dotRay, "Ray to colour");
    dot->add_option("--witness", dotWitness, "Path to colour, as (a,b,...)");
    dot->add_option("-o,--output", dotOut, "Output path (stdout when absent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*validate) {
            Scenario s = validateIn.load();
            ValidationReport r = validate_presentation(s.presentation, validateDepth);
            std::cout << "valid=" << (r.ok ? "yes" : "no") << "\n";
            for (const auto& e : r.errors)
                std::cout << "error=" << e << "\n";
            return r.ok ? 0 : kExitFail;
        }
        if (*trunc) {
            Scenario s = truncIn.load();
            FiniteTruncation t = truncate(s.presentation, truncDepth, truncReps);
            std::cout << graph_report(t.graph);
            if (!truncDot.empty())
                write_text(truncDot, export_dot(t.graph, titled("G truncated at depth " + std::to_string(truncDepth))));
            return 0;
        }
        if (*classify) {
            Scenario s = classifyIn.load();
            require_valid(s.presentation);
            std::cout << report(classify_adhesion(s.presentation));
            return 0;
        }
        if (*torso) {
            Scenario s = torsoIn.load();
            require_valid(s.presentation);
            Torso k = build_torso(s.presentation, torsoReversed ? EtaOrder::Reversed : EtaOrder::RoundRobin);
            if (torsoPresentation) {
                std::cout << serialize(k.as_presentation());
                return 0;
            }
            std::cout << report(conservativity_check(k));
            for (const auto& a : k.completed_sets())
                std::cout << "clique=" << to_string(a) << "\n";
            FiniteTruncation t = k.truncate(torsoDepth, torsoReps);
            std::cout << graph_report(t.graph);
            if (!torsoDot.empty())
                write_text(torsoDot, export_dot(t.graph, titled("K truncated at depth " + std::to_string(torsoDepth))));
            return 0;
        }
        if (*project) {
            Scenario s = projectIn.load();
            CheckSpec c;
            c.args["ray"] = projectRay;
            return run_kind(s, "project", c);
        }
        if (*separate) {
            Scenario s = sepIn.load();
            CheckSpec c;
            c.kind = "separate";
            c.args = {{"in", sepWhere}, {"U", sepU}, {"F", sepF}, {"target", sepTarget}, {"depths", sepGrid.depths}, {"reps", std::to_string(sepGrid.reps)}};
            c.args["expect"] = "separated";
            Torso k = build_torso(s.presentation);
            CheckResult r = run_check(s, k, c);
            std::cout << r.report;
            if (!sepDot.empty()) {
                auto depths = sepGrid.list();
                Index top = *std::max_element(depths.begin(), depths.end());
                FiniteTruncation t = sepWhere == "K" ? k.truncate(top, sepGrid.reps) : truncate(s.presentation, top, sepGrid.reps);
                DotHighlights h;
                h.u = s.resolve_set(sepU);
                h.f = s.resolve_set(sepF);
                if (s.rays.contains(sepTarget) && sepWhere == "G") {
                    auto rv = ray_vertices_in(s.ray(sepTarget), t.graph, top, sepGrid.reps);
                    h.ray = VertexSet(rv.begin(), rv.end());
                }
                std::istringstream lines(r.report);
                for (std::string l; std::getline(lines, l);)
                    if (l.rfind("witness=", 0) == 0)
                        h.witness = parse_vertex_list(l.substr(8));
                write_text(sepDot, export_dot(t.graph, h));
            }
            return r.ok ? 0 : kExitFail;
        }
        if (*lemma) {
            Scenario s = lemmaIn.load();
            CheckSpec c;
            c.args["separator"] = lemmaSeparator;
            return run_kind(s, "lemma", c);
        }
        if (*remark)
            return run_kind(remarkIn.load(), "remark", {});
        if (*run)
            return print_checks(run_checks(runIn.load()));
        if (*example4) {
            Example4Options opt;
            opt.depths = exGrid.list();
            opt.reps = exGrid.reps;
            opt.useX = exUseX;
            Example4Result r = run_example4(opt);
            std::cout << report(r);
            if (!exScenario.empty())
                write_text(exScenario, std::string(example4_scenario_text()));
            if (!exDot.empty()) {
                Scenario s = parse_scenario(example4_scenario_text());
                Torso k = build_torso(s.presentation);
                DotHighlights h;
                h.title = "K with F boxed";
                h.u = s.sets.at("U");
                h.f = s.sets.at("F");
                write_text(exDot, export_dot(k.truncate(5, 2).graph, h));
            }
            if (!r.ok())
                std::cerr << "assertion failed: " << r.first_failure() << "\n";
            return r.ok() ? 0 : kExitFail;
        }
        if (*search) {
            searchCfg.depths = searchGrid.list();
            searchCfg.reps = searchGrid.reps;
            SearchResult r = random_search(searchCfg);
            std::cout << report(r);
            if (!searchOut.empty()) {
                fs::create_directories(searchOut);
                for (const auto& t : r.trials)
                    if (!t.scenario.empty())
                        write_text((fs::path(searchOut) / finding_file_name(t)).string(), t.scenario);
            }
            bool clean = r.count(TrialOutcome::Violation) == 0 && r.count(TrialOutcome::Failed) == 0;
            return clean ? 0 : kExitFail;
        }
        if (*dot) {
            Scenario s = dotIn.load();
            FiniteTruncation t = dotWhere == "K" ? build_torso(s.presentation).truncate(dotDepth, dotReps) : truncate(s.presentation, dotDepth, dotReps);
            DotHighlights h;
            h.title = dotWhere + " truncated at depth " + std::to_string(dotDepth);
            if (!dotU.empty())
                h.u = s.resolve_set(dotU);
            if (!dotF.empty())
                h.f = s.resolve_set(dotF);
            if (!dotRay.empty()) {
                auto rv = ray_vertices_in(s.ray(dotRay), t.graph, dotDepth, dotReps);
                h.ray = VertexSet(rv.begin(), rv.end());
            }
            if (!dotWitness.empty())
                h.witness = parse_vertex_list(dotWitness);
            std::string text = export_dot(t.graph, h);
            if (dotOut.empty())
                std::cout << text;
            else
                write_text(dotOut, text);
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const FileNotFoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
