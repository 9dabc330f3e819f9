#pragma once

#include "domtorso/error.hpp"
#include "domtorso/presentation.hpp"
#include "domtorso/ray.hpp"
#include "domtorso/torso.hpp"

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace domtorso {

class FileNotFoundError : public Error {
public:
    explicit FileNotFoundError(const std::filesystem::path& p)
        : Error("file not found: " + p.string())
    {
    }
};

std::string read_file(const std::filesystem::path& p);

/// `check <kind> key=value ...`
struct CheckSpec {
    std::size_t line = 0;
    std::string kind;
    std::map<std::string, std::string> args;
};

/// A presentation (inline or by `include`), named vertex sets, named rays
/// and checks to run against them.
struct Scenario {
    GraphPresentation presentation;
    std::map<std::string, VertexSet> sets;
    std::map<std::string, RaySpec> rays;
    std::vector<CheckSpec> checks;

    /// A set name, or a literal such as {X[0],X[1]}.
    VertexSet resolve_set(const std::string& nameOrLiteral) const;
    const RaySpec& ray(const std::string& name) const;
};

Scenario parse_scenario(std::string_view text, const std::filesystem::path& baseDir = {});

/// Throws FileNotFoundError when the file is missing.
Scenario load_scenario(const std::filesystem::path& file);

std::string serialize(const Scenario& s);

/// "(a,b,c)" or "a,b,c" as an ordered list.
std::vector<Vertex> parse_vertex_list(std::string_view text);

/// "10,20,40".
std::vector<Index> parse_index_list(std::string_view text);

struct CheckResult {
    std::size_t line = 0;
    std::string kind;
    bool ok = false;
    std::string message;
    std::string report;
};

CheckResult run_check(const Scenario& s, const Torso& t, const CheckSpec& c);

/// Runs the checks whose kind is listed (all when `kinds` is empty).
std::vector<CheckResult> run_checks(const Scenario& s, const std::vector<std::string>& kinds = {});

} // namespace domtorso
