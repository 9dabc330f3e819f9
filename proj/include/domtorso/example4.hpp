#pragma once

#include "domtorso/scenario.hpp"
#include "domtorso/separation.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace domtorso {

/// Ladder, fan, U, F and the ray S with its checks, as scenario text.
std::string_view example4_scenario_text();

struct Example4Options {
    std::vector<Index> depths = kDefaultDepths;
    Index reps = kDefaultReps;
    /// Check X where F_S belongs (the last assertion then fails).
    bool useX = false;
};

struct Assertion {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct Example4Result {
    std::vector<Assertion> assertions;

    bool ok() const;
    /// Name of the first failing assertion, or empty.
    std::string first_failure() const;
};

Example4Result run_example4(const Example4Options& options = {});

std::string report(const Example4Result& r);

} // namespace domtorso
