#pragma once

#include "domtorso/separation.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace domtorso {

struct SearchConfig {
    std::uint64_t seed = 1;
    std::uint64_t trials = 200;
    std::vector<Index> depths = kDefaultDepths;
    Index reps = kDefaultReps;
    /// Worker threads; 0 means one per hardware thread.
    unsigned jobs = 1;
};

enum class TrialOutcome : std::uint8_t {
    DeadEnd, ///< no tendril could be built
    UMeetsW,
    HypothesisFails,
    XHolds,
    Finding, ///< X fails where F_S separates
    Violation, ///< F_S fails under an established hypothesis
    Failed, ///< an exception escaped
};

std::string to_string(TrialOutcome o);

struct TrialRecord {
    std::uint64_t trial = 0;
    TrialOutcome outcome = TrialOutcome::DeadEnd;
    std::string motif;
    VertexSet f;
    VertexSet x;
    VertexSet fs;
    std::vector<Vertex> witness;
    std::string message;
    /// Replayable scenario, for findings and violations.
    std::string scenario;
};

TrialRecord run_trial(const SearchConfig& cfg, std::uint64_t trial);

struct SearchResult {
    SearchConfig config;
    std::vector<TrialRecord> trials;

    std::size_t count(TrialOutcome o) const;
    std::vector<const TrialRecord*> findings() const;
};

/// Runs every trial, in parallel when cfg.jobs != 1; records are kept in
/// trial order so the report does not depend on scheduling.
SearchResult random_search(const SearchConfig& cfg);

std::string finding_file_name(const TrialRecord& r);

/// key=value lines: the configuration, outcome counts, then one block per
/// finding and per violation or error.
std::string report(const SearchResult& r);

} // namespace domtorso
