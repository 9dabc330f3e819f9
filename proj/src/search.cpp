#include "domtorso/search.hpp"

#include "domtorso/generator.hpp"
#include "domtorso/scenario.hpp"
#include "domtorso/torso.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace domtorso {

std::string to_string(TrialOutcome o)
{
    switch (o) {
    case TrialOutcome::DeadEnd: return "dead-end";
    case TrialOutcome::UMeetsW: return "u-meets-w";
    case TrialOutcome::HypothesisFails: return "hypothesis-fails";
    case TrialOutcome::XHolds: return "x-holds";
    case TrialOutcome::Finding: return "finding";
    case TrialOutcome::Violation: return "violation";
    case TrialOutcome::Failed: return "error";
    }
    return "?";
}

namespace {

std::string index_list(const std::vector<Index>& xs)
{
    std::string out;
    for (std::size_t k = 0; k < xs.size(); ++k)
        out += (k ? "," : "") + std::to_string(xs[k]);
    return out;
}

std::string scenario_text(const SearchConfig& cfg, const GeneratedInstance& inst, const TrialRecord& r)
{
    Scenario s;
    s.presentation = inst.presentation;
    s.sets["U"] = inst.u;
    s.sets["F"] = r.f;
    RaySpec ray = inst.ray;
    ray.name = "S";
    s.rays["S"] = ray;
    std::string grid = index_list(cfg.depths);
    CheckSpec x;
    x.kind = "lemma";
    x.args = {{"U", "U"}, {"F", "F"}, {"ray", "S"}, {"separator", "x"}, {"depths", grid}, {"reps", std::to_string(cfg.reps)}};
    CheckSpec fs = x;
    fs.args["separator"] = "fs";
    if (r.outcome == TrialOutcome::Finding) {
        x.args["expect"] = "not-separated";
        x.args["witness"] = to_string(r.witness);
        fs.args["expect"] = "separated";
    } else {
        x.args["expect"] = r.witness.empty() ? "separated" : "not-separated";
        fs.args["expect"] = "holds";
    }
    s.checks = {x, fs};
    return "# search trial " + std::to_string(r.trial) + ", motif " + r.motif + "\n" + serialize(s);
}

} // namespace

TrialRecord run_trial(const SearchConfig& cfg, std::uint64_t trial)
{
    TrialRecord r;
    r.trial = trial;
    try {
        Rng rng = trial_rng(cfg.seed, trial);
        auto inst = random_instance(rng);
        if (!inst) {
            r.outcome = TrialOutcome::DeadEnd;
            return r;
        }
        r.motif = inst->motif;
        Torso t = build_torso(inst->presentation);
        PipelineReport pr = faithfulness_pipeline(t, inst->u, inst->ray, cfg.depths, cfg.reps);
        r.f = pr.f;
        if (!pr.tendril) {
            r.outcome = TrialOutcome::DeadEnd;
            r.message = "ray is not a tendril";
            return r;
        }
        if (pr.status == "U meets W") {
            r.outcome = TrialOutcome::UMeetsW;
            return r;
        }
        if (!pr.hypothesis.separated) {
            r.outcome = TrialOutcome::HypothesisFails;
            r.message = "min cut does not separate: witness " + to_string(pr.hypothesis.witness);
            return r;
        }
        r.fs = pr.separator;
        r.x = pitz_x(t, r.f);
        SeparationCertificate xc = separates_at_depths(inst->presentation, r.x, inst->u, TargetSpec::of_ray(inst->ray), cfg.depths, cfg.reps);
        if (!xc.separated)
            r.witness = xc.witness;
        if (!pr.certificate.separated) {
            r.outcome = TrialOutcome::Violation;
            r.message = "F_S witness " + to_string(pr.certificate.witness);
        } else if (!xc.separated) {
            r.outcome = TrialOutcome::Finding;
        } else {
            r.outcome = TrialOutcome::XHolds;
            return r;
        }
        r.scenario = scenario_text(cfg, *inst, r);
    } catch (const Error& e) {
        r.outcome = TrialOutcome::Failed;
        r.message = e.what();
    }
    return r;
}

std::size_t SearchResult::count(TrialOutcome o) const
{
    return static_cast<std::size_t>(std::count_if(trials.begin(), trials.end(), [o](const TrialRecord& r) { return r.outcome == o; }));
}

std::vector<const TrialRecord*> SearchResult::findings() const
{
    std::vector<const TrialRecord*> out;
    for (const auto& r : trials)
        if (r.outcome == TrialOutcome::Finding)
            out.push_back(&r);
    return out;
}

SearchResult random_search(const SearchConfig& cfg)
{
    SearchResult result;
    result.config = cfg;
    result.trials.resize(cfg.trials);
    unsigned jobs = cfg.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.jobs;
    if (jobs <= 1 || cfg.trials <= 1) {
        for (std::uint64_t k = 0; k < cfg.trials; ++k)
            result.trials[k] = run_trial(cfg, k);
        return result;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, cfg.trials));
    for (unsigned w = 0; w < jobs; ++w) {
        pool.emplace_back([&] {
            for (std::uint64_t k = next++; k < cfg.trials; k = next++)
                result.trials[k] = run_trial(cfg, k);
        });
    }
    for (auto& th : pool)
        th.join();
    return result;
}

std::string finding_file_name(const TrialRecord& r)
{
    std::string kind = r.outcome == TrialOutcome::Finding ? "finding" : "violation";
    return kind + "-" + std::to_string(r.trial) + ".scenario";
}

std::string report(const SearchResult& r)
{
    std::ostringstream out;
    out << "seed=" << r.config.seed << '\n';
    out << "trials=" << r.config.trials << '\n';
    out << "depths=" << index_list(r.config.depths) << '\n';
    out << "reps=" << r.config.reps << '\n';
    for (TrialOutcome o : {TrialOutcome::DeadEnd, TrialOutcome::UMeetsW, TrialOutcome::HypothesisFails, TrialOutcome::XHolds, TrialOutcome::Finding, TrialOutcome::Violation, TrialOutcome::Failed})
        out << "count." << to_string(o) << "=" << r.count(o) << '\n';
    std::size_t n = 0;
    for (const auto& t : r.trials) {
        if (t.outcome == TrialOutcome::Finding) {
            std::string key = "finding." + std::to_string(n++) + ".";
            out << key << "trial=" << t.trial << '\n';
            out << key << "motif=" << t.motif << '\n';
            out << key << "F=" << to_string(t.f) << '\n';
            out << key << "X=" << to_string(t.x) << '\n';
            out << key << "F_S=" << to_string(t.fs) << '\n';
            out << key << "witness=" << to_string(t.witness) << '\n';
            out << key << "file=" << finding_file_name(t) << '\n';
        }
    }
    for (const auto& t : r.trials) {
        if (t.outcome == TrialOutcome::Violation)
            out << "violation." << t.trial << "=" << t.message << " (" << finding_file_name(t) << ")\n";
        if (t.outcome == TrialOutcome::Failed)
            out << "error." << t.trial << "=" << t.message << '\n';
    }
    return out.str();
}

} // namespace domtorso
