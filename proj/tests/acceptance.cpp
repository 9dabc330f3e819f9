// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "domtorso/adhesion.hpp"
#include "domtorso/example4.hpp"
#include "domtorso/generator.hpp"
#include "domtorso/scenario.hpp"
#include "domtorso/search.hpp"
#include "domtorso/separation.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace domtorso;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = false;
    std::string detail;
};

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

const std::vector<Index> kGrid = kDefaultDepths;

RaySpec ex4_ray() { return parse_ray("ray S prefix X[2] Z#0.z period X[n] Y@n.y start 3"); }

/// Valid random instances with a tendril, in seed order.
void for_instances(std::uint64_t salt, std::size_t want, const std::function<bool(const GeneratedInstance&, Rng&)>& body)
{
    std::size_t got = 0;
    for (std::uint64_t trial = 0; got < want && trial < want * 20; ++trial) {
        Rng rng = trial_rng(salt, trial);
        auto inst = random_instance(rng);
        if (inst && body(*inst, rng))
            ++got;
    }
}

Outcome ac1()
{
    auto t0 = Clock::now();
    Example4Result r = run_example4();
    double secs = seconds_since(t0);
    std::ostringstream d;
    for (const auto& a : r.assertions)
        d << a.name << (a.ok ? "" : "(FAIL)") << " ";
    d << "in " << secs << "s";
    return {r.ok() && r.assertions.size() == 6 && secs < 1.0, d.str()};
}

Outcome ac2()
{
    auto t0 = Clock::now();
    std::size_t instances = 0, mismatches = 0, components = 0;
    for (std::uint64_t trial = 0; instances < 200 && trial < 4000; ++trial) {
        Rng rng = trial_rng(0xac2, trial);
        GraphPresentation p = random_finite_presentation(rng);
        if (!validate_presentation(p, 10).ok)
            continue;
        ++instances;
        AdhesionClassification c = classify_adhesion(p);
        FiniteTruncation t = truncate(p, 12, 6);
        VertexSet host;
        for (const auto& v : t.graph.vertices())
            if (v.is_host())
                host.insert(v);
        auto comps = brute_force_components(t.graph, host);
        std::map<VertexSet, std::uint64_t> sharing;
        for (const auto& comp : comps)
            ++sharing[comp.adhesion];
        std::uint64_t total = 0;
        for (const auto& fam : enumerate_component_classes(p))
            total += fam.count.value();
        bool same = total == comps.size();
        for (const auto& comp : comps) {
            ComponentId d = comp.vertices.begin()->component();
            const AdhesionClass& cls = c.classes[c.class_of(d)];
            same = same && adhesion_set_of(p, d) == comp.adhesion && cls.countPerInstance == Cardinal::finite(sharing[comp.adhesion]) &&
                cls.side() == Side::Prime;
        }
        components += comps.size();
        mismatches += !same;
    }
    double secs = seconds_since(t0);
    std::ostringstream d;
    d << instances << " presentations, " << components << " components, " << mismatches << " mismatches, " << secs << "s";
    return {instances == 200 && mismatches == 0 && secs < 30.0, d.str()};
}

Outcome ac3()
{
    std::size_t trials = 0, holds = 0, violations = 0, skipped = 0;
    for_instances(0xac3, 100, [&](const GeneratedInstance& inst, Rng&) {
        Torso t = build_torso(inst.presentation);
        ProjectionSeq proj = k_project(t, mask_sequence(inst.presentation, inst.ray));
        FiniteTruncation k = t.truncate(kGrid.back(), kDefaultReps);
        VertexSet w = TargetSpec::of_projection(proj).in(k);
        for (const auto& u : inst.u)
            if (w.contains(u)) {
                ++skipped;
                return false;
            }
        VertexSet f = min_separator(k.graph, inst.u, w);
        LemmaReport r = lemma_check(t, inst.u, inst.ray, f, kGrid, kDefaultReps);
        if (!r.hypothesis.separated) {
            ++skipped;
            return false;
        }
        ++trials;
        bool full = r.conclusion.separated && r.conclusion.checked.size() == kGrid.size();
        holds += full;
        violations += r.violation();
        return true;
    });
    std::ostringstream d;
    d << holds << "/" << trials << " conclusions separated at every depth, " << violations << " violations, " << skipped << " skipped (U meets W)";
    return {trials == 100 && holds == 100 && violations == 0, d.str()};
}

Outcome ac4()
{
    std::size_t instances = 0, bad = 0, cliques = 0, vds = 0;
    for_instances(0xac4, 100, [&](const GeneratedInstance& inst, Rng&) {
        ++instances;
        const GraphPresentation& p = inst.presentation;
        Torso t = build_torso(p);
        bool ok = true;
        for (const auto& a : t.completed_sets()) {
            ++cliques;
            for (const auto& u : a)
                for (const auto& v : a)
                    if (u < v && !t.adjacent(u, v))
                        ok = false;
        }
        for (Index depth : {10, 20}) {
            FiniteTruncation kt = t.truncate(depth, kDefaultReps);
            for (const auto& v : kt.graph.vertices()) {
                if (!v.is_contracted())
                    continue;
                ++vds;
                VertexSet nb;
                for (std::size_t w : kt.graph.neighbors(*kt.graph.find(v)))
                    nb.insert(kt.graph.vertex(w));
                ok = ok && nb == adhesion_set_of(p, v.component());
            }
            FiniteTruncation gt = truncate(p, depth, kDefaultReps);
            VertexSet host;
            for (const auto& v : gt.graph.vertices())
                if (v.is_host())
                    host.insert(v);
            for (const auto& comp : brute_force_components(gt.graph, host)) {
                Vertex image = rho_of(t, *comp.vertices.begin());
                for (const auto& v : comp.vertices)
                    ok = ok && rho_of(t, v) == image;
            }
            Torso rev = build_torso(p, EtaOrder::Reversed);
            ok = ok && rev.truncate(depth, kDefaultReps).graph.edges() == kt.graph.edges() &&
                rev.truncate(depth, kDefaultReps).graph.vertices() == kt.graph.vertices();
        }
        bad += !ok;
        return true;
    });
    std::ostringstream d;
    d << instances << " instances, " << cliques << " completed sets, " << vds << " v_D neighbourhoods, " << bad << " failures";
    return {instances == 100 && bad == 0, d.str()};
}

Outcome ac5()
{
    std::size_t triples = 0, subset = 0, bounded = 0, monotone = 0, separatedCases = 0;
    for_instances(0xac5, 100, [&](const GeneratedInstance& inst, Rng& rng) {
        const GraphPresentation& p = inst.presentation;
        Torso t = build_torso(p);
        // A random F of host vertices and torso vertices from the K-truncation.
        FiniteTruncation k = t.truncate(8, kDefaultReps);
        VertexSet f;
        std::size_t size = 1 + rng.below(4);
        for (std::size_t j = 0; j < size; ++j)
            f.insert(rng.pick(k.graph.vertices()));
        ++triples;
        VertexSet x = pitz_x(t, f);
        VertexSet fs = s_modification(t, inst.ray, f);
        subset += std::includes(fs.begin(), fs.end(), x.begin(), x.end());
        std::size_t bound = 0;
        for (const auto& v : f)
            bound += v.is_host();
        for (const auto& d : d_hat_prime(t, f))
            bound += adhesion_set_of(p, d).size();
        for (const auto& d : d_hat_double_prime(t, inst.ray, f))
            bound += adhesion_set_of(p, d).size();
        bounded += fs.size() <= bound;

        TargetSpec target = TargetSpec::of_ray(inst.ray);
        SeparationCertificate base = separates_at_depths(p, fs, inst.u, target, {10, 20}, kDefaultReps);
        VertexSet bigger = fs;
        bigger.insert(Vertex::host("X", rng.below(12)));
        SeparationCertificate sup = separates_at_depths(p, bigger, inst.u, target, {10, 20}, kDefaultReps);
        separatedCases += base.separated;
        monotone += !base.separated || sup.separated;
        return true;
    });
    std::ostringstream d;
    d << triples << " triples: X in F_S " << subset << ", F_S bounded " << bounded << ", monotone " << monotone << " (" << separatedCases << " separated bases)";
    return {triples == 100 && subset == 100 && bounded == 100 && monotone == 100, d.str()};
}

Outcome ac6()
{
    std::size_t infinite = 0, conservative = 0, finiteFlagged = 0, finiteWithPrime = 0, finiteOk = 0;
    for (std::uint64_t trial = 0; trial < 200; ++trial) {
        Rng rng = trial_rng(0xac6, trial);
        GraphPresentation p = random_presentation(rng);
        if (validate_presentation(p, 20).ok) {
            ++infinite;
            ConservativityReport r = conservativity_check(build_torso(p));
            conservative += r.conservative && r.torsoSize == r.hostSize;
        }
        GraphPresentation q = random_finite_presentation(rng);
        if (validate_presentation(q, 10).ok) {
            ConservativityReport r = conservativity_check(build_torso(q));
            bool hasPrime = r.primeComponents != Cardinal::finite(0);
            finiteWithPrime += hasPrime;
            finiteFlagged += hasPrime && !r.conservative;
            finiteOk += !hasPrime && r.conservative;
        }
    }
    std::ostringstream d;
    d << conservative << "/" << infinite << " infinite-host instances conservative, " << finiteFlagged << "/" << finiteWithPrime << " finite hosts with prime components flagged";
    return {infinite > 0 && conservative == infinite && finiteWithPrime > 0 && finiteFlagged == finiteWithPrime, d.str()};
}

Outcome ac7()
{
    std::size_t rays = 0, walkOk = 0, definitive = 0, noDoublePrime = 0;
    auto check = [&](const GraphPresentation& p, const RaySpec& s) {
        ++rays;
        Torso t = build_torso(p);
        ProjectionSeq proj = k_project(t, mask_sequence(p, s));
        bool walk = true, clean = true;
        for (Index depth : kGrid) {
            FiniteTruncation k = t.truncate(depth, kDefaultReps);
            std::vector<Vertex> terms = proj.terms_up_to(depth + 2);
            for (std::size_t j = 0; j < terms.size(); ++j) {
                if (terms[j].is_contracted() && t.classification().side_of(terms[j].component()) != Side::Prime)
                    clean = false;
                if (j && k.graph.contains(terms[j - 1]) && k.graph.contains(terms[j]) && !k.graph.has_edge(terms[j - 1], terms[j]))
                    walk = false;
            }
        }
        LocalFinitenessVerdict lf = check_local_finiteness(t, proj, kGrid.back());
        walkOk += walk;
        noDoublePrime += clean;
        definitive += proj.periodic() && lf.ok && lf.definitive;
    };
    check(parse_presentation(example4_presentation_text()), ex4_ray());
    for_instances(0xac7, 99, [&](const GeneratedInstance& inst, Rng&) {
        check(inst.presentation, inst.ray);
        return true;
    });
    std::ostringstream d;
    d << rays << " rays: walks in K " << walkOk << ", definitive local finiteness " << definitive << ", free of double-prime terms " << noDoublePrime;
    return {rays == 100 && walkOk == rays && definitive == rays && noDoublePrime == rays, d.str()};
}

Outcome ac8()
{
    Torso t = build_torso(parse_presentation(example4_presentation_text()));
    RemarkReport r = remark_tail_check(t, {Vertex::host("X", 0)}, ex4_ray(), parse_vertex_set("{X[2],X[3]}"), kGrid, kDefaultReps);
    bool ok = r.x == parse_vertex_set("{X[2],X[3]}") && r.lastMeeting == Index{2} && r.certificate.separated &&
        r.certificate.checked.size() == kGrid.size() && r.tail.at(0) == parse_vertex("Y@3.y");
    std::ostringstream d;
    d << "X=" << to_string(r.x) << ", last meeting " << (r.lastMeeting ? std::to_string(*r.lastMeeting) : "none") << ", tail " << to_string(r.tail.sample(3))
      << "..., " << (r.certificate.separated ? "separated" : "not separated");
    return {ok, d.str()};
}

Outcome ac9()
{
    SearchConfig cfg;
    cfg.seed = 1;
    cfg.trials = 200;
    SearchResult a = random_search(cfg);
    cfg.jobs = 0;
    SearchResult b = random_search(cfg);
    bool identical = report(a) == report(b);
    std::size_t replayed = 0;
    auto findings = a.findings();
    for (const TrialRecord* f : findings) {
        auto results = run_checks(parse_scenario(f->scenario));
        bool ok = results.size() == 2;
        for (const auto& r : results)
            ok = ok && r.ok;
        replayed += ok;
    }
    std::ostringstream d;
    d << "reports " << (identical ? "identical" : "DIFFER") << ", " << findings.size() << " X-failure findings, " << replayed << " replayed";
    return {identical && !findings.empty() && replayed == findings.size(), d.str()};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1 example4 golden run", ac1},
        {"AC2 adhesion oracle equivalence", ac2},
        {"AC3 lemma property", ac3},
        {"AC4 torso invariants", ac4},
        {"AC5 separator algebra", ac5},
        {"AC6 conservativity", ac6},
        {"AC7 projection checks", ac7},
        {"AC8 remark on example4", ac8},
        {"AC9 search determinism", ac9},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.ok ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
        failed += !o.ok;
    }
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << (criteria.size() - failed) << "/" << criteria.size() << std::endl;
    return failed ? 1 : 0;
}
