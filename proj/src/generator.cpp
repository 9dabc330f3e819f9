#include "domtorso/generator.hpp"

#include "domtorso/error.hpp"

#include <algorithm>

namespace domtorso {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t Rng::below(std::uint64_t n)
{
    if (n == 0)
        throw Error("Rng::below(0)");
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do
        x = engine_();
    while (x >= limit);
    return x % n;
}

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) { return Rng(splitmix64(seed + trial)); }

namespace {

const std::vector<Cardinal> kMultiplicities{Cardinal::finite(1), Cardinal::finite(2), Cardinal::finite(3), Cardinal::aleph0(), Cardinal::aleph1()};

void add_inner(Rng& rng, ComponentPattern& pat)
{
    std::size_t n = rng.between(1, 2);
    for (std::size_t k = 0; k < n; ++k)
        pat.innerVertices.push_back("v" + std::to_string(k));
    if (n == 2)
        pat.innerEdges.push_back({{"v0", std::nullopt}, {"v1", std::nullopt}});
}

LocalVertex some_local(Rng& rng, const ComponentPattern& pat)
{
    return {rng.pick(pat.innerVertices), std::nullopt};
}

/// 1-3 distinct ground indices below `bound`.
std::vector<Index> ground_indices(Rng& rng, Index bound)
{
    std::vector<Index> out;
    std::size_t n = rng.between(1, 3);
    while (out.size() < n) {
        Index k = rng.below(bound);
        if (std::find(out.begin(), out.end(), k) == out.end())
            out.push_back(k);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void add_spine(GraphPresentation& p, const std::string& name, Cardinal size)
{
    p.families.push_back({name, size, {}});
    p.hostEdges.push_back({VertexTerm::shifted(name, 0), VertexTerm::shifted(name, 1)});
}

} // namespace

GraphPresentation random_finite_presentation(Rng& rng)
{
    GraphPresentation p;
    Index size = rng.between(4, 8);
    add_spine(p, "X", Cardinal::finite(size));
    bool ladder = rng.chance(1, 3);
    if (ladder) {
        add_spine(p, "W", Cardinal::finite(size));
        p.hostEdges.push_back({VertexTerm::shifted("X", 0), VertexTerm::shifted("W", 0)});
    }
    std::size_t indexed = rng.between(0, 2);
    for (std::size_t k = 0; k < indexed; ++k) {
        ComponentPattern pat;
        pat.name = "P" + std::to_string(k);
        pat.kind = CopyKind::Indexed;
        add_inner(rng, pat);
        std::size_t terms = rng.between(1, 3);
        pat.attachEdges.push_back({some_local(rng, pat), VertexTerm::shifted(ladder && rng.chance(1, 3) ? "W" : "X", rng.below(3))});
        for (std::size_t t = 1; t < terms; ++t) {
            if (rng.chance(1, 4))
                pat.attachEdges.push_back({some_local(rng, pat), VertexTerm::ground("X", rng.below(size))});
            else
                pat.attachEdges.push_back({some_local(rng, pat), VertexTerm::shifted("X", rng.below(3))});
        }
        p.patterns.push_back(std::move(pat));
    }
    std::size_t replicated = rng.between(0, 3);
    for (std::size_t k = 0; k < replicated; ++k) {
        ComponentPattern pat;
        pat.name = "R" + std::to_string(k);
        pat.kind = CopyKind::Replicated;
        pat.multiplicity = Cardinal::finite(rng.between(1, 3));
        add_inner(rng, pat);
        // Reuse an earlier fan's attachments now and then so classes collide.
        if (k > 0 && p.patterns.back().kind == CopyKind::Replicated && rng.chance(1, 3)) {
            for (const auto& a : p.patterns.back().attachEdges)
                pat.attachEdges.push_back({some_local(rng, pat), a.target});
        } else {
            for (Index g : ground_indices(rng, size))
                pat.attachEdges.push_back({some_local(rng, pat), VertexTerm::ground("X", g)});
        }
        p.patterns.push_back(std::move(pat));
    }
    return p;
}

GraphPresentation random_presentation(Rng& rng)
{
    GraphPresentation p;
    add_spine(p, "X", Cardinal::aleph0());
    bool ladder = rng.chance(1, 3);
    if (ladder) {
        add_spine(p, "W", Cardinal::aleph0());
        p.hostEdges.push_back({VertexTerm::shifted("X", 0), VertexTerm::shifted("W", 0)});
    } else if (rng.chance(1, 4)) {
        p.hostEdges.push_back({VertexTerm::shifted("X", 0), VertexTerm::shifted("X", 2)});
    }

    if (rng.chance(1, 3)) {
        ComponentPattern y;
        y.name = "Y";
        y.kind = CopyKind::Indexed;
        y.innerVertices = {"y"};
        y.attachEdges = {{{"y", std::nullopt}, VertexTerm::shifted("X", 0)}, {{"y", std::nullopt}, VertexTerm::shifted("X", 1)}};
        p.patterns.push_back(std::move(y));
        ComponentPattern z;
        z.name = "Z";
        z.kind = CopyKind::Replicated;
        z.multiplicity = rng.chance(1, 2) ? Cardinal::aleph1() : Cardinal::aleph0();
        z.innerVertices = {"z"};
        Index a = rng.below(4);
        for (Index k = 0; k < 3; ++k)
            z.attachEdges.push_back({{"z", std::nullopt}, VertexTerm::ground("X", a + k)});
        p.patterns.push_back(std::move(z));
    }

    std::size_t indexed = rng.between(0, 2);
    for (std::size_t k = 0; k < indexed; ++k) {
        ComponentPattern pat;
        pat.name = "P" + std::to_string(k);
        pat.kind = CopyKind::Indexed;
        add_inner(rng, pat);
        Index c = rng.below(3);
        pat.attachEdges.push_back({some_local(rng, pat), VertexTerm::shifted("X", c)});
        if (rng.chance(2, 3))
            pat.attachEdges.push_back({some_local(rng, pat), VertexTerm::shifted(ladder && rng.chance(1, 2) ? "W" : "X", c + 1)});
        if (rng.chance(1, 4))
            pat.attachEdges.push_back({some_local(rng, pat), VertexTerm::ground("X", rng.below(5))});
        p.patterns.push_back(std::move(pat));
    }

    std::size_t replicated = rng.between(0, 2);
    bool wantInfinite = rng.chance(1, 2);
    for (std::size_t k = 0; k < replicated; ++k) {
        ComponentPattern pat;
        pat.name = "R" + std::to_string(k);
        pat.kind = CopyKind::Replicated;
        pat.multiplicity = rng.pick(kMultiplicities);
        add_inner(rng, pat);
        for (Index g : ground_indices(rng, 6))
            pat.attachEdges.push_back({some_local(rng, pat), VertexTerm::ground("X", g)});
        p.patterns.push_back(std::move(pat));
    }
    bool hasInfinite = std::any_of(p.patterns.begin(), p.patterns.end(), [](const ComponentPattern& q) { return q.kind == CopyKind::Replicated && q.multiplicity.is_infinite(); });
    if (wantInfinite && !hasInfinite) {
        ComponentPattern pat;
        pat.name = "R" + std::to_string(replicated);
        pat.kind = CopyKind::Replicated;
        pat.multiplicity = rng.chance(1, 2) ? Cardinal::aleph0() : Cardinal::aleph1();
        pat.innerVertices = {"v0"};
        for (Index g : ground_indices(rng, 6))
            pat.attachEdges.push_back({{"v0", std::nullopt}, VertexTerm::ground("X", g)});
        p.patterns.push_back(std::move(pat));
    }
    return p;
}

namespace {

struct PeriodTemplate {
    std::vector<VertexPattern> period;
    /// Offset of the leading X term.
    Index lead = 0;
};

VertexPattern host_pattern(const std::string& family, Index offset)
{
    return VertexPattern{Vertex::host(family, offset), VertexPattern::Slot::Index};
}

std::vector<PeriodTemplate> period_templates(const GraphPresentation& p)
{
    std::vector<PeriodTemplate> out;
    out.push_back({{host_pattern("X", 0)}, 0});
    for (const auto& pat : p.patterns) {
        if (pat.kind != CopyKind::Indexed)
            continue;
        for (const auto& v : pat.innerVertices) {
            std::vector<Index> xs;
            for (const auto& a : pat.attachEdges)
                if (a.local.name == v && a.target.affine && a.target.family == "X")
                    xs.push_back(a.target.offset);
            for (Index c : xs)
                if (std::find(xs.begin(), xs.end(), c + 1) != xs.end()) {
                    VertexPattern inner{Vertex::inner(pat.name, CopyKind::Indexed, 0, {v, std::nullopt}), VertexPattern::Slot::Index};
                    out.push_back({{host_pattern("X", c), inner}, c});
                }
        }
    }
    return out;
}

} // namespace

std::optional<RaySpec> random_tendril(Rng& rng, const GraphPresentation& p)
{
    std::vector<PeriodTemplate> templates = period_templates(p);
    const PeriodTemplate& tpl = rng.pick(templates);
    RaySpec s;
    s.name = "S";
    s.period = tpl.period;

    // Entry through a fan of infinite multiplicity when one exists.
    std::vector<const ComponentPattern*> fans;
    for (const auto& pat : p.patterns)
        if (pat.kind == CopyKind::Replicated && pat.multiplicity.is_infinite())
            fans.push_back(&pat);
    Index first = rng.between(1, 4);
    if (!fans.empty() && rng.chance(2, 3)) {
        const ComponentPattern& fan = *rng.pick(fans);
        for (const auto& local : fan.innerVertices) {
            std::vector<Index> xs;
            for (const auto& a : fan.attachEdges)
                if (a.local.name == local && a.target.family == "X")
                    xs.push_back(a.target.offset);
            if (xs.size() < 2)
                continue;
            std::sort(xs.begin(), xs.end());
            Index exit = xs.back();
            if (rng.chance(1, 2))
                s.prefix.push_back(Vertex::host("X", xs[rng.below(xs.size() - 1)]));
            s.prefix.push_back(Vertex::inner(fan.name, CopyKind::Replicated, rng.below(3), {local, std::nullopt}));
            first = exit;
            break;
        }
    }
    if (first < tpl.lead)
        return std::nullopt;
    s.start = first - tpl.lead;
    try {
        validate_ray(p, s);
    } catch (const Error&) {
        return std::nullopt;
    }
    return s;
}

std::optional<GeneratedInstance> random_instance(Rng& rng)
{
    GeneratedInstance g;
    g.presentation = random_presentation(rng);
    if (!validate_presentation(g.presentation, 20).ok)
        return std::nullopt;
    auto ray = random_tendril(rng, g.presentation);
    if (!ray)
        return std::nullopt;
    g.ray = *ray;
    g.u.insert(Vertex::host("X", 0));
    if (g.presentation.family("W") && rng.chance(1, 4))
        g.u.insert(Vertex::host("W", 0));
    g.motif = g.presentation.pattern("Z") ? "ladder-fan" : "random";
    return g;
}

} // namespace domtorso
