#include "domtorso/ray.hpp"

#include "domtorso/error.hpp"
#include "text.hpp"

#include <algorithm>
#include <map>

namespace domtorso {

Vertex RaySpec::at(Index pos) const
{
    if (pos < prefix.size())
        return prefix[pos];
    if (period.empty())
        throw Error("ray " + name + " has no period");
    Index rel = pos - prefix.size();
    Index cycle = rel / period.size();
    return period[rel % period.size()].at(start + cycle * step);
}

std::vector<Vertex> RaySpec::unroll(Index cycles) const
{
    return sample(prefix.size() + cycles * period.size());
}

std::vector<Vertex> RaySpec::sample(Index length) const
{
    std::vector<Vertex> out;
    out.reserve(length);
    for (Index k = 0; k < length; ++k)
        out.push_back(at(k));
    return out;
}

RaySpec RaySpec::peeled(Index cycles) const
{
    RaySpec r = *this;
    r.prefix = unroll(cycles);
    r.start = start + cycles * step;
    return r;
}

RaySpec parse_ray(std::string_view text, std::size_t line)
{
    detail::Cursor cur(text, line);
    RaySpec s;
    if (cur.consume_word("ray"))
        s.name = cur.name();
    if (cur.consume_word("prefix")) {
        while (!cur.at_end() && !cur.consume_word("period"))
            s.prefix.push_back(detail::parse_address(cur, false).base);
    } else {
        cur.expect_word("period");
    }
    while (!cur.at_end() && !cur.consume_word("start"))
        s.period.push_back(detail::parse_address(cur, true));
    if (s.period.empty())
        cur.fail("a ray needs at least one period term");
    s.start = cur.number();
    if (cur.consume_word("step")) {
        s.step = cur.number();
        if (s.step == 0)
            cur.fail("step must be positive");
    }
    if (!cur.at_end())
        cur.fail("unexpected trailing text in ray");
    return s;
}

std::string to_string(const RaySpec& s)
{
    std::string out;
    if (!s.name.empty())
        out = "ray " + s.name + " ";
    out += "prefix";
    for (const auto& v : s.prefix)
        out += " " + to_string(v);
    out += " period";
    for (const auto& p : s.period)
        out += " " + to_string(p);
    out += " start " + std::to_string(s.start);
    if (s.step != 1)
        out += " step " + std::to_string(s.step);
    return out;
}

Index cycles_beyond(const RaySpec& s, Index bound)
{
    if (s.start > bound)
        return 0;
    return (bound - s.start) / s.step + 1;
}

namespace {

Index max_local_pos(const GraphPresentation& p)
{
    Index m = 0;
    for (const auto& pat : p.patterns) {
        for (const auto& e : pat.innerEdges)
            m = std::max({m, e.a.pos.value_or(0), e.b.pos.value_or(0)});
        for (const auto& a : pat.attachEdges)
            m = std::max(m, a.local.pos.value_or(0));
    }
    return m;
}

bool infinite_slot(const GraphPresentation& p, const VertexPattern& v)
{
    const Vertex& b = v.base;
    if (v.slot == VertexPattern::Slot::LocalPos)
        return true;
    if (b.is_host()) {
        const HostFamily* f = p.family(b.name);
        return f && f->size.is_infinite();
    }
    const ComponentPattern* pat = p.pattern(b.name);
    if (!pat)
        return false;
    if (pat->kind == CopyKind::Replicated)
        return pat->multiplicity.is_infinite();
    IndexDomain d = index_domain(p, *pat);
    return !d.empty && d.infinite;
}

} // namespace

void validate_ray(const GraphPresentation& p, const RaySpec& s)
{
    std::string label = "ray " + (s.name.empty() ? std::string("?") : s.name);
    if (s.period.empty())
        throw Error(label + ": empty period");
    if (s.step == 0)
        throw Error(label + ": step must be positive");
    for (const auto& v : s.prefix)
        if (v.is_contracted())
            throw Error(label + ": torso vertex " + to_string(v) + " is not a vertex of G");
    for (const auto& v : s.period) {
        if (v.base.is_contracted())
            throw Error(label + ": torso vertex " + to_string(v) + " is not a vertex of G");
        if (!v.varies())
            throw Error(label + ": period term " + to_string(v) + " does not depend on n");
        if (!infinite_slot(p, v))
            throw Error(label + ": period term " + to_string(v) + " ranges over a finite family");
    }

    // Period terms sharing everything but the varying slot must never meet.
    std::map<std::pair<Vertex, VertexPattern::Slot>, std::set<Index>> residues;
    for (const auto& v : s.period) {
        VertexPattern zero = v;
        if (v.slot == VertexPattern::Slot::Index)
            zero.base.index = 0;
        else
            zero.base.local.pos = 0;
        if (!residues[{zero.base, v.slot}].insert(v.offset() % s.step).second)
            throw Error(label + ": period term " + to_string(v) + " repeats a vertex in a later cycle");
    }

    // Beyond this bound every adjacency between two period terms comes from
    // an affine template and is invariant under shifting n.
    Index generic = max_ground_index(p) + max_affine_offset(p) + max_local_pos(p) + 2;
    for (const auto& v : s.prefix)
        generic = std::max({generic, v.index, v.local.pos.value_or(0)});
    Index cycles = cycles_beyond(s, generic) + 2;

    std::vector<Vertex> walk = s.unroll(cycles);
    std::set<Vertex> seen;
    for (std::size_t k = 0; k < walk.size(); ++k) {
        if (!contains_vertex(p, walk[k]))
            throw Error(label + ": position " + std::to_string(k) + " (" + to_string(walk[k]) + ") is not a vertex of G");
        if (!seen.insert(walk[k]).second)
            throw Error(label + ": vertex " + to_string(walk[k]) + " repeats");
        if (k > 0 && !adjacent(p, walk[k - 1], walk[k]))
            throw Error(label + ": " + to_string(walk[k - 1]) + " and " + to_string(walk[k]) + " are not adjacent");
    }
}

std::vector<Vertex> ray_vertices_in(const RaySpec& s, const FiniteGraph& g, Index depth, Index reps)
{
    std::vector<Vertex> out;
    Index cycles = cycles_beyond(s, std::max(depth, reps));
    for (const auto& v : s.unroll(cycles))
        if (g.contains(v))
            out.push_back(v);
    return out;
}

} // namespace domtorso
