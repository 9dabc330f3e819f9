#include "domtorso/projection.hpp"

#include "domtorso/error.hpp"

#include <algorithm>
#include <map>

namespace domtorso {

namespace {

std::vector<Vertex> unroll_terms(const std::vector<Vertex>& prefix, const std::vector<VertexPattern>& period, Index start, Index step, Index cycles)
{
    std::vector<Vertex> out = prefix;
    for (Index c = 0; c < cycles; ++c)
        for (const auto& p : period)
            out.push_back(p.at(start + c * step));
    return out;
}

Vertex mask(const Vertex& v)
{
    if (v.is_host())
        return v;
    return Vertex::contracted(v.component());
}

VertexPattern mask(const VertexPattern& p)
{
    if (p.base.is_host())
        return p;
    VertexPattern out;
    out.base = Vertex::contracted(p.base.component());
    out.slot = p.slot == VertexPattern::Slot::Index ? VertexPattern::Slot::Index : VertexPattern::Slot::None;
    return out;
}

VertexPattern shifted(VertexPattern p, Index by)
{
    switch (p.slot) {
    case VertexPattern::Slot::Index:
        p.base.index += by;
        break;
    case VertexPattern::Slot::LocalPos:
        p.base.local.pos = *p.base.local.pos + by;
        break;
    case VertexPattern::Slot::None:
        break;
    }
    return p;
}

void project_finite(const Torso& t, const std::vector<Vertex>& masked, Index firstPos, std::vector<Vertex>& out, std::vector<Index>& origin)
{
    for (std::size_t k = 0; k < masked.size(); ++k) {
        const Vertex& v = masked[k];
        if (v.is_host()) {
            out.push_back(v);
            origin.push_back(firstPos + k);
            continue;
        }
        if (t.classification().side_of(v.component()) == Side::DoublePrime)
            continue;
        if (k > 0 && masked[k - 1] == v)
            continue;
        out.push_back(v);
        origin.push_back(firstPos + k);
    }
}

} // namespace

std::vector<Vertex> MaskedSequence::unroll(Index cycles) const { return unroll_terms(prefix, period, start, step, cycles); }

std::string masked_term_string(const Vertex& v)
{
    if (v.is_contracted())
        return "Comp(" + to_string(v.component()) + ")";
    return to_string(v);
}

std::string to_string(const MaskedSequence& m)
{
    std::string out = "(";
    bool first = true;
    for (const auto& v : m.prefix) {
        out += (first ? "" : ",") + masked_term_string(v);
        first = false;
    }
    if (m.periodic()) {
        out += first ? "" : ",";
        out += "[";
        for (std::size_t k = 0; k < m.period.size(); ++k) {
            const VertexPattern& p = m.period[k];
            std::string s = to_string(p);
            if (p.base.is_contracted())
                s = "Comp(" + s.substr(2, s.size() - 3) + ")";
            out += (k ? "," : "") + s;
        }
        out += "] from n=" + std::to_string(m.start);
        if (m.step != 1)
            out += " step " + std::to_string(m.step);
    }
    return out + ")";
}

MaskedSequence mask_sequence(const GraphPresentation& p, const std::vector<Vertex>& walk)
{
    MaskedSequence m;
    for (const auto& v : walk) {
        check_vertex(p, v);
        m.prefix.push_back(mask(v));
    }
    return m;
}

MaskedSequence mask_sequence(const GraphPresentation& p, const RaySpec& s)
{
    validate_ray(p, s);
    MaskedSequence m;
    for (const auto& v : s.prefix)
        m.prefix.push_back(mask(v));
    for (const auto& v : s.period)
        m.period.push_back(mask(v));
    m.start = s.start;
    m.step = s.step;
    return m;
}

std::vector<Vertex> ProjectionSeq::unroll(Index cycles) const { return unroll_terms(prefix, period, start, step, cycles); }

std::vector<Vertex> ProjectionSeq::terms_up_to(Index bound) const
{
    if (!periodic())
        return prefix;
    Index cycles = start > bound ? 0 : (bound - start) / step + 1;
    return unroll(cycles);
}

std::string to_string(const ProjectionSeq& s)
{
    std::string out = "(";
    for (std::size_t k = 0; k < s.prefix.size(); ++k)
        out += (k ? "," : "") + to_string(s.prefix[k]);
    if (s.periodic()) {
        out += s.prefix.empty() ? "[" : ",[";
        for (std::size_t k = 0; k < s.period.size(); ++k)
            out += (k ? "," : "") + to_string(s.period[k]);
        out += "] from n=" + std::to_string(s.start);
        if (s.step != 1)
            out += " step " + std::to_string(s.step);
    }
    return out + ")";
}

ProjectionSeq k_project(const Torso& t, const MaskedSequence& m)
{
    ProjectionSeq out;
    out.step = m.step;
    if (!m.periodic()) {
        project_finite(t, m.prefix, 0, out.prefix, out.prefixOrigin);
        return out;
    }

    auto host = std::find_if(m.period.begin(), m.period.end(), [](const VertexPattern& p) { return p.base.is_host(); });
    if (host == m.period.end()) {
        for (const auto& p : m.period)
            if (p.varies() || p != m.period.front())
                throw Error("a period without host terms must stay inside one component");
        std::vector<Vertex> terms = m.prefix;
        terms.push_back(m.period.front().base);
        project_finite(t, terms, 0, out.prefix, out.prefixOrigin);
        return out;
    }

    // Peel until every component term of the period has its generic side.
    Index bound = t.classification().exceptionBound;
    Index peel = m.start >= bound ? 0 : (bound - m.start + m.step - 1) / m.step;
    MaskedSequence r;
    r.prefix = m.unroll(peel);
    r.start = m.start + peel * m.step;
    r.step = m.step;

    // Rotate so the period opens with a host term; runs then never cross a
    // cycle boundary.
    std::size_t h = static_cast<std::size_t>(host - m.period.begin());
    for (std::size_t k = 0; k < h; ++k)
        r.prefix.push_back(m.period[k].at(r.start));
    for (std::size_t k = h; k < m.period.size(); ++k)
        r.period.push_back(m.period[k]);
    for (std::size_t k = 0; k < h; ++k)
        r.period.push_back(shifted(m.period[k], r.step));

    project_finite(t, r.prefix, 0, out.prefix, out.prefixOrigin);
    out.start = r.start;
    out.periodLength = r.period.size();
    for (std::size_t k = 0; k < r.period.size(); ++k) {
        const VertexPattern& p = r.period[k];
        if (p.base.is_host()) {
            out.period.push_back(p);
            out.periodOrigin.push_back(r.prefix.size() + k);
            continue;
        }
        if (t.classification().side_of(p.at(r.start).component()) == Side::DoublePrime)
            continue;
        if (k > 0 && r.period[k - 1] == p)
            continue;
        out.period.push_back(p);
        out.periodOrigin.push_back(r.prefix.size() + k);
    }

    std::vector<Vertex> concrete;
    std::vector<Index> ignored;
    project_finite(t, r.unroll(2), 0, concrete, ignored);
    if (concrete != out.unroll(2))
        throw Error("unstable period: projecting two concrete cycles gives " + to_string(concrete) + " but the symbolic period gives " + to_string(out.unroll(2)));
    return out;
}

ProjectionSeq k_project_sampled(const Torso& t, const RaySpec& s, Index length)
{
    if (length == 0)
        throw Error("ray sampled to length 0");
    MaskedSequence m = mask_sequence(t.presentation(), s.sample(length));
    ProjectionSeq out = k_project(t, m);
    out.step = s.step;
    out.sampled = true;
    return out;
}

bool is_tendril(const GraphPresentation&, const RaySpec& s)
{
    return std::any_of(s.period.begin(), s.period.end(), [](const VertexPattern& p) { return p.base.is_host(); });
}

TailComponent tail_component(const GraphPresentation& p, const RaySpec& s)
{
    if (is_tendril(p, s))
        throw Error("ray " + s.name + " is a tendril; its tail is not inside one component");
    validate_ray(p, s);
    ComponentId d = s.period.front().at(s.start).component();
    for (const auto& pat : s.period)
        for (Index c = 0; c < 2; ++c)
            if (pat.at(s.start + c * s.step).component() != d)
                throw Error("ray " + s.name + " leaves component " + to_string(d) + " in its period");
    Index n = s.prefix.size();
    while (n > 0 && s.prefix[n - 1].is_inner() && s.prefix[n - 1].component() == d)
        --n;
    return TailComponent{d, n};
}

LocalFinitenessVerdict check_local_finiteness(const Torso& t, const ProjectionSeq& s, Index depth)
{
    LocalFinitenessVerdict v;
    v.depthChecked = depth;
    if (s.periodic()) {
        v.definitive = true;
        for (const auto& p : s.period) {
            if (!p.varies()) {
                v.ok = false;
                v.reason = "period term " + to_string(p) + " recurs in every cycle";
                return v;
            }
        }
        v.ok = true;
        v.reason = "every period term advances by " + std::to_string(s.step) + " per cycle";
        return v;
    }
    if (!s.sampled) {
        v.ok = true;
        v.definitive = true;
        v.reason = "finite walk";
        return v;
    }
    // A ray meets each host vertex once and enters a component through a
    // fresh adhesion vertex each time.
    std::map<Vertex, Index> seen;
    Index window = std::min<Index>(depth, s.prefix.size());
    for (Index k = 0; k < window; ++k) {
        const Vertex& w = s.prefix[k];
        Index limit = 1;
        if (w.is_contracted())
            limit = adhesion_set_of(t.presentation(), w.component()).size() + 1;
        if (++seen[w] > limit) {
            v.ok = false;
            v.reason = to_string(w) + " occurs " + std::to_string(seen[w]) + " times in the first " + std::to_string(window) + " terms";
            return v;
        }
    }
    v.ok = true;
    v.reason = "no term exceeds its visit bound in the first " + std::to_string(window) + " terms";
    return v;
}

} // namespace domtorso
