#include "domtorso/separation.hpp"

#include "domtorso/error.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <sstream>

namespace domtorso {

SeparationCertificate separates_finite(const FiniteGraph& g, const VertexSet& f, const VertexSet& u, const VertexSet& targets)
{
    if (u.empty())
        throw Error("separation check with empty U");
    if (targets.empty())
        throw Error("separation check with no target vertices");
    std::vector<char> isTarget(g.size(), 0);
    std::vector<char> blocked(g.size(), 0);
    for (const auto& v : targets) {
        auto id = g.find(v);
        if (!id)
            throw Error("target " + to_string(v) + " is not in the graph");
        isTarget[*id] = 1;
    }
    for (const auto& v : f)
        if (auto id = g.find(v))
            blocked[*id] = 1;

    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> parent(g.size(), none);
    std::vector<char> seen(g.size(), 0);
    std::queue<std::size_t> queue;

    auto path_to = [&](std::size_t end) {
        std::vector<Vertex> path;
        for (std::size_t v = end; v != none; v = parent[v])
            path.push_back(g.vertex(v));
        std::reverse(path.begin(), path.end());
        return path;
    };

    for (const auto& v : u) {
        auto id = g.find(v);
        if (!id)
            throw Error("U vertex " + to_string(v) + " is not in the graph");
        if (blocked[*id] || seen[*id])
            continue;
        seen[*id] = 1;
        if (isTarget[*id])
            return SeparationCertificate{false, {v}, {}};
        queue.push(*id);
    }
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop();
        for (std::size_t w : g.neighbors(v)) {
            if (seen[w] || blocked[w])
                continue;
            seen[w] = 1;
            parent[w] = v;
            if (isTarget[w])
                return SeparationCertificate{false, path_to(w), {}};
            queue.push(w);
        }
    }
    return SeparationCertificate{true, {}, {}};
}

TargetSpec TargetSpec::of_ray(RaySpec s)
{
    TargetSpec t;
    t.kind = Kind::Ray;
    t.ray = std::move(s);
    return t;
}

TargetSpec TargetSpec::sampled_ray(RaySpec s, Index length)
{
    if (length == 0)
        throw Error("target ray sampled to length 0");
    TargetSpec t = of_ray(std::move(s));
    t.sampleLength = length;
    return t;
}

TargetSpec TargetSpec::of_projection(ProjectionSeq s)
{
    TargetSpec t;
    t.kind = Kind::Projection;
    t.projection = std::move(s);
    return t;
}

TargetSpec TargetSpec::of_set(VertexSet s)
{
    TargetSpec t;
    t.kind = Kind::Set;
    t.set = std::move(s);
    return t;
}

VertexSet TargetSpec::in(const FiniteTruncation& t) const
{
    VertexSet out;
    auto keep = [&](const std::vector<Vertex>& vs) {
        for (const auto& v : vs)
            if (t.graph.contains(v))
                out.insert(v);
    };
    switch (kind) {
    case Kind::Ray:
        if (sampleLength) {
            if (*sampleLength == 0)
                throw Error("target ray sampled to length 0");
            keep(ray.sample(*sampleLength));
        } else {
            keep(ray_vertices_in(ray, t.graph, t.depth, t.reps));
        }
        break;
    case Kind::Projection:
        keep(projection.terms_up_to(std::max(t.depth, t.reps)));
        break;
    case Kind::Set:
        keep({set.begin(), set.end()});
        break;
    }
    return out;
}

namespace {

SeparationCertificate at_depths(const std::function<FiniteTruncation(Index, Index)>& truncation, const VertexSet& f, const VertexSet& u, const TargetSpec& target, const std::vector<Index>& depths, Index reps)
{
    if (depths.empty())
        throw Error("no depths to check");
    if (u.empty())
        throw Error("separation check with empty U");
    SeparationCertificate out;
    out.separated = true;
    for (Index d : depths) {
        FiniteTruncation t = truncation(d, reps);
        VertexSet uu;
        for (const auto& v : u)
            if (t.graph.contains(v))
                uu.insert(v);
        if (uu.empty())
            throw Error("no vertex of U lies in the truncation at depth " + std::to_string(d));
        VertexSet targets = target.in(t);
        if (targets.empty())
            throw Error("no target vertex lies in the truncation at depth " + std::to_string(d));
        SeparationCertificate c = separates_finite(t.graph, f, uu, targets);
        out.checked.emplace_back(d, reps);
        if (!c.separated) {
            out.separated = false;
            out.witness = std::move(c.witness);
            return out;
        }
    }
    return out;
}

} // namespace

SeparationCertificate separates_at_depths(const GraphPresentation& p, const VertexSet& f, const VertexSet& u, const TargetSpec& target, const std::vector<Index>& depths, Index reps)
{
    return at_depths([&](Index d, Index r) { return truncate(p, d, r); }, f, u, target, depths, reps);
}

SeparationCertificate separates_at_depths(const Torso& k, const VertexSet& f, const VertexSet& u, const TargetSpec& target, const std::vector<Index>& depths, Index reps)
{
    return at_depths([&](Index d, Index r) { return k.truncate(d, r); }, f, u, target, depths, reps);
}

namespace {

/// Edmonds-Karp on a small network with integer capacities.
class FlowNetwork {
public:
    explicit FlowNetwork(std::size_t n)
        : adj_(n)
    {
    }

    void add_arc(std::size_t a, std::size_t b, long long cap)
    {
        adj_[a].push_back(arcs_.size());
        arcs_.push_back({b, cap});
        adj_[b].push_back(arcs_.size());
        arcs_.push_back({a, 0});
    }

    long long max_flow(std::size_t s, std::size_t t)
    {
        long long total = 0;
        while (true) {
            std::vector<std::size_t> via(adj_.size(), npos);
            std::vector<char> seen(adj_.size(), 0);
            std::queue<std::size_t> q;
            q.push(s);
            seen[s] = 1;
            while (!q.empty() && !seen[t]) {
                std::size_t v = q.front();
                q.pop();
                for (std::size_t a : adj_[v]) {
                    if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
                        seen[arcs_[a].to] = 1;
                        via[arcs_[a].to] = a;
                        q.push(arcs_[a].to);
                    }
                }
            }
            if (!seen[t])
                return total;
            long long push = std::numeric_limits<long long>::max();
            for (std::size_t v = t; v != s; v = arcs_[via[v] ^ 1].to)
                push = std::min(push, arcs_[via[v]].cap);
            for (std::size_t v = t; v != s; v = arcs_[via[v] ^ 1].to) {
                arcs_[via[v]].cap -= push;
                arcs_[via[v] ^ 1].cap += push;
            }
            total += push;
        }
    }

    /// Nodes that can still reach t in the residual network.
    std::vector<char> reaching(std::size_t t) const
    {
        std::vector<char> seen(adj_.size(), 0);
        std::queue<std::size_t> q;
        q.push(t);
        seen[t] = 1;
        while (!q.empty()) {
            std::size_t v = q.front();
            q.pop();
            for (std::size_t a : adj_[v]) {
                // arc a goes v -> w; its partner w -> v has residual capacity
                // arcs_[a ^ 1].cap.
                std::size_t w = arcs_[a].to;
                if (!seen[w] && arcs_[a ^ 1].cap > 0) {
                    seen[w] = 1;
                    q.push(w);
                }
            }
        }
        return seen;
    }

private:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    struct Arc {
        std::size_t to;
        long long cap;
    };
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<Arc> arcs_;
};

} // namespace

VertexSet min_separator(const FiniteGraph& g, const VertexSet& u, const VertexSet& targets)
{
    VertexSet overlap;
    for (const auto& v : u)
        if (targets.contains(v) && g.contains(v))
            overlap.insert(v);

    const std::size_t n = g.size();
    const long long inf = static_cast<long long>(n) + 1;
    const std::size_t source = 2 * n;
    const std::size_t sink = 2 * n + 1;
    FlowNetwork net(2 * n + 2);
    std::vector<char> removed(n, 0);
    for (const auto& v : overlap)
        removed[*g.find(v)] = 1;
    for (std::size_t v = 0; v < n; ++v) {
        if (removed[v])
            continue;
        net.add_arc(2 * v, 2 * v + 1, 1);
        for (std::size_t w : g.neighbors(v))
            if (!removed[w])
                net.add_arc(2 * v + 1, 2 * w, inf);
    }
    bool any = false;
    for (const auto& v : u)
        if (auto id = g.find(v); id && !removed[*id]) {
            net.add_arc(source, 2 * *id, inf);
            any = true;
        }
    bool anyTarget = false;
    for (const auto& v : targets)
        if (auto id = g.find(v); id && !removed[*id]) {
            net.add_arc(2 * *id + 1, sink, inf);
            anyTarget = true;
        }
    if (!any || !anyTarget)
        return overlap;

    net.max_flow(source, sink);
    std::vector<char> near = net.reaching(sink);
    VertexSet cut = overlap;
    for (std::size_t v = 0; v < n; ++v)
        if (!removed[v] && near[2 * v + 1] && !near[2 * v])
            cut.insert(g.vertex(v));
    return cut;
}

void check_torso_set(const Torso& t, const VertexSet& f)
{
    for (const auto& v : f)
        if (!t.contains(v))
            throw Error(to_string(v) + " is not a vertex of the torso");
}

std::set<ComponentId> d_hat_prime(const Torso& t, const VertexSet& f)
{
    check_torso_set(t, f);
    std::set<ComponentId> out;
    for (const auto& v : f)
        if (v.is_contracted())
            out.insert(v.component());
    return out;
}

std::set<ComponentId> d_hat_double_prime(const Torso& t, const RaySpec& s, const VertexSet& f)
{
    check_torso_set(t, f);
    if (!is_tendril(t.presentation(), s))
        throw Error("ray " + s.name + " is not a tendril");
    validate_ray(t.presentation(), s);
    // Only host vertices of F can lie on S, and period vertices grow past
    // every index in F after finitely many cycles.
    Index bound = 0;
    for (const auto& v : f)
        bound = std::max(bound, v.index);
    std::vector<Vertex> walk = s.unroll(cycles_beyond(s, bound) + 1);
    std::set<ComponentId> out;
    for (std::size_t k = 0; k + 1 < walk.size(); ++k) {
        if (!walk[k].is_inner() || !f.contains(walk[k + 1]))
            continue;
        ComponentId d = walk[k].component();
        if (t.classification().side_of(d) == Side::DoublePrime)
            out.insert(d);
    }
    return out;
}

namespace {

VertexSet host_part(const VertexSet& f)
{
    VertexSet out;
    for (const auto& v : f)
        if (v.is_host())
            out.insert(v);
    return out;
}

} // namespace

VertexSet s_modification(const Torso& t, const RaySpec& s, const VertexSet& f)
{
    VertexSet out = host_part(f);
    for (const auto& d : d_hat_prime(t, f))
        for (const auto& a : adhesion_set_of(t.presentation(), d))
            out.insert(a);
    for (const auto& d : d_hat_double_prime(t, s, f))
        for (const auto& a : adhesion_set_of(t.presentation(), d))
            out.insert(a);
    return out;
}

VertexSet pitz_x(const Torso& t, const VertexSet& f)
{
    VertexSet out = host_part(f);
    for (const auto& d : d_hat_prime(t, f))
        for (const auto& a : adhesion_set_of(t.presentation(), d))
            out.insert(a);
    return out;
}

std::string to_string(SeparatorChoice c) { return c == SeparatorChoice::SModification ? "fs" : "x"; }

LemmaReport lemma_check(const Torso& t, const VertexSet& u, const RaySpec& s, const VertexSet& f, const std::vector<Index>& depths, Index reps, SeparatorChoice choice)
{
    for (const auto& v : u)
        if (!v.is_host())
            throw Error("U must consist of host vertices; " + to_string(v) + " is not one");
    LemmaReport r;
    r.choice = choice;
    r.f = f;
    r.projection = k_project(t, mask_sequence(t.presentation(), s));
    r.separator = choice == SeparatorChoice::SModification ? s_modification(t, s, f) : pitz_x(t, f);
    r.hypothesis = separates_at_depths(t, f, u, TargetSpec::of_projection(r.projection), depths, reps);
    r.conclusion = separates_at_depths(t.presentation(), r.separator, u, TargetSpec::of_ray(s), depths, reps);
    if (!r.hypothesis.separated)
        r.status = "hypothesis-not-established";
    else if (r.conclusion.separated)
        r.status = "holds";
    else
        r.status = choice == SeparatorChoice::SModification ? "LEMMA-VIOLATION" : "separator-fails";
    return r;
}

RaySpec tail_after(const RaySpec& s, Index pos)
{
    Index cycles = 0;
    if (pos >= s.prefix.size())
        cycles = (pos - s.prefix.size()) / s.period.size() + 1;
    RaySpec r = s.peeled(cycles);
    r.prefix.erase(r.prefix.begin(), r.prefix.begin() + static_cast<std::ptrdiff_t>(pos + 1));
    return r;
}

RemarkReport remark_tail_check(const Torso& t, const VertexSet& u, const RaySpec& s, const VertexSet& f, const std::vector<Index>& depths, Index reps)
{
    if (depths.empty())
        throw Error("no depths to check");
    validate_ray(t.presentation(), s);
    RemarkReport r;
    r.x = pitz_x(t, f);
    Index bound = std::max(*std::max_element(depths.begin(), depths.end()), reps);
    for (const auto& v : r.x)
        bound = std::max(bound, v.index);
    std::vector<Vertex> walk = s.unroll(cycles_beyond(s, bound) + 1);
    for (Index k = walk.size(); k-- > 0;) {
        if (r.x.contains(walk[k])) {
            r.lastMeeting = k;
            break;
        }
    }
    if (r.lastMeeting) {
        r.tail = tail_after(s, *r.lastMeeting);
    } else {
        r.tail = s;
        r.note = "S does not meet X in the sampled range; the tail is all of S";
    }
    r.certificate = separates_at_depths(t.presentation(), r.x, u, TargetSpec::of_ray(r.tail), depths, reps);
    return r;
}

PipelineReport faithfulness_pipeline(const Torso& t, const VertexSet& u, const RaySpec& s, const std::vector<Index>& depths, Index reps)
{
    if (depths.empty())
        throw Error("no depths to check");
    for (const auto& v : u)
        if (!v.is_host())
            throw Error("U must consist of host vertices; " + to_string(v) + " is not one");
    PipelineReport r;
    r.tendril = is_tendril(t.presentation(), s);
    if (!r.tendril) {
        r.tail = tail_component(t.presentation(), s);
        r.separator = adhesion_set_of(t.presentation(), r.tail->component);
        for (Index k = 0; k < r.tail->from; ++k)
            r.separator.insert(s.at(k));
        r.certificate = separates_at_depths(t.presentation(), r.separator, u, TargetSpec::of_ray(s), depths, reps);
        r.status = r.certificate.separated ? "separated" : "not-separated";
        return r;
    }

    ProjectionSeq proj = k_project(t, mask_sequence(t.presentation(), s));
    Index top = *std::max_element(depths.begin(), depths.end());
    FiniteTruncation k = t.truncate(top, reps);
    VertexSet w = TargetSpec::of_projection(proj).in(k);
    VertexSet uu;
    for (const auto& v : u)
        if (k.graph.contains(v))
            uu.insert(v);
    for (const auto& v : uu)
        if (w.contains(v)) {
            r.status = "U meets W";
            r.f = uu;
            for (auto it = r.f.begin(); it != r.f.end();)
                it = w.contains(*it) ? std::next(it) : r.f.erase(it);
            return r;
        }
    r.f = min_separator(k.graph, uu, w);
    r.hypothesis = separates_at_depths(t, r.f, u, TargetSpec::of_projection(proj), depths, reps);
    r.separator = s_modification(t, s, r.f);
    r.certificate = separates_at_depths(t.presentation(), r.separator, u, TargetSpec::of_ray(s), depths, reps);
    r.status = r.certificate.separated ? "separated" : "not-separated";
    return r;
}

namespace {

std::string depths_string(const std::vector<std::pair<Index, Index>>& checked)
{
    std::string out;
    for (std::size_t k = 0; k < checked.size(); ++k)
        out += (k ? "," : "") + std::to_string(checked[k].first) + ":" + std::to_string(checked[k].second);
    return out;
}

} // namespace

std::string report(const SeparationCertificate& c, const std::string& prefix)
{
    std::ostringstream out;
    out << prefix << "verdict=" << (c.separated ? "separated" : "not-separated") << '\n';
    if (c.separated)
        out << prefix << "checked=" << depths_string(c.checked) << '\n';
    else
        out << prefix << "witness=" << to_string(c.witness) << '\n';
    return out.str();
}

std::string report(const LemmaReport& r)
{
    std::ostringstream out;
    out << "separator_choice=" << to_string(r.choice) << '\n';
    out << "F=" << to_string(r.f) << '\n';
    out << "projection=" << to_string(r.projection) << '\n';
    out << report(r.hypothesis, "hypothesis.");
    out << "separator=" << to_string(r.separator) << '\n';
    out << report(r.conclusion, "conclusion.");
    out << "status=" << r.status << '\n';
    return out.str();
}

std::string report(const RemarkReport& r)
{
    std::ostringstream out;
    out << "X=" << to_string(r.x) << '\n';
    out << "last_meeting=" << (r.lastMeeting ? std::to_string(*r.lastMeeting) : std::string("none")) << '\n';
    out << "tail=" << to_string(r.tail) << '\n';
    if (!r.note.empty())
        out << "note=" << r.note << '\n';
    out << report(r.certificate, "tail.");
    return out.str();
}

std::string report(const PipelineReport& r)
{
    std::ostringstream out;
    out << "tendril=" << (r.tendril ? "yes" : "no") << '\n';
    if (r.tail) {
        out << "tail_component=" << to_string(r.tail->component) << '\n';
        out << "tail_from=" << r.tail->from << '\n';
    } else {
        out << "F=" << to_string(r.f) << '\n';
        if (!r.hypothesis.checked.empty() || !r.hypothesis.witness.empty())
            out << report(r.hypothesis, "hypothesis.");
    }
    out << "separator=" << to_string(r.separator) << '\n';
    if (!r.certificate.checked.empty() || !r.certificate.witness.empty())
        out << report(r.certificate, "certificate.");
    out << "status=" << r.status << '\n';
    return out.str();
}

} // namespace domtorso
