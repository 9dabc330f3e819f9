#include "domtorso/graph.hpp"

#include "domtorso/error.hpp"

#include <algorithm>
#include <queue>

namespace domtorso {

FiniteGraph FiniteGraph::Builder::build() &&
{
    FiniteGraph g;
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    g.vertices_ = std::move(vertices_);
    g.adjacency_.resize(g.vertices_.size());

    std::vector<std::pair<std::size_t, std::size_t>> ids;
    ids.reserve(edges_.size());
    for (const auto& [a, b] : edges_) {
        auto ia = g.find(a);
        auto ib = g.find(b);
        if (!ia || !ib)
            throw Error("edge " + to_string(a) + " -- " + to_string(b) + " has an endpoint outside the graph");
        if (*ia == *ib)
            continue;
        ids.emplace_back(std::min(*ia, *ib), std::max(*ia, *ib));
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (auto [a, b] : ids) {
        g.adjacency_[a].push_back(b);
        g.adjacency_[b].push_back(a);
    }
    for (auto& list : g.adjacency_)
        std::sort(list.begin(), list.end());
    g.edgeCount_ = ids.size();
    return g;
}

std::optional<std::size_t> FiniteGraph::find(const Vertex& v) const
{
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v)
        return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

bool FiniteGraph::has_edge(const Vertex& a, const Vertex& b) const
{
    auto ia = find(a);
    auto ib = find(b);
    if (!ia || !ib)
        return false;
    const auto& list = adjacency_[*ia];
    return std::binary_search(list.begin(), list.end(), *ib);
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteGraph::edges() const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(edgeCount_);
    for (std::size_t a = 0; a < adjacency_.size(); ++a)
        for (std::size_t b : adjacency_[a])
            if (a < b)
                out.emplace_back(a, b);
    return out;
}

FiniteGraph FiniteGraph::induced(const VertexSet& keep) const
{
    Builder b;
    for (const auto& v : vertices_)
        if (keep.contains(v))
            b.add_vertex(v);
    for (auto [x, y] : edges())
        if (keep.contains(vertices_[x]) && keep.contains(vertices_[y]))
            b.add_edge(vertices_[x], vertices_[y]);
    return std::move(b).build();
}

bool is_connected(const FiniteGraph& g)
{
    if (g.size() == 0)
        return true;
    std::vector<bool> seen(g.size(), false);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = true;
    std::size_t count = 1;
    while (!q.empty()) {
        std::size_t v = q.front();
        q.pop();
        for (std::size_t w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                q.push(w);
            }
        }
    }
    return count == g.size();
}

namespace {

bool host_in_truncation(const GraphPresentation& p, const VertexTerm& t, Index i, Index depth)
{
    const HostFamily* f = p.family(t.family);
    Index idx = t.at(i);
    return f && idx <= depth && f->contains(idx);
}

} // namespace

bool copy_in_truncation(const GraphPresentation& p, const ComponentPattern& pattern, Index copy, Index depth, Index reps)
{
    if (pattern.kind == CopyKind::Indexed) {
        if (!index_domain(p, pattern).contains(copy))
            return false;
    } else {
        if (copy >= reps)
            return false;
        if (pattern.multiplicity.is_finite() && copy >= pattern.multiplicity.value())
            return false;
    }
    for (const auto& a : pattern.attachEdges)
        if (!host_in_truncation(p, a.target, copy, depth))
            return false;
    return true;
}

FiniteTruncation truncate(const GraphPresentation& p, Index depth, Index reps)
{
    FiniteGraph::Builder b;

    for (const auto& f : p.families) {
        Index last = depth;
        if (f.size.is_finite()) {
            if (f.size.value() == 0)
                continue;
            last = std::min(last, f.size.value() - 1);
        }
        for (Index i = 0; i <= last; ++i)
            if (f.contains(i))
                b.add_vertex(Vertex::host(f.name, i));
    }

    for (const auto& e : p.hostEdges) {
        if (!e.a.affine && !e.b.affine) {
            if (host_in_truncation(p, e.a, 0, depth) && host_in_truncation(p, e.b, 0, depth))
                b.add_edge(e.a.vertex_at(0), e.b.vertex_at(0));
            continue;
        }
        for (Index i = 0; i <= depth; ++i)
            if (host_in_truncation(p, e.a, i, depth) && host_in_truncation(p, e.b, i, depth))
                b.add_edge(e.a.vertex_at(i), e.b.vertex_at(i));
    }

    for (const auto& pattern : p.patterns) {
        Index copies = depth + 1;
        if (pattern.kind == CopyKind::Replicated) {
            copies = reps;
            if (pattern.multiplicity.is_finite())
                copies = std::min(copies, pattern.multiplicity.value());
        }
        for (Index c = 0; c < copies; ++c) {
            if (!copy_in_truncation(p, pattern, c, depth, reps))
                continue;
            auto at = [&](const LocalVertex& lv) { return Vertex::inner(pattern.name, pattern.kind, c, lv); };
            for (const auto& name : pattern.innerVertices)
                b.add_vertex(at({name, std::nullopt}));
            for (const auto& ray : pattern.innerRays) {
                for (Index k = 0; k <= depth; ++k) {
                    b.add_vertex(at({ray, k}));
                    if (k > 0)
                        b.add_edge(at({ray, k - 1}), at({ray, k}));
                }
            }
            auto present = [&](const LocalVertex& lv) { return !lv.pos || *lv.pos <= depth; };
            for (const auto& e : pattern.innerEdges)
                if (present(e.a) && present(e.b))
                    b.add_edge(at(e.a), at(e.b));
            for (const auto& a : pattern.attachEdges)
                if (present(a.local))
                    b.add_edge(at(a.local), a.target.vertex_at(c));
        }
    }

    return FiniteTruncation{depth, reps, std::move(b).build()};
}

} // namespace domtorso
