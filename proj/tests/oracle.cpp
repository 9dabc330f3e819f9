#include "oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace oracle {

void Graph::add_edge(const Name& a, const Name& b)
{
    adj[a].insert(b);
    adj[b].insert(a);
}

bool Graph::has_edge(const Name& a, const Name& b) const
{
    auto it = adj.find(a);
    return it != adj.end() && it->second.count(b);
}

std::size_t Graph::edge_count() const
{
    std::size_t n = 0;
    for (const auto& [v, ns] : adj)
        n += ns.size();
    return n / 2;
}

NameSet Graph::vertices() const
{
    NameSet out;
    for (const auto& [v, ns] : adj)
        out.insert(v);
    return out;
}

std::set<std::pair<Name, Name>> Graph::edges() const
{
    std::set<std::pair<Name, Name>> out;
    for (const auto& [v, ns] : adj)
        for (const auto& w : ns)
            out.insert(std::minmax(v, w));
    return out;
}

Graph Graph::induced(const NameSet& keep) const
{
    Graph h;
    for (const auto& [v, ns] : adj) {
        if (!keep.count(v))
            continue;
        h.add_vertex(v);
        for (const auto& w : ns)
            if (keep.count(w))
                h.add_edge(v, w);
    }
    return h;
}

Graph from_library(const domtorso::FiniteGraph& g)
{
    Graph out;
    for (const auto& v : g.vertices())
        out.add_vertex(domtorso::to_string(v));
    for (auto [a, b] : g.edges())
        out.add_edge(domtorso::to_string(g.vertex(a)), domtorso::to_string(g.vertex(b)));
    return out;
}

NameSet names(const domtorso::VertexSet& s)
{
    NameSet out;
    for (const auto& v : s)
        out.insert(domtorso::to_string(v));
    return out;
}

std::vector<Name> names(const std::vector<domtorso::Vertex>& walk)
{
    std::vector<Name> out;
    for (const auto& v : walk)
        out.push_back(domtorso::to_string(v));
    return out;
}

namespace {

Name x(unsigned j) { return "X[" + std::to_string(j) + "]"; }

} // namespace

Graph example4(unsigned depth, unsigned reps)
{
    Graph g;
    for (unsigned j = 0; j <= depth; ++j)
        g.add_vertex(x(j));
    for (unsigned j = 0; j + 1 <= depth; ++j) {
        std::string y = "Y@" + std::to_string(j) + ".y";
        g.add_edge(x(j), x(j + 1));
        g.add_edge(x(j), y);
        g.add_edge(x(j + 1), y);
    }
    if (depth >= 3) {
        for (unsigned k = 0; k < reps; ++k) {
            std::string z = "Z#" + std::to_string(k) + ".z";
            for (unsigned j = 1; j <= 3; ++j)
                g.add_edge(x(j), z);
        }
    }
    return g;
}

Graph expand(const domtorso::GraphPresentation& p, domtorso::Index depth, domtorso::Index reps)
{
    using domtorso::Index;
    // Every host vertex of G, then the truncation keeps those up to depth.
    auto exists = [&](const std::string& fam, Index i) {
        for (const auto& f : p.families) {
            if (f.name != fam)
                continue;
            if (f.size.is_finite() && i >= f.size.value())
                return false;
            return f.omitted.count(i) == 0;
        }
        return false;
    };
    auto host = [](const std::string& fam, Index i) { return fam + "[" + std::to_string(i) + "]"; };
    auto term_at = [](const domtorso::VertexTerm& t, Index i) { return t.affine ? i + t.offset : t.offset; };

    Graph g;
    for (const auto& f : p.families)
        for (Index i = 0; i <= depth; ++i)
            if (exists(f.name, i))
                g.add_vertex(host(f.name, i));
    for (const auto& e : p.hostEdges) {
        for (Index i = 0; i <= depth; ++i) {
            Index a = term_at(e.a, i), b = term_at(e.b, i);
            if (a <= depth && b <= depth && exists(e.a.family, a) && exists(e.b.family, b))
                g.add_edge(host(e.a.family, a), host(e.b.family, b));
        }
    }
    for (const auto& pat : p.patterns) {
        bool indexed = pat.kind == domtorso::CopyKind::Indexed;
        Index copies = depth + 1;
        if (!indexed) {
            copies = reps;
            if (pat.multiplicity.is_finite())
                copies = std::min<Index>(copies, pat.multiplicity.value());
        }
        for (Index c = 0; c < copies; ++c) {
            bool ok = true;
            for (const auto& a : pat.attachEdges) {
                Index j = term_at(a.target, c);
                ok = ok && j <= depth && exists(a.target.family, j);
            }
            if (!ok)
                continue;
            std::string prefix = pat.name + (indexed ? "@" : "#") + std::to_string(c) + ".";
            auto local = [&](const domtorso::LocalVertex& lv) {
                return prefix + lv.name + (lv.pos ? "[" + std::to_string(*lv.pos) + "]" : "");
            };
            auto present = [&](const domtorso::LocalVertex& lv) { return !lv.pos || *lv.pos <= depth; };
            for (const auto& v : pat.innerVertices)
                g.add_vertex(prefix + v);
            for (const auto& r : pat.innerRays) {
                for (Index k = 0; k <= depth; ++k) {
                    g.add_vertex(local({r, k}));
                    if (k)
                        g.add_edge(local({r, k - 1}), local({r, k}));
                }
            }
            for (const auto& e : pat.innerEdges)
                if (present(e.a) && present(e.b))
                    g.add_edge(local(e.a), local(e.b));
            for (const auto& a : pat.attachEdges)
                if (present(a.local))
                    g.add_edge(local(a.local), host(a.target.family, term_at(a.target, c)));
        }
    }
    return g;
}

NameSet reach(const Graph& g, const NameSet& sources, const NameSet& avoid)
{
    NameSet seen;
    std::deque<Name> q;
    for (const auto& s : sources)
        if (!avoid.count(s) && g.adj.count(s) && seen.insert(s).second)
            q.push_back(s);
    while (!q.empty()) {
        Name v = q.front();
        q.pop_front();
        for (const auto& w : g.adj.at(v))
            if (!avoid.count(w) && seen.insert(w).second)
                q.push_back(w);
    }
    return seen;
}

bool separates(const Graph& g, const NameSet& f, const NameSet& u, const NameSet& t)
{
    for (const auto& v : reach(g, u, f))
        if (t.count(v))
            return false;
    return true;
}

bool is_path_avoiding(const Graph& g, const std::vector<Name>& path, const NameSet& avoid)
{
    if (path.empty())
        return false;
    for (std::size_t k = 0; k < path.size(); ++k) {
        if (!g.adj.count(path[k]) || avoid.count(path[k]))
            return false;
        if (k && !g.has_edge(path[k - 1], path[k]))
            return false;
    }
    NameSet distinct(path.begin(), path.end());
    return distinct.size() == path.size();
}

std::optional<std::size_t> min_cut_size(const Graph& g, const NameSet& u, const NameSet& t, std::size_t limit)
{
    std::vector<Name> vs(g.adj.size());
    std::transform(g.adj.begin(), g.adj.end(), vs.begin(), [](const auto& kv) { return kv.first; });
    NameSet chosen;
    std::function<bool(std::size_t, std::size_t)> pick = [&](std::size_t from, std::size_t left) {
        if (left == 0)
            return separates(g, chosen, u, t);
        for (std::size_t k = from; k < vs.size(); ++k) {
            chosen.insert(vs[k]);
            if (pick(k + 1, left - 1))
                return true;
            chosen.erase(vs[k]);
        }
        return false;
    };
    for (std::size_t size = 0; size <= limit; ++size) {
        chosen.clear();
        if (pick(0, size))
            return size;
    }
    return std::nullopt;
}

std::vector<Component> components(const Graph& g, const NameSet& host)
{
    std::vector<Component> out;
    NameSet done;
    for (const auto& [v, ns] : g.adj) {
        if (host.count(v) || done.count(v))
            continue;
        Component c;
        c.vertices = reach(g, {v}, host);
        for (const auto& w : c.vertices)
            for (const auto& n : g.adj.at(w))
                if (host.count(n))
                    c.adhesion.insert(n);
        done.insert(c.vertices.begin(), c.vertices.end());
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace oracle
