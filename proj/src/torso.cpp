#include "domtorso/torso.hpp"

#include "domtorso/error.hpp"

#include <algorithm>
#include <sstream>

namespace domtorso {

Vertex EtaAssignment::image(const VertexSet& a, Index ordinal) const
{
    if (a.empty())
        throw Error("eta on an empty adhesion set");
    std::vector<Vertex> sorted(a.begin(), a.end());
    Index k = ordinal % sorted.size();
    if (order == EtaOrder::Reversed)
        k = sorted.size() - 1 - k;
    return sorted[k];
}

EtaAssignment choose_eta(const AdhesionClassification&, EtaOrder order) { return EtaAssignment{order}; }

Torso::Torso(AdhesionClassification c, EtaAssignment eta)
    : classification_(std::move(c))
    , eta_(eta)
{
    for (std::size_t k : classification_.double_prime_classes())
        if (classification_.classes[k].kind == AdhesionClass::Kind::Ground)
            completed_.push_back(classification_.classes[k].ground);
}

bool Torso::contains(const Vertex& v) const
{
    if (v.is_host())
        return contains_vertex(presentation(), v);
    if (!v.is_contracted())
        return false;
    ComponentId d = v.component();
    return component_exists(presentation(), d) && classification_.side_of(d) == Side::Prime;
}

bool Torso::adjacent(const Vertex& a, const Vertex& b) const
{
    if (a == b || !contains(a) || !contains(b))
        return false;
    if (a.is_contracted() && b.is_contracted())
        return false;
    if (a.is_contracted() || b.is_contracted()) {
        const Vertex& c = a.is_contracted() ? a : b;
        const Vertex& h = a.is_contracted() ? b : a;
        return adhesion_set_of(presentation(), c.component()).contains(h);
    }
    if (domtorso::adjacent(presentation(), a, b))
        return true;
    for (const auto& s : completed_)
        if (s.contains(a) && s.contains(b))
            return true;
    return false;
}

Vertex Torso::eta_of(const ComponentId& d) const
{
    if (classification_.side_of(d) != Side::DoublePrime)
        throw Error("eta is only defined on DoublePrime components, not " + to_string(d));
    return eta_.image(adhesion_set_of(presentation(), d), d.copy);
}

std::vector<VertexSet> Torso::completed_sets() const { return completed_; }

FiniteTruncation Torso::truncate(Index depth, Index reps) const
{
    FiniteTruncation g = domtorso::truncate(presentation(), depth, reps);
    FiniteGraph::Builder b;
    VertexSet hosts;
    for (const auto& v : g.graph.vertices())
        if (v.is_host()) {
            b.add_vertex(v);
            hosts.insert(v);
        }
    for (auto [x, y] : g.graph.edges()) {
        const Vertex& u = g.graph.vertex(x);
        const Vertex& v = g.graph.vertex(y);
        if (u.is_host() && v.is_host())
            b.add_edge(u, v);
    }
    for (const auto& pat : presentation().patterns) {
        Index copies = depth + 1;
        if (pat.kind == CopyKind::Replicated) {
            copies = reps;
            if (pat.multiplicity.is_finite())
                copies = std::min(copies, pat.multiplicity.value());
        }
        for (Index k = 0; k < copies; ++k) {
            if (!copy_in_truncation(presentation(), pat, k, depth, reps))
                continue;
            ComponentId d{pat.name, pat.kind, k, false};
            if (classification_.side_of(d) != Side::Prime)
                continue;
            Vertex vd = Vertex::contracted(d);
            b.add_vertex(vd);
            for (const auto& a : adhesion_set_of(presentation(), d))
                b.add_edge(vd, a);
        }
    }
    for (const auto& s : completed_) {
        if (!std::all_of(s.begin(), s.end(), [&](const Vertex& v) { return hosts.contains(v); }))
            continue;
        for (auto i = s.begin(); i != s.end(); ++i)
            for (auto j = std::next(i); j != s.end(); ++j)
                b.add_edge(*i, *j);
    }
    return FiniteTruncation{depth, reps, std::move(b).build()};
}

namespace {

std::string fresh_family_name(const GraphPresentation& p, const std::string& base)
{
    std::string name = base;
    while (p.family(name) || p.pattern(name))
        name += "_";
    return name;
}

} // namespace

GraphPresentation Torso::as_presentation() const
{
    const GraphPresentation& p = presentation();
    GraphPresentation k;
    k.families = p.families;
    k.hostEdges = p.hostEdges;

    for (const auto& pat : p.patterns) {
        HostFamily f;
        f.name = fresh_family_name(p, "V_" + pat.name);
        std::vector<HostEdgeTemplate> edges;
        if (pat.kind == CopyKind::Indexed) {
            IndexDomain dom = index_domain(p, pat);
            if (dom.empty)
                continue;
            f.size = dom.infinite ? Cardinal::aleph0() : Cardinal::finite(dom.last + 1);
            Index scan = dom.infinite ? classification_.exceptionBound : dom.last + 1;
            for (Index i = 0; i < scan; ++i)
                if (!dom.contains(i) || classification_.side_of(ComponentId::indexed(pat.name, i)) != Side::Prime)
                    f.omitted.insert(i);
            for (const auto& t : pat.attach_terms())
                edges.push_back({VertexTerm::shifted(f.name, 0), t});
        } else {
            if (classification_.side_of(ComponentId::all_replicates(pat.name)) != Side::Prime)
                continue;
            f.size = pat.multiplicity;
            for (const auto& t : pat.attach_terms())
                edges.push_back({VertexTerm::shifted(f.name, 0), t});
        }
        if (f.size.is_finite() && f.omitted.size() == f.size.value())
            continue;
        k.families.push_back(std::move(f));
        k.hostEdges.insert(k.hostEdges.end(), edges.begin(), edges.end());
    }

    for (const auto& s : completed_)
        for (auto i = s.begin(); i != s.end(); ++i)
            for (auto j = std::next(i); j != s.end(); ++j)
                if (!domtorso::adjacent(p, *i, *j))
                    k.hostEdges.push_back({VertexTerm::ground(i->name, i->index), VertexTerm::ground(j->name, j->index)});
    return k;
}

Torso build_torso(const GraphPresentation& p, const AdhesionClassification& c, const EtaAssignment& eta)
{
    if (!(c.presentation == p))
        throw Error("classification does not belong to this presentation");
    return Torso(c, eta);
}

Torso build_torso(const GraphPresentation& p, EtaOrder order)
{
    AdhesionClassification c = classify_adhesion(p);
    EtaAssignment eta = choose_eta(c, order);
    return Torso(std::move(c), eta);
}

Vertex rho_of(const Torso& t, const Vertex& u)
{
    if (u.is_host()) {
        check_vertex(t.presentation(), u);
        return u;
    }
    check_vertex(t.presentation(), u);
    ComponentId d = u.component();
    if (t.classification().side_of(d) == Side::Prime)
        return Vertex::contracted(d);
    return t.eta_of(d);
}

ConservativityReport conservativity_check(const Torso& t)
{
    ConservativityReport r;
    r.hostSize = Cardinal::finite(0);
    for (const auto& f : t.presentation().families) {
        if (f.size.is_infinite()) {
            r.hostSize += f.size;
            continue;
        }
        Index n = f.size.value();
        for (Index o : f.omitted)
            if (o < f.size.value())
                --n;
        r.hostSize += Cardinal::finite(n);
    }
    r.primeComponents = Cardinal::finite(0);
    for (std::size_t k : t.classification().prime_classes()) {
        const AdhesionClass& cls = t.classification().classes[k];
        if (cls.kind == AdhesionClass::Kind::Ground)
            r.primeComponents += cls.countPerInstance;
        else
            r.primeComponents += Cardinal::aleph0();
    }
    r.torsoSize = r.hostSize + r.primeComponents;
    r.conservative = r.torsoSize == r.hostSize;
    return r;
}

std::string report(const ConservativityReport& r)
{
    std::ostringstream out;
    out << "host_size=" << to_string(r.hostSize) << '\n';
    out << "prime_components=" << to_string(r.primeComponents) << '\n';
    out << "torso_size=" << to_string(r.torsoSize) << '\n';
    out << "conservative=" << (r.conservative ? "yes" : "no") << '\n';
    return out.str();
}

} // namespace domtorso
