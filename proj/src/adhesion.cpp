#include "domtorso/adhesion.hpp"

#include "domtorso/error.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace domtorso {

std::vector<ComponentFamily> enumerate_component_classes(const GraphPresentation& p)
{
    std::vector<ComponentFamily> out;
    for (const auto& pat : p.patterns) {
        ComponentFamily f;
        f.pattern = pat.name;
        f.kind = pat.kind;
        if (pat.kind == CopyKind::Indexed) {
            f.indices = index_domain(p, pat);
            f.count = f.indices.size();
        } else {
            f.indices.empty = true;
            f.count = pat.multiplicity;
        }
        out.push_back(std::move(f));
    }
    return out;
}

namespace {

const ComponentPattern& pattern_of(const GraphPresentation& p, const ComponentId& d)
{
    const ComponentPattern* pat = p.pattern(d.pattern);
    if (!pat)
        throw Error("unknown pattern '" + d.pattern + "'");
    if (pat->kind != d.kind)
        throw Error("component " + to_string(d) + " uses the wrong copy selector");
    return *pat;
}

VertexSet attach_set(const ComponentPattern& pat, Index copy)
{
    VertexSet out;
    for (const auto& a : pat.attachEdges)
        out.insert(a.target.vertex_at(copy));
    return out;
}

} // namespace

bool component_exists(const GraphPresentation& p, const ComponentId& d)
{
    const ComponentPattern* pat = p.pattern(d.pattern);
    if (!pat || pat->kind != d.kind)
        return false;
    if (d.kind == CopyKind::Indexed)
        return !d.allCopies && index_domain(p, *pat).contains(d.copy);
    if (d.allCopies)
        return true;
    return pat->multiplicity.is_infinite() || d.copy < pat->multiplicity.value();
}

VertexSet adhesion_set_of(const GraphPresentation& p, const ComponentId& d)
{
    const ComponentPattern& pat = pattern_of(p, d);
    if (!component_exists(p, d))
        throw Error("invalid index: no component " + to_string(d));
    return attach_set(pat, d.allCopies ? 0 : d.copy);
}

VertexSet component_vertices(const GraphPresentation& p, const ComponentId& d, Index depth)
{
    const ComponentPattern& pat = pattern_of(p, d);
    if (d.allCopies || !component_exists(p, d))
        throw Error("invalid index: no component " + to_string(d));
    VertexSet out;
    for (const auto& v : pat.innerVertices)
        out.insert(Vertex::inner(pat.name, pat.kind, d.copy, {v, std::nullopt}));
    for (const auto& r : pat.innerRays)
        for (Index k = 0; k <= depth; ++k)
            out.insert(Vertex::inner(pat.name, pat.kind, d.copy, {r, k}));
    return out;
}

std::string to_string(Side s) { return s == Side::Prime ? "Prime" : "DoublePrime"; }

VertexSet AdhesionClass::instance(Index i) const
{
    if (kind == Kind::Ground)
        return ground;
    VertexSet out;
    for (const auto& t : terms)
        out.insert(t.vertex_at(i));
    return out;
}

std::string AdhesionClass::descriptor() const
{
    if (kind == Kind::Ground)
        return to_string(ground);
    std::string out = pattern + ":{";
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (k)
            out += ",";
        out += to_string(terms[k]);
    }
    return out + "}";
}

std::vector<std::size_t> AdhesionClassification::prime_classes() const
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < classes.size(); ++k)
        if (classes[k].side() == Side::Prime)
            out.push_back(k);
    return out;
}

std::vector<std::size_t> AdhesionClassification::double_prime_classes() const
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < classes.size(); ++k)
        if (classes[k].side() == Side::DoublePrime)
            out.push_back(k);
    return out;
}

std::size_t AdhesionClassification::class_of(const ComponentId& d) const
{
    VertexSet a = adhesion_set_of(presentation, d);
    if (auto it = groundClass.find(a); it != groundClass.end())
        return it->second;
    if (d.kind == CopyKind::Indexed)
        if (auto it = schemaClass.find(d.pattern); it != schemaClass.end())
            return it->second;
    throw Error("component " + to_string(d) + " has no adhesion class");
}

namespace {

struct AffineShape {
    std::vector<VertexTerm> ground;
    std::vector<VertexTerm> affine;
};

AffineShape shape_of(const ComponentPattern& pat)
{
    AffineShape s;
    for (const auto& t : pat.attach_terms())
        (t.affine ? s.affine : s.ground).push_back(t);
    return s;
}

/// d with A_q(i+d) = A_p(i) for all large i, if any.
std::optional<std::int64_t> generic_shift(const AffineShape& p, const AffineShape& q)
{
    if (p.ground != q.ground || p.affine.size() != q.affine.size() || p.affine.empty())
        return std::nullopt;
    std::int64_t d = static_cast<std::int64_t>(p.affine[0].offset) - static_cast<std::int64_t>(q.affine[0].offset);
    for (std::size_t k = 0; k < p.affine.size(); ++k) {
        if (p.affine[k].family != q.affine[k].family)
            return std::nullopt;
        if (static_cast<std::int64_t>(p.affine[k].offset) - static_cast<std::int64_t>(q.affine[k].offset) != d)
            return std::nullopt;
    }
    return d;
}

struct Member {
    std::string pattern;
    CopyKind kind;
    Index copy;
    Cardinal copies;

    auto operator<=>(const Member&) const = default;
    bool operator==(const Member&) const = default;
};

Index max_index(const VertexSet& a)
{
    Index m = 0;
    for (const auto& v : a)
        m = std::max(m, v.index);
    return m;
}

struct Group {
    std::string representative;
    std::vector<std::pair<std::string, std::int64_t>> members;
};

} // namespace

AdhesionClassification classify_adhesion(const GraphPresentation& p)
{
    AdhesionClassification c;
    c.presentation = p;

    Index maxOffset = max_affine_offset(p);
    Index b0 = max_ground_index(p) + 1 + maxOffset;
    Index b1 = b0 + maxOffset + 1;
    c.exceptionBound = b1;

    std::map<std::string, IndexDomain> domains;
    for (const auto& pat : p.patterns)
        if (pat.kind == CopyKind::Indexed)
            domains[pat.name] = index_domain(p, pat);

    // Indexed patterns with an infinite domain, grouped by generic equality
    // of their attachment sets up to a shift.
    std::vector<Group> groups;
    std::map<std::string, std::pair<std::size_t, std::int64_t>> groupOf;
    {
        std::vector<const ComponentPattern*> infinite;
        for (const auto& pat : p.patterns)
            if (pat.kind == CopyKind::Indexed && !domains[pat.name].empty && domains[pat.name].infinite)
                infinite.push_back(&pat);
        std::sort(infinite.begin(), infinite.end(), [](auto* a, auto* b) { return a->name < b->name; });
        for (const auto* pat : infinite) {
            if (groupOf.contains(pat->name))
                continue;
            Group g;
            g.representative = pat->name;
            AffineShape rs = shape_of(*pat);
            for (const auto* q : infinite) {
                if (groupOf.contains(q->name))
                    continue;
                if (auto d = generic_shift(rs, shape_of(*q))) {
                    g.members.emplace_back(q->name, *d);
                    groupOf[q->name] = {groups.size(), *d};
                }
            }
            groups.push_back(std::move(g));
        }
    }

    auto members_of = [&](const VertexSet& a) {
        std::vector<Member> out;
        Index top = max_index(a);
        for (const auto& pat : p.patterns) {
            if (pat.kind == CopyKind::Replicated) {
                if (attach_set(pat, 0) == a)
                    out.push_back({pat.name, pat.kind, 0, pat.multiplicity});
                continue;
            }
            const IndexDomain& dom = domains[pat.name];
            for (Index j = 0; j <= top; ++j)
                if (dom.contains(j) && attach_set(pat, j) == a)
                    out.push_back({pat.name, pat.kind, j, Cardinal::finite(1)});
        }
        std::sort(out.begin(), out.end());
        return out;
    };

    auto conforming = [&](const std::vector<Member>& members) {
        if (members.empty() || members.front().kind == CopyKind::Replicated)
            return false;
        for (const auto& m : members)
            if (m.kind == CopyKind::Replicated)
                return false;
        auto it = groupOf.find(members.front().pattern);
        if (it == groupOf.end())
            return false;
        auto [gi, d] = it->second;
        std::int64_t i = static_cast<std::int64_t>(members.front().copy) - d;
        if (i < 0)
            return false;
        std::vector<Member> expected;
        for (const auto& [q, dq] : groups[gi].members) {
            std::int64_t j = i + dq;
            if (j < 0)
                return false;
            expected.push_back({q, CopyKind::Indexed, static_cast<Index>(j), Cardinal::finite(1)});
        }
        std::sort(expected.begin(), expected.end());
        return expected == members;
    };

    std::set<VertexSet> candidates;
    for (const auto& pat : p.patterns) {
        if (pat.kind == CopyKind::Replicated) {
            candidates.insert(attach_set(pat, 0));
            continue;
        }
        const IndexDomain& dom = domains[pat.name];
        if (dom.empty)
            continue;
        Index last = dom.infinite ? b1 - 1 : dom.last;
        for (Index j = 0; j <= last; ++j)
            if (dom.contains(j))
                candidates.insert(attach_set(pat, j));
    }

    for (const auto& a : candidates) {
        std::vector<Member> members = members_of(a);
        if (conforming(members))
            continue;
        AdhesionClass cls;
        cls.kind = AdhesionClass::Kind::Ground;
        cls.ground = a;
        cls.countPerInstance = Cardinal::finite(0);
        for (const auto& m : members) {
            cls.countPerInstance += m.copies;
            if (!cls.contributors.empty() && cls.contributors.back().pattern == m.pattern)
                cls.contributors.back().copies += m.copies;
            else
                cls.contributors.push_back({m.pattern, m.kind, m.copies, 0});
        }
        c.groundClass[a] = c.classes.size();
        c.classes.push_back(std::move(cls));
    }

    for (const auto& g : groups) {
        const ComponentPattern& rep = *p.pattern(g.representative);
        AdhesionClass cls;
        cls.kind = AdhesionClass::Kind::Schema;
        cls.pattern = rep.name;
        cls.terms = rep.attach_terms();
        cls.countPerInstance = Cardinal::finite(g.members.size());
        for (const auto& [q, d] : g.members)
            cls.contributors.push_back({q, CopyKind::Indexed, Cardinal::finite(1), d});
        for (Index i = 0; i < b1; ++i) {
            bool ok = domains[rep.name].contains(i) && !c.groundClass.contains(attach_set(rep, i));
            if (ok)
                ok = conforming(members_of(attach_set(rep, i)));
            if (!ok)
                cls.excluded.insert(i);
        }
        std::size_t idx = c.classes.size();
        for (const auto& [q, d] : g.members)
            c.schemaClass[q] = idx;
        c.classes.push_back(std::move(cls));
    }
    return c;
}

std::string report(const AdhesionClassification& c)
{
    std::ostringstream out;
    out << "classes=" << c.classes.size() << '\n';
    out << "prime=" << c.prime_classes().size() << '\n';
    out << "double_prime=" << c.double_prime_classes().size() << '\n';
    for (std::size_t k = 0; k < c.classes.size(); ++k) {
        const AdhesionClass& cls = c.classes[k];
        std::string key = "class." + std::to_string(k) + ".";
        out << key << "descriptor=" << cls.descriptor() << '\n';
        out << key << "count=" << to_string(cls.countPerInstance) << '\n';
        out << key << "side=" << to_string(cls.side()) << '\n';
        out << key << "contributors=";
        for (std::size_t m = 0; m < cls.contributors.size(); ++m) {
            const Contributor& ct = cls.contributors[m];
            if (m)
                out << ',';
            out << ct.pattern << 'x' << to_string(ct.copies);
            if (cls.kind == AdhesionClass::Kind::Schema)
                out << (ct.shift < 0 ? "@i" : "@i+") << ct.shift;
        }
        out << '\n';
        if (!cls.excluded.empty()) {
            out << key << "excluded=";
            bool first = true;
            for (Index i : cls.excluded) {
                out << (first ? "" : ",") << i;
                first = false;
            }
            out << '\n';
        }
    }
    return out.str();
}

std::vector<BruteComponent> brute_force_components(const FiniteGraph& g, const VertexSet& host)
{
    std::vector<BruteComponent> out;
    std::vector<bool> seen(g.size(), false);
    for (std::size_t s = 0; s < g.size(); ++s) {
        if (seen[s] || host.contains(g.vertex(s)))
            continue;
        BruteComponent comp;
        std::queue<std::size_t> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            std::size_t v = q.front();
            q.pop();
            comp.vertices.insert(g.vertex(v));
            for (std::size_t w : g.neighbors(v)) {
                if (host.contains(g.vertex(w))) {
                    comp.adhesion.insert(g.vertex(w));
                } else if (!seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace domtorso
