#include "domtorso/presentation.hpp"

#include "domtorso/error.hpp"
#include "domtorso/graph.hpp"
#include "text.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace domtorso {

bool HostFamily::contains(Index i) const
{
    if (size.is_finite() && i >= size.value())
        return false;
    return !omitted.contains(i);
}

bool ComponentPattern::has_local(const LocalVertex& v) const
{
    if (v.pos)
        return std::find(innerRays.begin(), innerRays.end(), v.name) != innerRays.end();
    return std::find(innerVertices.begin(), innerVertices.end(), v.name) != innerVertices.end();
}

std::vector<VertexTerm> ComponentPattern::attach_terms() const
{
    std::vector<VertexTerm> out;
    for (const auto& a : attachEdges)
        out.push_back(a.target);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

const HostFamily* GraphPresentation::family(std::string_view name) const
{
    for (const auto& f : families)
        if (f.name == name)
            return &f;
    return nullptr;
}

const ComponentPattern* GraphPresentation::pattern(std::string_view name) const
{
    for (const auto& p : patterns)
        if (p.name == name)
            return &p;
    return nullptr;
}

bool IndexDomain::contains(Index i) const
{
    if (empty)
        return false;
    if (!infinite && i > last)
        return false;
    return !excluded.contains(i);
}

Cardinal IndexDomain::size() const
{
    if (empty)
        return Cardinal::finite(0);
    if (infinite)
        return Cardinal::aleph0();
    Index n = last + 1;
    for (Index e : excluded)
        if (e <= last)
            --n;
    return Cardinal::finite(n);
}

IndexDomain index_domain(const GraphPresentation& p, const ComponentPattern& pattern)
{
    IndexDomain d;
    if (pattern.kind != CopyKind::Indexed) {
        d.empty = true;
        return d;
    }
    for (const auto& a : pattern.attachEdges) {
        const VertexTerm& t = a.target;
        const HostFamily* f = p.family(t.family);
        if (!f) {
            d.empty = true;
            return d;
        }
        if (!t.affine) {
            if (!f->contains(t.offset)) {
                d.empty = true;
                return d;
            }
            continue;
        }
        if (f->size.is_finite()) {
            if (f->size.value() <= t.offset) {
                d.empty = true;
                return d;
            }
            Index last = f->size.value() - 1 - t.offset;
            d.last = d.infinite ? last : std::min(d.last, last);
            d.infinite = false;
        }
        for (Index o : f->omitted)
            if (o >= t.offset)
                d.excluded.insert(o - t.offset);
    }
    if (!d.infinite && d.size() == Cardinal::finite(0))
        d.empty = true;
    return d;
}

namespace {

using detail::Cursor;

VertexTerm parse_term(Cursor& cur)
{
    std::string family = cur.name();
    cur.expect('[');
    cur.skip_ws();
    VertexTerm t;
    t.family = family;
    if (auto n = cur.try_number()) {
        t.offset = *n;
    } else {
        std::size_t mark = cur.position();
        auto var = cur.try_name();
        if (!var || *var != "i") {
            cur.reset(mark);
            cur.fail("expected an index or i+c");
        }
        t.affine = true;
        cur.skip_ws();
        if (cur.consume('+'))
            t.offset = cur.number();
    }
    cur.skip_ws();
    cur.expect(']');
    return t;
}

LocalVertex parse_local(Cursor& cur)
{
    LocalVertex lv{cur.name(), std::nullopt};
    if (cur.consume('[')) {
        lv.pos = cur.number();
        cur.skip_ws();
        cur.expect(']');
    }
    return lv;
}

} // namespace

GraphPresentation parse_presentation(std::string_view text)
{
    GraphPresentation p;
    ComponentPattern* current = nullptr;
    std::set<std::string> names;
    auto lines = detail::split_lines(text);

    struct PendingTerm {
        VertexTerm term;
        std::size_t line;
        std::size_t column;
    };
    std::vector<PendingTerm> terms;

    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        std::string_view line = detail::strip_comment(lines[ln]);
        Cursor cur(line, ln + 1);
        if (cur.at_end())
            continue;
        auto term_at = [&]() {
            cur.skip_ws();
            std::size_t col = cur.column();
            VertexTerm t = parse_term(cur);
            terms.push_back({t, ln + 1, col});
            return t;
        };
        auto local_in = [&](const ComponentPattern& pat) {
            cur.skip_ws();
            std::size_t mark = cur.position();
            LocalVertex lv = parse_local(cur);
            if (!pat.has_local(lv)) {
                cur.reset(mark);
                cur.fail("unknown inner vertex '" + to_string(lv) + "'");
            }
            return lv;
        };

        if (cur.consume_word("host")) {
            current = nullptr;
            if (cur.consume_word("family")) {
                cur.skip_ws();
                std::size_t col = cur.column();
                HostFamily f;
                f.name = cur.name();
                if (names.contains(f.name))
                    throw ParseError(ln + 1, col, "duplicate name '" + f.name + "'");
                names.insert(f.name);
                if (cur.consume_word("size")) {
                    f.size = Cardinal::finite(cur.number());
                } else if (cur.consume_word("index")) {
                    cur.expect_word("nat");
                    f.size = Cardinal::aleph0();
                } else {
                    cur.fail("expected 'size <n>' or 'index nat'");
                }
                if (cur.consume_word("omit")) {
                    while (!cur.at_end())
                        f.omitted.insert(cur.number());
                }
                p.families.push_back(std::move(f));
            } else if (cur.consume_word("edge")) {
                HostEdgeTemplate e;
                e.a = term_at();
                cur.expect_symbol("--");
                e.b = term_at();
                p.hostEdges.push_back(std::move(e));
            } else {
                cur.fail("expected 'family' or 'edge' after 'host'");
            }
        } else if (cur.consume_word("component")) {
            cur.skip_ws();
            std::size_t col = cur.column();
            ComponentPattern pat;
            pat.name = cur.name();
            if (names.contains(pat.name))
                throw ParseError(ln + 1, col, "duplicate name '" + pat.name + "'");
            names.insert(pat.name);
            if (cur.consume_word("indexed")) {
                pat.kind = CopyKind::Indexed;
            } else if (cur.consume_word("replicated")) {
                pat.kind = CopyKind::Replicated;
                cur.skip_ws();
                std::size_t mark = cur.position();
                std::string word(cur.token());
                try {
                    pat.multiplicity = parse_cardinal(word);
                } catch (const Error&) {
                    cur.reset(mark);
                    cur.fail("expected a multiplicity (a number, aleph0 or aleph1)");
                }
            } else {
                cur.fail("expected 'indexed' or 'replicated'");
            }
            p.patterns.push_back(std::move(pat));
            current = &p.patterns.back();
        } else if (cur.consume_word("inner")) {
            if (!current)
                cur.fail("'inner' outside a component block");
            if (cur.consume_word("edge")) {
                InnerEdge e;
                e.a = local_in(*current);
                cur.expect_symbol("--");
                e.b = local_in(*current);
                current->innerEdges.push_back(std::move(e));
            } else {
                bool ray = cur.consume_word("ray");
                cur.skip_ws();
                std::size_t col = cur.column();
                std::string name = cur.name();
                if (current->has_local({name, std::nullopt}) || current->has_local({name, 0}))
                    throw ParseError(ln + 1, col, "duplicate inner vertex '" + name + "'");
                (ray ? current->innerRays : current->innerVertices).push_back(name);
            }
        } else if (cur.consume_word("attach")) {
            if (!current)
                cur.fail("'attach' outside a component block");
            AttachEdge a;
            a.local = local_in(*current);
            cur.expect_symbol("--");
            a.target = term_at();
            current->attachEdges.push_back(std::move(a));
        } else {
            cur.fail("unknown directive '" + std::string(cur.token()) + "'");
        }
        if (!cur.at_end())
            cur.fail("unexpected trailing text");
    }

    for (const auto& t : terms)
        if (!p.family(t.term.family))
            throw ParseError(t.line, t.column, "unknown family '" + t.term.family + "'");
    return p;
}

std::string serialize(const GraphPresentation& p)
{
    std::ostringstream out;
    for (const auto& f : p.families) {
        out << "host family " << f.name;
        if (f.size.is_finite())
            out << " size " << f.size.value();
        else
            out << " index nat";
        if (!f.omitted.empty()) {
            out << " omit";
            for (Index o : f.omitted)
                out << ' ' << o;
        }
        out << '\n';
    }
    for (const auto& e : p.hostEdges)
        out << "host edge " << to_string(e.a) << " -- " << to_string(e.b) << '\n';
    for (const auto& pat : p.patterns) {
        out << "component " << pat.name;
        if (pat.kind == CopyKind::Indexed)
            out << " indexed\n";
        else
            out << " replicated " << to_string(pat.multiplicity) << '\n';
        for (const auto& v : pat.innerVertices)
            out << "  inner " << v << '\n';
        for (const auto& r : pat.innerRays)
            out << "  inner ray " << r << '\n';
        for (const auto& e : pat.innerEdges)
            out << "  inner edge " << to_string(e.a) << " -- " << to_string(e.b) << '\n';
        for (const auto& a : pat.attachEdges)
            out << "  attach " << to_string(a.local) << " -- " << to_string(a.target) << '\n';
    }
    return out.str();
}

Index max_affine_offset(const GraphPresentation& p)
{
    Index m = 0;
    auto see = [&](const VertexTerm& t) {
        if (t.affine)
            m = std::max(m, t.offset);
    };
    for (const auto& e : p.hostEdges) {
        see(e.a);
        see(e.b);
    }
    for (const auto& pat : p.patterns)
        for (const auto& a : pat.attachEdges)
            see(a.target);
    return m;
}

Index max_ground_index(const GraphPresentation& p)
{
    Index m = 0;
    auto see = [&](const VertexTerm& t) {
        if (!t.affine)
            m = std::max(m, t.offset);
    };
    for (const auto& f : p.families)
        if (!f.omitted.empty())
            m = std::max(m, *f.omitted.rbegin());
    for (const auto& e : p.hostEdges) {
        see(e.a);
        see(e.b);
    }
    for (const auto& pat : p.patterns)
        for (const auto& a : pat.attachEdges)
            see(a.target);
    return m;
}

namespace {

bool inner_graph_connected(const ComponentPattern& pat)
{
    // Nodes: plain inner vertices, then one node per inner ray.
    std::map<std::string, std::size_t> id;
    for (const auto& v : pat.innerVertices)
        id.emplace("v:" + v, id.size());
    for (const auto& r : pat.innerRays)
        id.emplace("r:" + r, id.size());
    if (id.empty())
        return false;
    std::vector<std::size_t> parent(id.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = root(parent[x]);
    };
    auto key = [](const LocalVertex& lv) { return (lv.pos ? "r:" : "v:") + lv.name; };
    for (const auto& e : pat.innerEdges) {
        auto a = id.find(key(e.a));
        auto b = id.find(key(e.b));
        if (a == id.end() || b == id.end())
            return false;
        parent[root(a->second)] = root(b->second);
    }
    std::size_t r0 = root(0);
    for (std::size_t i = 1; i < parent.size(); ++i)
        if (root(i) != r0)
            return false;
    return true;
}

} // namespace

ValidationReport validate_presentation(const GraphPresentation& p, Index checkDepth, const ValidationOptions& options)
{
    ValidationReport r;
    r.checkDepth = checkDepth;
    auto error = [&](std::string msg) {
        r.ok = false;
        r.errors.push_back(std::move(msg));
    };

    std::set<std::string> names;
    for (const auto& f : p.families) {
        if (!names.insert(f.name).second)
            error("duplicate name '" + f.name + "'");
        if (f.size.tag() == Cardinal::Tag::Aleph1)
            error("host family " + f.name + " cannot have cardinality aleph1");
    }
    for (const auto& pat : p.patterns)
        if (!names.insert(pat.name).second)
            error("duplicate name '" + pat.name + "'");

    auto check_term = [&](const VertexTerm& t, const std::string& where) {
        const HostFamily* f = p.family(t.family);
        if (!f) {
            error("unknown family '" + t.family + "' in " + where);
            return;
        }
        if (t.affine && t.offset > options.maxOffset)
            error("offset " + std::to_string(t.offset) + " exceeds bound " + std::to_string(options.maxOffset) + " in " + where);
        if (!t.affine && !f->contains(t.offset))
            error(to_string(t) + " out of range in " + where);
    };

    for (const auto& e : p.hostEdges) {
        std::string where = "host edge " + to_string(e.a) + " -- " + to_string(e.b);
        check_term(e.a, where);
        check_term(e.b, where);
        if (e.a.family == e.b.family && e.a.affine == e.b.affine && e.a.offset == e.b.offset)
            error("self-loop in " + where);
    }

    for (const auto& pat : p.patterns) {
        std::string where = "pattern " + pat.name;
        if (pat.innerVertices.empty() && pat.innerRays.empty())
            error(where + " has no inner vertices");
        if (pat.attachEdges.empty())
            error(where + " has empty adhesion");
        if (!pat.innerVertices.empty() || !pat.innerRays.empty()) {
            if (!inner_graph_connected(pat))
                error(where + " not connected");
        }
        for (const auto& e : pat.innerEdges)
            if (!pat.has_local(e.a) || !pat.has_local(e.b))
                error("unknown inner vertex in " + where);
        bool dependsOnIndex = false;
        for (const auto& a : pat.attachEdges) {
            if (!pat.has_local(a.local))
                error("unknown inner vertex '" + to_string(a.local) + "' in " + where);
            check_term(a.target, where);
            dependsOnIndex = dependsOnIndex || a.target.affine;
        }
        if (pat.kind == CopyKind::Indexed) {
            if (!pat.attachEdges.empty() && !dependsOnIndex)
                error("indexed " + where + " has no i-dependent attachment");
            else if (!pat.attachEdges.empty() && index_domain(p, pat).empty)
                error("indexed " + where + " has no valid index");
        } else {
            if (dependsOnIndex)
                error("replicated " + where + " uses the index variable");
            if (pat.multiplicity == Cardinal::finite(0))
                error("replicated " + where + " has multiplicity 0");
        }
    }

    if (!r.ok)
        return r;

    FiniteTruncation t = truncate(p, checkDepth, 1);
    r.connectivityChecked = true;
    if (!is_connected(t.graph))
        error("G truncation at depth " + std::to_string(checkDepth) + " is disconnected");
    VertexSet hosts;
    for (const auto& v : t.graph.vertices())
        if (v.is_host())
            hosts.insert(v);
    if (!is_connected(t.graph.induced(hosts)))
        error("H truncation at depth " + std::to_string(checkDepth) + " is disconnected");
    return r;
}

void require_valid(const GraphPresentation& p, Index checkDepth, const ValidationOptions& options)
{
    ValidationReport r = validate_presentation(p, checkDepth, options);
    if (!r.ok)
        throw Error(r.errors.front());
}

bool contains_vertex(const GraphPresentation& p, const Vertex& v)
{
    switch (v.kind) {
    case VertexKind::Host: {
        const HostFamily* f = p.family(v.name);
        return f && f->contains(v.index);
    }
    case VertexKind::Inner: {
        const ComponentPattern* pat = p.pattern(v.name);
        if (!pat || pat->kind != v.copy || !pat->has_local(v.local))
            return false;
        if (pat->kind == CopyKind::Indexed)
            return index_domain(p, *pat).contains(v.index);
        return pat->multiplicity.is_infinite() || v.index < pat->multiplicity.value();
    }
    case VertexKind::Contracted:
        return false;
    }
    return false;
}

void check_vertex(const GraphPresentation& p, const Vertex& v)
{
    if (!contains_vertex(p, v))
        throw Error("address out of range: " + to_string(v));
}

std::string to_string(const FamilyRef& r)
{
    switch (r.kind) {
    case FamilyRef::Kind::HostFamily:
        return to_string(VertexTerm::shifted(r.name, r.offset)) + " x" + to_string(r.count);
    case FamilyRef::Kind::IndexedCopies:
        return r.name + "@i." + to_string(r.local) + " x" + to_string(r.count);
    case FamilyRef::Kind::ReplicatedCopies:
        return r.name + "#*." + to_string(r.local) + " x" + to_string(r.count);
    }
    return "?";
}

namespace {

Cardinal family_tail_count(const HostFamily& f, Index from)
{
    if (f.size.is_infinite())
        return Cardinal::aleph0();
    Index n = f.size.value() > from ? f.size.value() - from : 0;
    for (Index o : f.omitted)
        if (o >= from && o < f.size.value())
            --n;
    return Cardinal::finite(n);
}

} // namespace

NeighborhoodDescriptor neighborhood(const GraphPresentation& p, const Vertex& v)
{
    check_vertex(p, v);
    NeighborhoodDescriptor out;
    auto add = [&](const Vertex& w) {
        if (contains_vertex(p, w) && w != v)
            out.ground.push_back(w);
    };
    auto add_ref = [&](FamilyRef r) {
        if (r.count != Cardinal::finite(0))
            out.refs.push_back(std::move(r));
    };

    if (v.is_host()) {
        auto orient = [&](const VertexTerm& s, const VertexTerm& t) {
            if (s.family != v.name)
                return;
            if (!s.affine) {
                if (s.offset != v.index)
                    return;
                if (!t.affine)
                    add(t.vertex_at(0));
                else
                    add_ref({FamilyRef::Kind::HostFamily, t.family, t.offset, {}, family_tail_count(*p.family(t.family), t.offset)});
                return;
            }
            if (v.index < s.offset)
                return;
            Index i = v.index - s.offset;
            add(t.vertex_at(i));
        };
        for (const auto& e : p.hostEdges) {
            orient(e.a, e.b);
            orient(e.b, e.a);
        }
        for (const auto& pat : p.patterns) {
            for (const auto& a : pat.attachEdges) {
                const VertexTerm& t = a.target;
                if (t.family != v.name)
                    continue;
                if (!t.affine) {
                    if (t.offset != v.index)
                        continue;
                    if (pat.kind == CopyKind::Indexed)
                        add_ref({FamilyRef::Kind::IndexedCopies, pat.name, 0, a.local, index_domain(p, pat).size()});
                    else
                        add_ref({FamilyRef::Kind::ReplicatedCopies, pat.name, 0, a.local, pat.multiplicity});
                    continue;
                }
                if (v.index < t.offset)
                    continue;
                add(Vertex::inner(pat.name, pat.kind, v.index - t.offset, a.local));
            }
        }
    } else {
        const ComponentPattern& pat = *p.pattern(v.name);
        auto at = [&](const LocalVertex& lv) { return Vertex::inner(pat.name, pat.kind, v.index, lv); };
        for (const auto& e : pat.innerEdges) {
            if (e.a == v.local)
                add(at(e.b));
            if (e.b == v.local)
                add(at(e.a));
        }
        if (v.local.pos) {
            if (*v.local.pos > 0)
                add(at({v.local.name, *v.local.pos - 1}));
            add(at({v.local.name, *v.local.pos + 1}));
        }
        for (const auto& a : pat.attachEdges)
            if (a.local == v.local)
                add(a.target.vertex_at(v.index));
    }

    std::sort(out.ground.begin(), out.ground.end());
    out.ground.erase(std::unique(out.ground.begin(), out.ground.end()), out.ground.end());
    std::sort(out.refs.begin(), out.refs.end(), [](const FamilyRef& a, const FamilyRef& b) {
        return std::tie(a.kind, a.name, a.offset, a.local) < std::tie(b.kind, b.name, b.offset, b.local);
    });
    out.refs.erase(std::unique(out.refs.begin(), out.refs.end()), out.refs.end());
    return out;
}

bool adjacent(const GraphPresentation& p, const Vertex& u, const Vertex& v)
{
    if (!contains_vertex(p, u) || !contains_vertex(p, v) || u == v)
        return false;
    NeighborhoodDescriptor n = neighborhood(p, u);
    if (std::binary_search(n.ground.begin(), n.ground.end(), v))
        return true;
    for (const auto& r : n.refs) {
        switch (r.kind) {
        case FamilyRef::Kind::HostFamily:
            if (v.is_host() && v.name == r.name && v.index >= r.offset)
                return true;
            break;
        case FamilyRef::Kind::IndexedCopies:
        case FamilyRef::Kind::ReplicatedCopies:
            if (v.is_inner() && v.name == r.name && v.local == r.local)
                return true;
            break;
        }
    }
    return false;
}

std::string_view example4_presentation_text()
{
    return "# Ladder X/Y with an uncountable fan Z over x1, x2, x3.\n"
           "host family X index nat\n"
           "host edge X[i] -- X[i+1]\n"
           "component Y indexed\n"
           "  inner y\n"
           "  attach y -- X[i]\n"
           "  attach y -- X[i+1]\n"
           "component Z replicated aleph1\n"
           "  inner z\n"
           "  attach z -- X[1]\n"
           "  attach z -- X[2]\n"
           "  attach z -- X[3]\n";
}

} // namespace domtorso
