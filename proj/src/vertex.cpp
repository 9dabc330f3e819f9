#include "domtorso/vertex.hpp"

#include "domtorso/error.hpp"
#include "text.hpp"

#include <sstream>

namespace domtorso {

std::string to_string(const LocalVertex& v)
{
    if (!v.pos)
        return v.name;
    return v.name + "[" + std::to_string(*v.pos) + "]";
}

std::string to_string(const ComponentId& c)
{
    if (c.kind == CopyKind::Indexed)
        return c.pattern + "@" + std::to_string(c.copy);
    if (c.allCopies)
        return c.pattern + "#*";
    return c.pattern + "#" + std::to_string(c.copy);
}

Vertex Vertex::host(std::string family, Index i)
{
    Vertex v;
    v.kind = VertexKind::Host;
    v.name = std::move(family);
    v.index = i;
    return v;
}

Vertex Vertex::inner(std::string pattern, CopyKind kind, Index copy, LocalVertex local)
{
    Vertex v;
    v.kind = VertexKind::Inner;
    v.name = std::move(pattern);
    v.index = copy;
    v.copy = kind;
    v.local = std::move(local);
    return v;
}

Vertex Vertex::contracted(const ComponentId& c)
{
    Vertex v;
    v.kind = VertexKind::Contracted;
    v.name = c.pattern;
    v.index = c.copy;
    v.copy = c.kind;
    return v;
}

ComponentId Vertex::component() const
{
    if (kind == VertexKind::Host)
        throw Error("host vertex " + to_string(*this) + " belongs to no component");
    return ComponentId{name, copy, index, false};
}

namespace {

char copy_separator(CopyKind k) { return k == CopyKind::Indexed ? '@' : '#'; }

} // namespace

std::string to_string(const Vertex& v)
{
    switch (v.kind) {
    case VertexKind::Host:
        return v.name + "[" + std::to_string(v.index) + "]";
    case VertexKind::Contracted:
        return "V[" + v.name + copy_separator(v.copy) + std::to_string(v.index) + "]";
    case VertexKind::Inner:
        return v.name + copy_separator(v.copy) + std::to_string(v.index) + "." + to_string(v.local);
    }
    return "?";
}

std::string to_string(const VertexSet& s)
{
    std::string out = "{";
    bool first = true;
    for (const auto& v : s) {
        if (!first)
            out += ",";
        out += to_string(v);
        first = false;
    }
    return out + "}";
}

std::string to_string(const std::vector<Vertex>& walk)
{
    std::string out = "(";
    for (std::size_t i = 0; i < walk.size(); ++i) {
        if (i)
            out += ",";
        out += to_string(walk[i]);
    }
    return out + ")";
}

Vertex VertexPattern::at(Index n) const
{
    Vertex v = base;
    switch (slot) {
    case Slot::None:
        break;
    case Slot::Index:
        v.index += n;
        break;
    case Slot::LocalPos:
        v.local.pos = *v.local.pos + n;
        break;
    }
    return v;
}

Index VertexPattern::offset() const
{
    switch (slot) {
    case Slot::Index:
        return base.index;
    case Slot::LocalPos:
        return *base.local.pos;
    case Slot::None:
        break;
    }
    return 0;
}

namespace {

std::string slot_text(Index offset)
{
    return offset == 0 ? std::string("n") : "n+" + std::to_string(offset);
}

} // namespace

std::string to_string(const VertexPattern& p)
{
    using Slot = VertexPattern::Slot;
    if (p.slot == Slot::None)
        return to_string(p.base);
    const Vertex& v = p.base;
    std::string idx = p.slot == Slot::Index ? slot_text(v.index) : std::to_string(v.index);
    switch (v.kind) {
    case VertexKind::Host:
        return v.name + "[" + idx + "]";
    case VertexKind::Contracted:
        return "V[" + v.name + copy_separator(v.copy) + idx + "]";
    case VertexKind::Inner: {
        std::string local = v.local.name;
        if (v.local.pos)
            local += "[" + (p.slot == Slot::LocalPos ? slot_text(*v.local.pos) : std::to_string(*v.local.pos)) + "]";
        return v.name + copy_separator(v.copy) + idx + "." + local;
    }
    }
    return "?";
}

std::string to_string(const VertexTerm& t)
{
    if (!t.affine)
        return t.family + "[" + std::to_string(t.offset) + "]";
    if (t.offset == 0)
        return t.family + "[i]";
    return t.family + "[i+" + std::to_string(t.offset) + "]";
}

namespace detail {

namespace {

bool is_variable(std::string_view name) { return name == "n" || name == "i"; }

struct NumberOrVariable {
    Index value = 0;
    bool variable = false;
};

NumberOrVariable read_slot(Cursor& cur, bool allowVariable)
{
    if (auto n = cur.try_number())
        return {*n, false};
    std::size_t mark = cur.position();
    auto name = cur.try_name();
    if (!name || !is_variable(*name) || !allowVariable) {
        cur.reset(mark);
        cur.fail("expected an index");
    }
    Index offset = 0;
    if (cur.consume('+')) {
        auto n = cur.try_number();
        if (!n)
            cur.fail("expected an offset after '+'");
        offset = *n;
    }
    return {offset, true};
}

} // namespace

VertexPattern parse_address(Cursor& cur, bool allowVariable)
{
    using Slot = VertexPattern::Slot;
    cur.skip_ws();
    VertexPattern out;
    std::string name = cur.name();
    bool seenVariable = false;
    auto take = [&](Slot s, const NumberOrVariable& nv) {
        if (nv.variable) {
            if (seenVariable)
                cur.fail("at most one index may use the loop variable");
            seenVariable = true;
            out.slot = s;
        }
        return nv.value;
    };

    if (cur.consume('[')) {
        std::size_t mark = cur.position();
        auto inner = cur.try_name();
        if (inner && (cur.peek() == '@' || cur.peek() == '#')) {
            if (name != "V")
                cur.fail("contracted vertices are written V[<component>]");
            CopyKind kind = cur.peek() == '@' ? CopyKind::Indexed : CopyKind::Replicated;
            cur.consume(cur.peek());
            Index copy = take(Slot::Index, read_slot(cur, allowVariable));
            cur.expect(']');
            out.base = Vertex::contracted(ComponentId{*inner, kind, copy, false});
            return out;
        }
        cur.reset(mark);
        Index index = take(Slot::Index, read_slot(cur, allowVariable));
        cur.expect(']');
        out.base = Vertex::host(name, index);
        return out;
    }

    if (cur.peek() == '@' || cur.peek() == '#') {
        CopyKind kind = cur.peek() == '@' ? CopyKind::Indexed : CopyKind::Replicated;
        cur.consume(cur.peek());
        Index copy = take(Slot::Index, read_slot(cur, allowVariable));
        cur.expect('.');
        auto local = cur.try_name();
        if (!local)
            cur.fail("expected a local vertex name");
        LocalVertex lv{*local, std::nullopt};
        if (cur.consume('[')) {
            lv.pos = take(Slot::LocalPos, read_slot(cur, allowVariable));
            cur.expect(']');
        }
        out.base = Vertex::inner(name, kind, copy, lv);
        return out;
    }
    cur.fail("expected '[', '@' or '#' after '" + name + "'");
}

} // namespace detail

Vertex parse_vertex(std::string_view text)
{
    detail::Cursor cur(text);
    VertexPattern p = detail::parse_address(cur, false);
    if (!cur.at_end())
        cur.fail("unexpected trailing text in address");
    return p.base;
}

VertexPattern parse_vertex_pattern(std::string_view text)
{
    detail::Cursor cur(text);
    VertexPattern p = detail::parse_address(cur, true);
    if (!cur.at_end())
        cur.fail("unexpected trailing text in address");
    return p;
}

VertexSet parse_vertex_set(std::string_view text)
{
    detail::Cursor cur(text);
    VertexSet out;
    cur.skip_ws();
    bool braced = cur.consume('{');
    cur.skip_ws();
    if (braced && cur.consume('}')) {
        if (!cur.at_end())
            cur.fail("unexpected trailing text after '}'");
        return out;
    }
    if (!braced && cur.at_end())
        return out;
    while (true) {
        out.insert(detail::parse_address(cur, false).base);
        cur.skip_ws();
        if (cur.consume(','))
            continue;
        break;
    }
    cur.skip_ws();
    if (braced)
        cur.expect('}');
    if (!cur.at_end())
        cur.fail("unexpected trailing text in vertex set");
    return out;
}

} // namespace domtorso
