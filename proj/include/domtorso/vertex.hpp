#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace domtorso {

using Index = std::uint64_t;

/// How copies of a component pattern are selected: by the index variable of
/// an indexed pattern, or by replicate ordinal.
enum class CopyKind : std::uint8_t { Indexed, Replicated };

/// A vertex local to a component pattern. Plain inner vertices carry only a
/// name; vertices on an inner ray also carry their position.
struct LocalVertex {
    std::string name;
    std::optional<Index> pos;

    auto operator<=>(const LocalVertex&) const = default;
    bool operator==(const LocalVertex&) const = default;
};

std::string to_string(const LocalVertex& v);

/// One component of G - H: a concrete copy of a pattern, or (for replicated
/// patterns in symbolic contexts) the class of all its copies.
struct ComponentId {
    std::string pattern;
    CopyKind kind = CopyKind::Indexed;
    Index copy = 0;
    bool allCopies = false;

    static ComponentId indexed(std::string pattern, Index i) { return {std::move(pattern), CopyKind::Indexed, i, false}; }
    static ComponentId replicate(std::string pattern, Index k) { return {std::move(pattern), CopyKind::Replicated, k, false}; }
    static ComponentId all_replicates(std::string pattern) { return {std::move(pattern), CopyKind::Replicated, 0, true}; }

    auto operator<=>(const ComponentId&) const = default;
    bool operator==(const ComponentId&) const = default;
};

/// "Y@3", "Z#0", "Z#*".
std::string to_string(const ComponentId& c);

/// Host < Contracted < Inner in the canonical vertex order.
enum class VertexKind : std::uint8_t { Host, Contracted, Inner };

/// A ground vertex of G or of the torso K.
///
/// Host vertices are `name[index]`. Inner vertices live in copy `index` of
/// pattern `name`. Contracted vertices are the torso vertices v_D, one per
/// contracted component; they carry the component's pattern and copy.
struct Vertex {
    VertexKind kind = VertexKind::Host;
    std::string name;
    Index index = 0;
    CopyKind copy = CopyKind::Indexed;
    LocalVertex local;

    static Vertex host(std::string family, Index i);
    static Vertex inner(std::string pattern, CopyKind kind, Index copy, LocalVertex local);
    static Vertex contracted(const ComponentId& c);

    bool is_host() const { return kind == VertexKind::Host; }
    bool is_inner() const { return kind == VertexKind::Inner; }
    bool is_contracted() const { return kind == VertexKind::Contracted; }

    /// The component an inner or contracted vertex belongs to.
    ComponentId component() const;

    auto operator<=>(const Vertex&) const = default;
    bool operator==(const Vertex&) const = default;
};

using VertexSet = std::set<Vertex>;

/// Address strings: `X[3]`, `Y@3.v`, `Z#0.v`, `Y@3.t[5]`, `V[Y@3]`.
std::string to_string(const Vertex& v);
std::string to_string(const VertexSet& s);
std::string to_string(const std::vector<Vertex>& walk);

/// Parses an address string; throws ParseError.
Vertex parse_vertex(std::string_view text);

/// Parses "{a, b, c}" or "a,b,c"; the braces are optional.
VertexSet parse_vertex_set(std::string_view text);

/// A vertex address whose host index, copy index or inner-ray position may be
/// `n+c` for a loop variable n. The varying slot of `base` stores c.
struct VertexPattern {
    enum class Slot : std::uint8_t { None, Index, LocalPos };

    Vertex base;
    Slot slot = Slot::None;

    Vertex at(Index n) const;
    Index offset() const;
    bool varies() const { return slot != Slot::None; }

    auto operator<=>(const VertexPattern&) const = default;
    bool operator==(const VertexPattern&) const = default;
};

/// `X[n+1]`, `Y@n.y`, `Z#0.t[n+2]`, `V[Y@n]`; `i` is accepted for `n`.
VertexPattern parse_vertex_pattern(std::string_view text);
std::string to_string(const VertexPattern& p);

/// A host-vertex term of the presentation language: `X[4]` (ground) or
/// `X[i+2]` (affine in the index variable).
struct VertexTerm {
    std::string family;
    bool affine = false;
    Index offset = 0;

    static VertexTerm ground(std::string family, Index n) { return {std::move(family), false, n}; }
    static VertexTerm shifted(std::string family, Index c) { return {std::move(family), true, c}; }

    Index at(Index i) const { return affine ? i + offset : offset; }
    Vertex vertex_at(Index i) const { return Vertex::host(family, at(i)); }

    auto operator<=>(const VertexTerm&) const = default;
    bool operator==(const VertexTerm&) const = default;
};

std::string to_string(const VertexTerm& t);

} // namespace domtorso
