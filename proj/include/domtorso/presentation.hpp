#pragma once

#include "domtorso/cardinal.hpp"
#include "domtorso/error.hpp"
#include "domtorso/vertex.hpp"

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace domtorso {

/// Host family X: vertices X[0], X[1], ... up to its size. `omitted` lists
/// indices that are not vertices (only produced when a torso is written out).
struct HostFamily {
    std::string name;
    Cardinal size = Cardinal::aleph0();
    std::set<Index> omitted;

    bool contains(Index i) const;

    bool operator==(const HostFamily&) const = default;
};

struct HostEdgeTemplate {
    VertexTerm a;
    VertexTerm b;

    bool operator==(const HostEdgeTemplate&) const = default;
};

struct InnerEdge {
    LocalVertex a;
    LocalVertex b;

    bool operator==(const InnerEdge&) const = default;
};

struct AttachEdge {
    LocalVertex local;
    VertexTerm target;

    bool operator==(const AttachEdge&) const = default;
};

/// A finite connected graph that is copied either once per index i
/// (indexed) or a cardinal number of times (replicated). `innerRays` name
/// infinite paths r[0] - r[1] - ... inside every copy.
struct ComponentPattern {
    std::string name;
    CopyKind kind = CopyKind::Indexed;
    Cardinal multiplicity = Cardinal::finite(1);
    std::vector<std::string> innerVertices;
    std::vector<std::string> innerRays;
    std::vector<InnerEdge> innerEdges;
    std::vector<AttachEdge> attachEdges;

    bool has_local(const LocalVertex& v) const;
    std::vector<VertexTerm> attach_terms() const;

    bool operator==(const ComponentPattern&) const = default;
};

/// Finite description of an infinite graph G with designated induced
/// subgraph H (the host).
struct GraphPresentation {
    std::vector<HostFamily> families;
    std::vector<HostEdgeTemplate> hostEdges;
    std::vector<ComponentPattern> patterns;

    const HostFamily* family(std::string_view name) const;
    const ComponentPattern* pattern(std::string_view name) const;

    bool operator==(const GraphPresentation&) const = default;
};

/// The valid copy indices of an indexed pattern: 0..last (or all naturals)
/// minus a finite excluded set.
struct IndexDomain {
    bool infinite = true;
    Index last = 0;
    std::set<Index> excluded;
    bool empty = false;

    bool contains(Index i) const;
    Cardinal size() const;
};

IndexDomain index_domain(const GraphPresentation& p, const ComponentPattern& pattern);

GraphPresentation parse_presentation(std::string_view text);
std::string serialize(const GraphPresentation& p);

struct ValidationOptions {
    Index maxOffset = 8;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> errors;
    /// Connectivity is checked on the truncation at this depth only.
    Index checkDepth = 0;
    bool connectivityChecked = false;
};

ValidationReport validate_presentation(const GraphPresentation& p, Index checkDepth, const ValidationOptions& options = {});

/// Throws Error with the first validation error.
void require_valid(const GraphPresentation& p, Index checkDepth = 20, const ValidationOptions& options = {});

/// Largest affine offset and largest ground index mentioned anywhere in the
/// presentation (attach terms, host edges, omitted indices).
Index max_affine_offset(const GraphPresentation& p);
Index max_ground_index(const GraphPresentation& p);

/// Whether `v` denotes a vertex of G (host or inner vertex).
bool contains_vertex(const GraphPresentation& p, const Vertex& v);

/// Throws Error("address out of range: ...") unless contains_vertex.
void check_vertex(const GraphPresentation& p, const Vertex& v);

/// Infinitely (or many) identical neighbours summarised by reference.
struct FamilyRef {
    enum class Kind : std::uint8_t {
        HostFamily, ///< every name[i+offset] that exists
        IndexedCopies, ///< `local` in every copy of an indexed pattern
        ReplicatedCopies, ///< `local` in every copy of a replicated pattern
    };
    Kind kind = Kind::HostFamily;
    std::string name;
    Index offset = 0;
    LocalVertex local;
    Cardinal count;

    bool operator==(const FamilyRef&) const = default;
};

struct NeighborhoodDescriptor {
    std::vector<Vertex> ground;
    std::vector<FamilyRef> refs;
};

std::string to_string(const FamilyRef& r);

/// Neighbours of `v` in G read off the templates.
NeighborhoodDescriptor neighborhood(const GraphPresentation& p, const Vertex& v);

/// Whether the templates assert the edge uv.
bool adjacent(const GraphPresentation& p, const Vertex& u, const Vertex& v);

/// The built-in example4 scenario as presentation text.
std::string_view example4_presentation_text();

} // namespace domtorso
