#pragma once

#include "domtorso/cardinal.hpp"
#include "domtorso/graph.hpp"
#include "domtorso/presentation.hpp"
#include "domtorso/vertex.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace domtorso {

/// The copies of one pattern: an index domain for indexed patterns, a
/// multiplicity for replicated ones.
struct ComponentFamily {
    std::string pattern;
    CopyKind kind = CopyKind::Indexed;
    IndexDomain indices;
    Cardinal count;
};

std::vector<ComponentFamily> enumerate_component_classes(const GraphPresentation& p);

/// N_G(D). For `Z#*` the (shared) adhesion set of every copy of Z.
VertexSet adhesion_set_of(const GraphPresentation& p, const ComponentId& d);

/// The vertices of D, with inner-ray positions cut at `depth`.
VertexSet component_vertices(const GraphPresentation& p, const ComponentId& d, Index depth);

/// Whether the component exists in the presented graph.
bool component_exists(const GraphPresentation& p, const ComponentId& d);

enum class Side : std::uint8_t { Prime, DoublePrime };

std::string to_string(Side s);

struct Contributor {
    std::string pattern;
    CopyKind kind = CopyKind::Indexed;
    Cardinal copies;
    /// Schema classes: instance i holds copy i+shift of this pattern.
    std::int64_t shift = 0;
};

/// The components sharing one adhesion set A, or a schema standing for one
/// such class per index i.
struct AdhesionClass {
    enum class Kind : std::uint8_t { Ground, Schema };

    Kind kind = Kind::Ground;
    VertexSet ground;
    /// Schema: instance i is {t.vertex_at(i) : t in terms} for i not in excluded.
    std::string pattern;
    std::vector<VertexTerm> terms;
    std::set<Index> excluded;
    Cardinal countPerInstance;
    std::vector<Contributor> contributors;

    Side side() const { return countPerInstance.is_infinite() ? Side::DoublePrime : Side::Prime; }
    VertexSet instance(Index i) const;
    /// "{X[1],X[2],X[3]}" or "Y:{X[i],X[i+1]}".
    std::string descriptor() const;
};

struct AdhesionClassification {
    GraphPresentation presentation;
    std::vector<AdhesionClass> classes;
    /// Every schema instance with index at least this bound is generic.
    Index exceptionBound = 0;
    std::map<VertexSet, std::size_t> groundClass;
    std::map<std::string, std::size_t> schemaClass;

    std::vector<std::size_t> prime_classes() const;
    std::vector<std::size_t> double_prime_classes() const;

    /// Index into `classes` of the class holding D; throws for invalid D.
    std::size_t class_of(const ComponentId& d) const;
    Side side_of(const ComponentId& d) const { return classes[class_of(d)].side(); }
};

AdhesionClassification classify_adhesion(const GraphPresentation& p);

/// Key=value report, one class per line group.
std::string report(const AdhesionClassification& c);

struct BruteComponent {
    VertexSet vertices;
    VertexSet adhesion;

    auto operator<=>(const BruteComponent&) const = default;
    bool operator==(const BruteComponent&) const = default;
};

/// Components of g - host with their neighbourhoods in host, sorted.
std::vector<BruteComponent> brute_force_components(const FiniteGraph& g, const VertexSet& host);

} // namespace domtorso
