#pragma once

#include "domtorso/graph.hpp"
#include "domtorso/presentation.hpp"
#include "domtorso/vertex.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace domtorso {

/// An eventually periodic ray: the prefix, then for c = 0, 1, ... the period
/// instantiated at n = start + c*step.
struct RaySpec {
    std::string name;
    std::vector<Vertex> prefix;
    std::vector<VertexPattern> period;
    Index start = 0;
    Index step = 1;

    /// Vertex at position `pos` (0-based).
    Vertex at(Index pos) const;
    /// Prefix followed by `cycles` full periods.
    std::vector<Vertex> unroll(Index cycles) const;
    /// The first `length` vertices.
    std::vector<Vertex> sample(Index length) const;
    /// The ray with its first `cycles` periods moved into the prefix.
    RaySpec peeled(Index cycles) const;

    bool operator==(const RaySpec&) const = default;
};

/// `[ray <name>] prefix <addr>... period <pattern>... start <n> [step <k>]`.
RaySpec parse_ray(std::string_view text, std::size_t line = 1);
std::string to_string(const RaySpec& s);

/// Throws Error unless the spec denotes a ray of G: all vertices exist,
/// consecutive ones are adjacent and no vertex repeats.
void validate_ray(const GraphPresentation& p, const RaySpec& s);

/// The ray's vertices inside a truncation at (depth, reps).
std::vector<Vertex> ray_vertices_in(const RaySpec& s, const FiniteGraph& g, Index depth, Index reps);

/// Number of full cycles after which every period vertex has its varying
/// index above `bound`.
Index cycles_beyond(const RaySpec& s, Index bound);

} // namespace domtorso
