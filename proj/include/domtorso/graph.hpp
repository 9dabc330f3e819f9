#pragma once

#include "domtorso/presentation.hpp"
#include "domtorso/vertex.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace domtorso {

/// Immutable finite simple graph over symbolic vertex addresses. Vertices
/// are stored in canonical order; adjacency lists are sorted by position.
class FiniteGraph {
public:
    class Builder {
    public:
        void add_vertex(const Vertex& v) { vertices_.push_back(v); }
        /// Both endpoints must be added as vertices before build().
        void add_edge(const Vertex& a, const Vertex& b) { edges_.emplace_back(a, b); }
        FiniteGraph build() &&;

    private:
        std::vector<Vertex> vertices_;
        std::vector<std::pair<Vertex, Vertex>> edges_;
    };

    FiniteGraph() = default;

    std::size_t size() const { return vertices_.size(); }
    std::size_t edge_count() const { return edgeCount_; }
    const Vertex& vertex(std::size_t id) const { return vertices_[id]; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    std::span<const std::size_t> neighbors(std::size_t id) const { return adjacency_[id]; }

    std::optional<std::size_t> find(const Vertex& v) const;
    bool contains(const Vertex& v) const { return find(v).has_value(); }
    bool has_edge(const Vertex& a, const Vertex& b) const;

    /// Edges as (lower id, higher id) pairs in lexicographic order.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    /// The subgraph induced by the given vertices (those absent are ignored).
    FiniteGraph induced(const VertexSet& keep) const;

private:
    std::vector<Vertex> vertices_;
    std::vector<std::vector<std::size_t>> adjacency_;
    std::size_t edgeCount_ = 0;
};

bool is_connected(const FiniteGraph& g);

/// The finite induced subgraph of a presented graph: host vertices with index
/// at most `depth`, copies whose attachments all lie there, and at most
/// `reps` copies of each replicated pattern. Inner-ray positions are cut at
/// `depth` as well.
struct FiniteTruncation {
    Index depth = 0;
    Index reps = 0;
    FiniteGraph graph;
};

FiniteTruncation truncate(const GraphPresentation& p, Index depth, Index reps);

/// Whether a copy of `pattern` is present in truncations at (depth, reps).
bool copy_in_truncation(const GraphPresentation& p, const ComponentPattern& pattern, Index copy, Index depth, Index reps);

} // namespace domtorso
