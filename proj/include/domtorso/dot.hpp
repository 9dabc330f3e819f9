#pragma once

#include "domtorso/graph.hpp"

#include <string>
#include <vector>

namespace domtorso {

struct DotHighlights {
    std::string title;
    VertexSet f; ///< boxed, blue
    VertexSet u; ///< filled orange
    VertexSet ray; ///< red
    std::vector<Vertex> witness; ///< green path
};

/// Graphviz text for a finite graph; vertices and edges in canonical order.
std::string export_dot(const FiniteGraph& g, const DotHighlights& h = {});

} // namespace domtorso
