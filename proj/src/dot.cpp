#include "domtorso/dot.hpp"

#include <set>
#include <sstream>

namespace domtorso {

namespace {

std::string quoted(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string export_dot(const FiniteGraph& g, const DotHighlights& h)
{
    std::set<std::pair<Vertex, Vertex>> witnessEdges;
    for (std::size_t k = 1; k < h.witness.size(); ++k) {
        witnessEdges.insert({h.witness[k - 1], h.witness[k]});
        witnessEdges.insert({h.witness[k], h.witness[k - 1]});
    }
    VertexSet onWitness(h.witness.begin(), h.witness.end());

    std::ostringstream out;
    out << "graph G {\n";
    if (!h.title.empty())
        out << "  label=" << quoted(h.title) << ";\n";
    out << "  node [shape=ellipse];\n";
    for (const auto& v : g.vertices()) {
        std::vector<std::string> attrs;
        if (h.f.contains(v)) {
            attrs.push_back("shape=box");
            attrs.push_back("color=blue");
            attrs.push_back("penwidth=2");
        }
        if (h.u.contains(v)) {
            attrs.push_back("style=filled");
            attrs.push_back("fillcolor=orange");
        }
        if (onWitness.contains(v))
            attrs.push_back("fontcolor=darkgreen");
        else if (h.ray.contains(v))
            attrs.push_back("fontcolor=red");
        out << "  " << quoted(to_string(v));
        if (!attrs.empty()) {
            out << " [";
            for (std::size_t k = 0; k < attrs.size(); ++k)
                out << (k ? ", " : "") << attrs[k];
            out << "]";
        }
        out << ";\n";
    }
    for (auto [a, b] : g.edges()) {
        const Vertex& x = g.vertex(a);
        const Vertex& y = g.vertex(b);
        out << "  " << quoted(to_string(x)) << " -- " << quoted(to_string(y));
        if (witnessEdges.contains({x, y}))
            out << " [color=green, penwidth=2]";
        else if (h.ray.contains(x) && h.ray.contains(y))
            out << " [color=red]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace domtorso
