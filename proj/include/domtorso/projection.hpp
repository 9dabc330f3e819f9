#pragma once

#include "domtorso/ray.hpp"
#include "domtorso/torso.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace domtorso {

/// A walk or ray with every vertex outside H replaced by its component. A
/// component term is stored as the contracted vertex V[D] of that component,
/// whatever its side; period terms may vary with n.
struct MaskedSequence {
    std::vector<Vertex> prefix;
    std::vector<VertexPattern> period;
    Index start = 0;
    Index step = 1;

    bool periodic() const { return !period.empty(); }
    std::vector<Vertex> unroll(Index cycles) const;
};

/// "X[2]" for host terms, "Comp(Z#0)" for component terms.
std::string masked_term_string(const Vertex& v);
std::string to_string(const MaskedSequence& m);

MaskedSequence mask_sequence(const GraphPresentation& p, const std::vector<Vertex>& walk);
MaskedSequence mask_sequence(const GraphPresentation& p, const RaySpec& s);

/// A walk in K: finite, or prefix + period in n. `origin` gives, for each
/// prefix term and each period term of cycle 0, the position of the first
/// masked term it came from.
struct ProjectionSeq {
    std::vector<Vertex> prefix;
    std::vector<VertexPattern> period;
    Index start = 0;
    Index step = 1;
    /// Positions in the masked sequence; period entries advance by
    /// periodLength per cycle.
    std::vector<Index> prefixOrigin;
    std::vector<Index> periodOrigin;
    Index periodLength = 0;
    /// Set when built from a finite sample of a ray.
    bool sampled = false;

    bool periodic() const { return !period.empty(); }
    std::vector<Vertex> unroll(Index cycles) const;
    /// Terms up to the first full cycle whose indices all exceed `bound`.
    std::vector<Vertex> terms_up_to(Index bound) const;
};

std::string to_string(const ProjectionSeq& s);

/// Rule 1 collapses each maximal run of one Prime component to V[D]; rule 2
/// deletes DoublePrime component terms. Periodic input is peeled and rotated
/// until the period starts with a host term and has settled sides, then
/// checked against two concrete cycles; throws Error("unstable period ...")
/// if they disagree.
ProjectionSeq k_project(const Torso& t, const MaskedSequence& m);

/// Finite projection of the first `length` masked terms of a ray.
ProjectionSeq k_project_sampled(const Torso& t, const RaySpec& s, Index length);

/// Whether the period contains a host term.
bool is_tendril(const GraphPresentation& p, const RaySpec& s);

struct TailComponent {
    ComponentId component;
    /// Least n with v_i in the component for every i >= n.
    Index from = 0;
};

/// The component holding a tail of a non-tendril; throws on a tendril.
TailComponent tail_component(const GraphPresentation& p, const RaySpec& s);

struct LocalFinitenessVerdict {
    bool ok = false;
    bool definitive = false;
    Index depthChecked = 0;
    std::string reason;
};

LocalFinitenessVerdict check_local_finiteness(const Torso& t, const ProjectionSeq& s, Index depth);

} // namespace domtorso
