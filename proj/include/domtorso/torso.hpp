#pragma once

#include "domtorso/adhesion.hpp"
#include "domtorso/graph.hpp"
#include "domtorso/presentation.hpp"

#include <string>
#include <vector>

namespace domtorso {

enum class EtaOrder : std::uint8_t {
    RoundRobin, ///< copy k goes to A[k mod |A|]
    Reversed, ///< copy k goes to A[|A|-1-(k mod |A|)]
};

/// Where each component with an infinitely shared adhesion set A is
/// contracted to: a vertex of A chosen from the copy ordinal.
struct EtaAssignment {
    EtaOrder order = EtaOrder::RoundRobin;

    Vertex image(const VertexSet& a, Index ordinal) const;
};

EtaAssignment choose_eta(const AdhesionClassification& c, EtaOrder order = EtaOrder::RoundRobin);

/// The contraction minor K: the host, one vertex V[D] per component D on the
/// Prime side, and the adhesion sets of the DoublePrime side made complete.
class Torso {
public:
    Torso(AdhesionClassification c, EtaAssignment eta);

    const GraphPresentation& presentation() const { return classification_.presentation; }
    const AdhesionClassification& classification() const { return classification_; }
    const EtaAssignment& eta() const { return eta_; }

    bool contains(const Vertex& v) const;
    bool adjacent(const Vertex& a, const Vertex& b) const;

    /// eta(D) for a DoublePrime component.
    Vertex eta_of(const ComponentId& d) const;

    /// The ground adhesion sets completed to cliques.
    std::vector<VertexSet> completed_sets() const;

    /// K restricted to the host part of the G-truncation at (depth, reps) and
    /// the V[D] whose component lies in that truncation.
    FiniteTruncation truncate(Index depth, Index reps) const;

    /// K written as a host-only presentation; each Prime pattern becomes a
    /// family V_<pattern>.
    GraphPresentation as_presentation() const;

private:
    AdhesionClassification classification_;
    EtaAssignment eta_;
    std::vector<VertexSet> completed_;
};

Torso build_torso(const GraphPresentation& p, const AdhesionClassification& c, const EtaAssignment& eta);

/// Convenience: classify, round-robin eta, build.
Torso build_torso(const GraphPresentation& p, EtaOrder order = EtaOrder::RoundRobin);

/// The contraction map from V(G) onto V(K).
Vertex rho_of(const Torso& t, const Vertex& u);

struct ConservativityReport {
    Cardinal hostSize;
    Cardinal primeComponents;
    Cardinal torsoSize;
    bool conservative = false;
};

ConservativityReport conservativity_check(const Torso& t);

std::string report(const ConservativityReport& r);

} // namespace domtorso
