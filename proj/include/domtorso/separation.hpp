#pragma once

#include "domtorso/graph.hpp"
#include "domtorso/projection.hpp"
#include "domtorso/ray.hpp"
#include "domtorso/torso.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace domtorso {

/// Either a path from U to the targets avoiding F, or the list of
/// (depth, reps) truncations in which no such path exists.
struct SeparationCertificate {
    bool separated = false;
    std::vector<Vertex> witness;
    std::vector<std::pair<Index, Index>> checked;
};

/// BFS from U\F in g - F; a path meets F when any of its vertices (ends
/// included) lies in F. The witness is a shortest path, ties broken by the
/// canonical vertex order.
SeparationCertificate separates_finite(const FiniteGraph& g, const VertexSet& f, const VertexSet& u, const VertexSet& targets);

/// What to separate U from: a ray of G, a projection into K, or a fixed set.
struct TargetSpec {
    enum class Kind : std::uint8_t { Ray, Projection, Set };

    Kind kind = Kind::Set;
    RaySpec ray;
    /// Only the first `sampleLength` ray vertices, when set.
    std::optional<Index> sampleLength;
    ProjectionSeq projection;
    VertexSet set;

    static TargetSpec of_ray(RaySpec s);
    static TargetSpec sampled_ray(RaySpec s, Index length);
    static TargetSpec of_projection(ProjectionSeq s);
    static TargetSpec of_set(VertexSet s);

    /// Target vertices present in the truncation.
    VertexSet in(const FiniteTruncation& t) const;
};

inline const std::vector<Index> kDefaultDepths{10, 20, 40};
inline constexpr Index kDefaultReps = 3;

/// Runs separates_finite on G (or K) truncated at each depth. Stops at the
/// first NotSeparated, which is definitive.
SeparationCertificate separates_at_depths(const GraphPresentation& p, const VertexSet& f, const VertexSet& u, const TargetSpec& target, const std::vector<Index>& depths, Index reps);
SeparationCertificate separates_at_depths(const Torso& k, const VertexSet& f, const VertexSet& u, const TargetSpec& target, const std::vector<Index>& depths, Index reps);

/// A minimum vertex set meeting every U-target path (ends included), by
/// max flow on the split graph. Of all minimum cuts, the one closest to the
/// targets. Vertices in both U and targets are always taken.
VertexSet min_separator(const FiniteGraph& g, const VertexSet& u, const VertexSet& targets);

/// Throws unless every vertex of F is a host vertex or a torso vertex V[D].
void check_torso_set(const Torso& t, const VertexSet& f);

std::set<ComponentId> d_hat_prime(const Torso& t, const VertexSet& f);
std::set<ComponentId> d_hat_double_prime(const Torso& t, const RaySpec& s, const VertexSet& f);

/// (F n V(H)) together with N(D) for D in the two hatted families.
VertexSet s_modification(const Torso& t, const RaySpec& s, const VertexSet& f);

/// (F n V(H)) together with N(D) for D in d_hat_prime only.
VertexSet pitz_x(const Torso& t, const VertexSet& f);

enum class SeparatorChoice : std::uint8_t { SModification, PitzX };

std::string to_string(SeparatorChoice c);

struct LemmaReport {
    SeparatorChoice choice = SeparatorChoice::SModification;
    VertexSet f;
    VertexSet separator;
    ProjectionSeq projection;
    SeparationCertificate hypothesis;
    SeparationCertificate conclusion;
    /// "holds", "hypothesis-not-established", "separator-fails" (for X) or
    /// "LEMMA-VIOLATION" (for F_S).
    std::string status;

    bool violation() const { return status == "LEMMA-VIOLATION"; }
};

/// Hypothesis: F separates U from the projection's vertex set W in K.
/// Conclusion: the chosen separator separates U from S in G.
LemmaReport lemma_check(const Torso& t, const VertexSet& u, const RaySpec& s, const VertexSet& f, const std::vector<Index>& depths, Index reps, SeparatorChoice choice = SeparatorChoice::SModification);

struct RemarkReport {
    VertexSet x;
    /// Position of the last vertex of S in X within the sampled range.
    std::optional<Index> lastMeeting;
    RaySpec tail;
    SeparationCertificate certificate;
    std::string note;
};

RemarkReport remark_tail_check(const Torso& t, const VertexSet& u, const RaySpec& s, const VertexSet& f, const std::vector<Index>& depths, Index reps);

/// The ray after position `pos`.
RaySpec tail_after(const RaySpec& s, Index pos);

struct PipelineReport {
    bool tendril = false;
    /// Non-tendril branch.
    std::optional<TailComponent> tail;
    /// Tendril branch: the min cut F in K and its hypothesis certificate.
    VertexSet f;
    SeparationCertificate hypothesis;
    VertexSet separator;
    SeparationCertificate certificate;
    /// "separated", "not-separated" or "U meets W".
    std::string status;
};

PipelineReport faithfulness_pipeline(const Torso& t, const VertexSet& u, const RaySpec& s, const std::vector<Index>& depths, Index reps);

/// key=value lines, keys prefixed with `prefix`.
std::string report(const SeparationCertificate& c, const std::string& prefix = "");
std::string report(const LemmaReport& r);
std::string report(const RemarkReport& r);
std::string report(const PipelineReport& r);

} // namespace domtorso
