#pragma once

#include "domtorso/presentation.hpp"
#include "domtorso/ray.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace domtorso {

std::uint64_t splitmix64(std::uint64_t x);

/// mt19937_64 with bounded draws done by rejection, so streams do not depend
/// on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed)
        : engine_(seed)
    {
    }

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    template <typename T>
    const T& pick(const std::vector<T>& xs)
    {
        return xs[below(xs.size())];
    }

private:
    std::mt19937_64 engine_;
};

/// Independent per-trial stream.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

struct GeneratedInstance {
    GraphPresentation presentation;
    RaySpec ray;
    VertexSet u;
    std::string motif;
};

/// A presentation whose host families and multiplicities are all finite.
GraphPresentation random_finite_presentation(Rng& rng);

/// A presentation over an infinite spine X, with indexed ladders, replicated
/// fans (one of infinite multiplicity with probability 1/2) and sometimes the
/// ladder-plus-fan motif.
GraphPresentation random_presentation(Rng& rng);

/// A tendril of `p` built from the spine templates, or nothing.
std::optional<RaySpec> random_tendril(Rng& rng, const GraphPresentation& p);

/// Presentation, tendril and U; nothing when no tendril could be built.
std::optional<GeneratedInstance> random_instance(Rng& rng);

} // namespace domtorso
