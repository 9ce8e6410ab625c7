#ifndef COREKIT_SAMPLER_HPP
#define COREKIT_SAMPLER_HPP

#include <cstdint>
#include <optional>

#include "corekit/census.hpp"
#include "corekit/multigraph.hpp"

namespace corekit {

// Uniform simple graph on [n] with exactly m edges. Duplicate edges are
// rejected, so every m-subset of pairs is equally likely; when m is above
// half the pair count the complement is sampled instead.
Multigraph gnm_sample(long long n, long long m, std::uint64_t seed);

// Rejection sampling of uniform planar graphs: draw G(n,m) until planar.
// Acceptance stays bounded away from zero in the critical window m ~ n/2 and
// dies in the supercritical regime, so failure plus telemetry is a normal
// outcome there, not an exception.
struct PlanarSampleResult {
    std::optional<Multigraph> graph;
    long long tries = 0;
    long long max_tries = 0;
    bool exhausted() const { return !graph.has_value(); }
};

PlanarSampleResult planar_rejection_sample(long long n, long long m, std::uint64_t seed,
                                           long long max_tries = 1000);

// Configuration-model cubic multigraph on [two_n]: a uniform pairing of the
// 6n half-edges, which hits each multigraph with probability proportional to
// its compensation weight. Optional filters apply by rejection; throws when
// the try budget runs out.
struct CubicSampleResult {
    Multigraph graph;
    long long tries = 1;
};

CubicSampleResult cubic_config_sample(int two_n, CensusFilter filter, std::uint64_t seed,
                                      long long max_tries = 1000000);

}  // namespace corekit

#endif
