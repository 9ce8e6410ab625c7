#include "corekit/sampler.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "corekit/planarity.hpp"
#include "corekit/rng.hpp"

namespace corekit {

namespace {

std::uint64_t pair_key(long long u, long long v, long long n) {
    return (std::uint64_t)u * (std::uint64_t)n + (std::uint64_t)v;
}

// Sample `want` distinct unordered pairs by rejection; keys are u*n+v with
// u < v, returned in acceptance order.
std::vector<std::pair<int, int>> sample_distinct_pairs(long long n, long long want,
                                                       Xoshiro256& rng) {
    std::unordered_set<std::uint64_t> used;
    used.reserve((std::size_t)want * 2);
    std::vector<std::pair<int, int>> out;
    out.reserve((std::size_t)want);
    while ((long long)out.size() < want) {
        long long u = (long long)rng.bounded((std::uint64_t)n);
        long long v = (long long)rng.bounded((std::uint64_t)n);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (used.insert(pair_key(u, v, n)).second)
            out.emplace_back((int)u + 1, (int)v + 1);
    }
    return out;
}

}  // namespace

Multigraph gnm_sample(long long n, long long m, std::uint64_t seed) {
    if (n < 0 || n > 2000000000LL) throw std::invalid_argument("gnm_sample: bad n");
    long long all = n * (n - 1) / 2;
    if (m < 0 || m > all) throw std::out_of_range("gnm_sample: m outside 0..C(n,2)");

    Multigraph g((int)n);
    Xoshiro256 rng(seed);
    if (m == 0) return g;
    if (2 * m <= all) {
        for (auto [u, v] : sample_distinct_pairs(n, m, rng)) g.add_edge(u, v);
        return g;
    }
    // Dense case: pick the complement and add everything else lexicographically.
    auto excluded = sample_distinct_pairs(n, all - m, rng);
    std::unordered_set<std::uint64_t> skip;
    for (auto [u, v] : excluded) skip.insert(pair_key(u - 1, v - 1, n));
    for (long long u = 0; u < n; ++u)
        for (long long v = u + 1; v < n; ++v)
            if (!skip.count(pair_key(u, v, n))) g.add_edge((int)u + 1, (int)v + 1);
    return g;
}

PlanarSampleResult planar_rejection_sample(long long n, long long m, std::uint64_t seed,
                                           long long max_tries) {
    PlanarSampleResult out;
    out.max_tries = max_tries;
    for (long long t = 0; t < max_tries; ++t) {
        Multigraph g = gnm_sample(n, m, derive_seed(seed, (std::uint64_t)t));
        ++out.tries;
        if (is_planar(g).planar) {
            out.graph = std::move(g);
            return out;
        }
    }
    return out;
}

CubicSampleResult cubic_config_sample(int two_n, CensusFilter filter, std::uint64_t seed,
                                      long long max_tries) {
    if (two_n < 2 || two_n % 2 != 0)
        throw std::invalid_argument("cubic_config_sample: two_n must be even and >= 2");
    int half_edges = 3 * two_n;
    std::vector<int> perm((std::size_t)half_edges);
    for (long long t = 0; t < max_tries; ++t) {
        Xoshiro256 rng(derive_seed(seed, (std::uint64_t)t));
        for (int i = 0; i < half_edges; ++i) perm[(std::size_t)i] = i;
        rng.shuffle(perm);
        Multigraph g(two_n);
        for (int i = 0; i < half_edges; i += 2)
            g.add_edge(perm[(std::size_t)i] / 3 + 1, perm[(std::size_t)i + 1] / 3 + 1);
        if (filter.connected && !is_connected(g)) continue;
        if (filter.planar && !is_planar(g).planar) continue;
        return {std::move(g), t + 1};
    }
    throw std::runtime_error("cubic_config_sample: try budget exhausted");
}

}  // namespace corekit
