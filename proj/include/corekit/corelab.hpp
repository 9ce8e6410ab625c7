#ifndef COREKIT_CORELAB_HPP
#define COREKIT_CORELAB_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "corekit/multigraph.hpp"

namespace corekit {

// Result of randomly subdividing a kernel K by k vertices. counts is aligned
// with K.edges(); sum(counts) = k. two_simple means every kernel edge got at
// least two subdivision vertices (which forces the core to be simple).
struct RandomCoreResult {
    Multigraph core;
    std::vector<long long> counts;
    bool simple = false;
    bool two_simple = false;
    long long attempts = 1;  // rejection rounds used (1 for the plain process)
};

// Sequential subdivision process: k times, pick an edge of the current
// multigraph uniformly (an edge of multiplicity r with probability r/m) and
// subdivide it; the i-th new vertex gets label v(K)+i. Requires min degree of
// K at least 3.
RandomCoreResult random_multicore(const Multigraph& kernel, long long k, std::uint64_t seed);

// Counts-only form of the same process (no graph construction); distributed
// identically to the per-edge counts of random_multicore. Uses the urn ball
// list, so it is O(k).
std::vector<long long> random_subdivision_counts(const Multigraph& kernel, long long k,
                                                 std::uint64_t seed);

// Rejection until the outcome is simple; conditioned on that event the result
// is uniform over all cores with kernel K and subdivision number k.
// max_attempts = 0 picks a default cap from the 1 - 2N^2/k failure bound.
RandomCoreResult random_core_simple(const Multigraph& kernel, long long k, std::uint64_t seed,
                                    long long max_attempts = 0);

// Necessary subdivision budget for a simple outcome: two vertices per loop
// and one per surplus parallel edge.
long long min_simple_subdivisions(const Multigraph& kernel);

// Loop insertion at edge yz: V' = V + {x, w} with x = n+1, w = n+2 and
// E' = E - yz + xy + xz + wx + ww. Cubic inputs stay cubic; the weight of a
// simple graph halves.
Multigraph loop_insertion(const Multigraph& h, int edge_id);

// Bridge insertion at e1 of h1 and e2 of h2: h2's labels are shifted by
// v(h1), then w = v(h1)+v(h2)+1 subdivides e1, x = w+1 subdivides e2, and wx
// joins them. wx is a bridge; cubic inputs give cubic output.
Multigraph bridge_insertion(const Multigraph& h1, const Multigraph& h2, int e1_id, int e2_id);

// Deterministic kernel families for experiments; every emitted kernel has
// minimum degree >= 3.
//
//   necklace(L):     cycle v1..vL (L=1 a loop, L=2 a double edge), each vi
//                    bridged to a pendant vertex ui carrying a loop. Cubic,
//                    planar, connected, 2L vertices, 3L edges, L loops.
//   bridge_chain(b): b+1 copies of K4 chained by repeated bridge insertion.
//                    Cubic, planar, connected; block sizes from
//                    bridge_chain_block_sizes.
//   theta(p):        two vertices joined by p >= 3 parallel edges.
//   figure_eight(l): one vertex carrying l >= 2 loops.
struct KernelFamilySpec {
    enum class Family { necklace, bridge_chain, theta, figure_eight };
    Family family = Family::necklace;
    int size = 1;

    static KernelFamilySpec parse(const std::string& text);  // e.g. "necklace:5"
    std::string to_string() const;
};

Multigraph kernel_family(const KernelFamilySpec& spec);

// Block vertex counts the chain generator creates, descending.
std::vector<int> bridge_chain_block_sizes(int bridges);

}  // namespace corekit

#endif
