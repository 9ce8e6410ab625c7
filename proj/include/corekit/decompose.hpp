#ifndef COREKIT_DECOMPOSE_HPP
#define COREKIT_DECOMPOSE_HPP

#include <optional>
#include <tuple>
#include <vector>

#include "corekit/multigraph.hpp"

namespace corekit {

// Complex part / core / kernel of a multigraph.
//
//   complex part: union of components with at least two independent cycles
//                 (edges >= vertices + 1 within the component)
//   core:         maximal subgraph of the complex part with min degree >= 2
//   kernel:       core with maximal degree-2 paths contracted to single edges
//
// counts[i] is the number of suppressed path-interior vertices on kernel edge
// kernel.edges()[i]; the subdivision number S satisfies
// S = v(core) - v(kernel) = sum(counts) and e(core) = e(kernel) + S.
struct CoreDecomposition {
    std::vector<int> complex_vertices;  // original labels, ascending
    Multigraph core;                    // compact labels 1..v(core)
    std::vector<int> core_to_orig;      // core label -> original label (1-based index)
    Multigraph kernel;                  // compact labels 1..v(kernel); min degree >= 3
    std::vector<int> kernel_to_core;    // kernel label -> core label
    std::vector<long long> counts;      // aligned with kernel.edges()
    long long subdivision_number = 0;
};

// Blocks are maximal 2-connected subgraphs plus one singleton block per loop.
// A bridge never forms a block.
struct BlockSet {
    std::vector<std::vector<int>> blocks;  // edge ids per block
    std::vector<int> sizes;                // vertex counts per block, descending
    std::vector<int> bridge_edge_ids;
    int bridge_count() const { return (int)bridge_edge_ids.size(); }
};

std::vector<int> complex_part(const Multigraph& g);

CoreDecomposition core_kernel(const Multigraph& g);

// Expand (kernel, counts) back into a core: kernel vertices keep their labels,
// subdivision vertices are appended per edge in edge order.
Multigraph reconstruct_core(const Multigraph& kernel, const std::vector<long long>& counts);

// Order-free form of a kernel-with-counts, for round-trip comparisons.
std::vector<std::tuple<int, int, long long>> canonical_kernel_counts(
    const Multigraph& kernel, const std::vector<long long>& counts);

// Text form: the kernel in canonical graph text followed by one
// "edge-id: count" line per kernel edge.
std::string decomposition_to_text(const CoreDecomposition& d);
std::pair<Multigraph, std::vector<long long>> kernel_counts_from_text(const std::string& text);

BlockSet blocks(const Multigraph& g);

// min component order of g - wx if wx is a bridge, else 0. Requires g
// connected and w != x.
long long bridge_number(const Multigraph& g, int w, int x);

// Shortest cycle length: 1 with a loop, 2 with a parallel pair, otherwise
// BFS-based search; nullopt for forests.
std::optional<long long> girth_exact(const Multigraph& g);

// Girth of the core expanded from (kernel, counts): every core cycle is a
// kernel cycle Z with length sum_{e in Z} (X_e + 1). Computed by weighted
// shortest-cycle search; equals girth_exact on the reconstructed core.
std::optional<long long> girth_via_kernel(const Multigraph& kernel,
                                          const std::vector<long long>& counts);
std::optional<long long> girth_via_kernel(const CoreDecomposition& d);

// Longest kernel cycle under the same weighting, by exhaustive branch-and-
// bound. Refuses kernels above vertex_cap; callers fall back to
// max_loop_cycle, which is valid at any scale.
std::optional<long long> circumference_via_kernel(const Multigraph& kernel,
                                                  const std::vector<long long>& counts,
                                                  int vertex_cap = 40);
std::optional<long long> circumference_via_kernel(const CoreDecomposition& d,
                                                  int vertex_cap = 40);

// max over loops e of X_e + 1: the exact length of the cycle a subdivided
// loop becomes, hence a certified circumference lower bound.
long long max_loop_cycle(const Multigraph& kernel, const std::vector<long long>& counts);
long long max_loop_cycle(const CoreDecomposition& d);

// Circumference of an arbitrary multigraph: cycles in unicyclic components
// are read off directly, complex components go through the kernel search.
std::optional<long long> circumference_exact(const Multigraph& g, int vertex_cap = 40);

// Compact sub-multigraph induced by the given original labels (ascending
// relabelling); edges keep their relative order.
Multigraph induced_subgraph(const Multigraph& g, const std::vector<int>& vertices);

// Vertex labels of a largest component (ties broken by smallest label).
std::vector<int> largest_component(const Multigraph& g);

}  // namespace corekit

#endif
