#ifndef COREKIT_MULTIGRAPH_HPP
#define COREKIT_MULTIGRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "corekit/rational.hpp"

namespace corekit {

// Compensation weight: 2^{-L} * prod_i (i!)^{-(#i-loop vertices + #i-fold pairs)}.
// Equals 1 exactly for simple graphs and makes half-edge pairing counts exact:
// a multigraph H arises from weight(H) * prod_v deg(v)! pairings.
using Weight = Rational;

struct EdgeRec {
    int id;
    int u;
    int v;  // loop iff u == v
};

// Labelled undirected multigraph on vertices 1..n with loops and parallel
// edges. Edge ids are dense integers assigned in insertion order and never
// reused within one graph value; a subdivision retires one id and creates two
// fresh ones. Library operations treat graphs as immutable values and return
// edited copies, so values are safe to share across threads.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int n) : n_(n) {}

    int vertex_count() const { return n_; }
    int edge_count() const { return (int)edges_.size(); }
    const std::vector<EdgeRec>& edges() const { return edges_; }

    int add_vertex() { return ++n_; }

    int add_edge(int u, int v);
    bool has_edge_id(int id) const;
    const EdgeRec& edge_by_id(int id) const;

    long long loop_count() const;
    std::vector<int> degree_sequence() const;  // a loop adds 2 to its endpoint
    bool is_simple() const;

    // Replace edge uv by u-(n+1) and (n+1)-v; a loop vv becomes a parallel
    // pair. new_label must be n+1.
    Multigraph subdivide_edge(int edge_id, int new_label) const;

    // Sorted multiset of (min,max) endpoint pairs; the canonical form used to
    // compare labelled multigraphs.
    std::vector<std::pair<int, int>> canonical_edges() const;

    bool same_graph_as(const Multigraph& other) const {
        return n_ == other.n_ && canonical_edges() == other.canonical_edges();
    }

    // Text format: first line "n m", then one "u v" line per edge in edge-id
    // order; loops as "v v". Round-trips bit-exactly.
    std::string to_text() const;
    static Multigraph from_text(const std::string& text);

private:
    int n_ = 0;
    int next_id_ = 0;
    std::vector<EdgeRec> edges_;
};

Weight weight(const Multigraph& g);

// Adjacency as (neighbour, edge id) lists, loops listed once under their
// vertex. Shared helper for the traversal-based algorithms.
std::vector<std::vector<std::pair<int, int>>> adjacency(const Multigraph& g);

std::vector<int> component_of(const Multigraph& g);  // 0-based component index per vertex
bool is_connected(const Multigraph& g);

// Apply a vertex relabelling perm (perm[old-1] = new label).
Multigraph relabel(const Multigraph& g, const std::vector<int>& perm);

}  // namespace corekit

#endif
