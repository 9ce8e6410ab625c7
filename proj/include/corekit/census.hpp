#ifndef COREKIT_CENSUS_HPP
#define COREKIT_CENSUS_HPP

#include <string>
#include <vector>

#include "corekit/multigraph.hpp"
#include "corekit/rational.hpp"

namespace corekit {

// Exact weighted census of cubic multigraphs on [2n] with 3n edges, built by
// enumerating all perfect matchings of the 6n half-edges (3 per vertex). A
// multigraph H is produced by exactly weight(H) * 6^{2n} pairings, so census
// weights are exact rationals.
struct CensusFilter {
    bool connected = false;
    bool planar = false;

    static CensusFilter parse(const std::string& csv);  // "connected,planar"
    std::string to_string() const;
};

struct CensusRecord {
    std::vector<std::pair<int, int>> edges;  // canonical sorted endpoint pairs
    Rational graph_weight;
    long long pairings = 0;
    bool connected = false;
    bool planar = false;
};

struct ClassCensus {
    int two_n = 0;
    CensusFilter filter;
    Rational total_weight;          // sum of weights over accepted graphs
    long long accepted_pairings = 0;
    long long total_pairings = 0;   // (6n-1)!!
    std::vector<CensusRecord> records;  // accepted graphs only

    Multigraph graph_of(const CensusRecord& r) const;
};

// two_n must be even and <= 6 (the pairing count at 6 is 17!! ~ 3.4e7).
// Enumeration partitions by the first pair choice; partitions run on
// `threads` workers (0 = hardware concurrency) and reduce deterministically.
ClassCensus census(int two_n, CensusFilter filter = {}, int threads = 0);

// Exact identity behind the linear-loops phenomenon, over all cubic
// multigraphs: with a_n the total weight of the class on [2n],
//   P(loop at a fixed vertex) = (2n-1) a_{n-1} (3(n-1)/2 + 1/4) / a_n.
// Verified by computing both sides from exhaustive censuses.
struct LoopIdentityReport {
    int two_n = 0;
    Rational loop_weight;       // total weight of graphs with a loop at vertex 1
    Rational a_n, a_n_minus_1;  // census totals
    Rational lhs, rhs;          // both sides as probabilities
    bool equal = false;
};

LoopIdentityReport verify_loop_identity(int two_n, int threads = 0);

// Exact bridge-number identity over connected cubic multigraphs: the total
// weight of graphs with b(1,2) >= 2f+1 equals
//   sum_{j+k=n-1, j,k>=f} C(2n-2, 2j) m_j m_k (3j)(3k)
// with m_i the connected census totals.
struct BridgeIdentityReport {
    int two_n = 0;
    long long f = 0;
    Rational lhs;  // from the census with the bridge filter
    Rational rhs;  // from smaller censuses
    bool equal = false;
};

BridgeIdentityReport verify_bridge_identity(int two_n, long long f, int threads = 0);

// One-step subdivision and loop-insertion counting identities for an
// arbitrary multigraph h on [n]:
//   total weight of distinct one-edge subdivisions  = w(h) e(h)
//   total weight of distinct loop insertions        = w(h) e(h) / 2
struct SubdivisionIdentityReport {
    Rational subdivision_total, subdivision_expected;
    Rational loop_insertion_total, loop_insertion_expected;
    bool subdivision_ok = false;
    bool loop_insertion_ok = false;
    bool all_ok() const { return subdivision_ok && loop_insertion_ok; }
};

SubdivisionIdentityReport verify_subdivision_identities(const Multigraph& h);

}  // namespace corekit

#endif
