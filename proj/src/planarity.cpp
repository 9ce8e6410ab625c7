#include "corekit/planarity.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace corekit {

namespace {

constexpr int kNone = -1;

// Left-right planarity test on a simple graph, following Brandes'
// formulation: a DFS orientation annotated with lowpoints, adjacency sorted
// by nesting depth, then a second DFS maintaining a stack of conflict pairs
// of back-edge intervals. The graph is planar iff no conflict pair ever has
// two non-empty sides that both must stay on one side.
class LeftRight {
public:
    LeftRight(int n, const std::vector<std::pair<int, int>>& edge_list)
        : n_(n), m_((int)edge_list.size()) {
        adj_.resize(n_);
        for (int i = 0; i < m_; ++i) {
            auto [u, v] = edge_list[i];
            adj_[u].emplace_back(v, i);
            adj_[v].emplace_back(u, i);
        }
        height_.assign(n_, kNone);
        parent_edge_.assign(n_, kNone);
        oriented_.assign(m_, 0);
        src_.assign(m_, kNone);
        dst_.assign(m_, kNone);
        lowpt_.assign(m_, 0);
        lowpt2_.assign(m_, 0);
        nesting_.assign(m_, 0);
        ref_.assign(m_, kNone);
        lowpt_edge_.assign(m_, kNone);
        stack_bottom_.assign(m_, 0);
    }

    bool run() {
        if (m_ > 3 * n_ - 6 && n_ >= 3) return false;
        for (int v = 0; v < n_; ++v) {
            if (height_[v] == kNone) {
                height_[v] = 0;
                dfs_orient(v);
            }
        }
        ordered_.resize(n_);
        for (int v = 0; v < n_; ++v) {
            for (auto [to, id] : adj_[v])
                if (oriented_[id] && src_[id] == v) ordered_[v].push_back(id);
            std::stable_sort(ordered_[v].begin(), ordered_[v].end(),
                             [&](int a, int b) { return nesting_[a] < nesting_[b]; });
        }
        for (int v = 0; v < n_; ++v)
            if (parent_edge_[v] == kNone)
                if (!dfs_test(v)) return false;
        return true;
    }

private:
    struct Interval {
        int low = kNone;
        int high = kNone;
        bool empty() const { return low == kNone && high == kNone; }
    };
    struct ConflictPair {
        Interval L, R;
    };

    void dfs_orient(int root) {
        struct Frame { int v; std::size_t next; };
        std::vector<Frame> frames{{root, 0}};
        while (!frames.empty()) {
            Frame& f = frames.back();
            int v = f.v;
            if (f.next < adj_[v].size()) {
                auto [w, id] = adj_[v][f.next++];
                if (oriented_[id]) continue;
                oriented_[id] = 1;
                src_[id] = v;
                dst_[id] = w;
                lowpt_[id] = height_[v];
                lowpt2_[id] = height_[v];
                if (height_[w] == kNone) {  // tree edge
                    parent_edge_[w] = id;
                    height_[w] = height_[v] + 1;
                    frames.push_back({w, 0});
                } else {  // back edge
                    lowpt_[id] = height_[w];
                    finish_edge(id, v);
                }
            } else {
                frames.pop_back();
                int pe = parent_edge_[v];
                if (pe != kNone) finish_edge(pe, src_[pe]);
            }
        }
    }

    // Nesting depth plus lowpoint propagation into the parent edge.
    void finish_edge(int id, int v) {
        nesting_[id] = 2 * lowpt_[id];
        if (lowpt2_[id] < height_[v]) nesting_[id] += 1;  // chordal
        int pe = parent_edge_[v];
        if (pe == kNone || pe == id) return;
        if (lowpt_[id] < lowpt_[pe]) {
            lowpt2_[pe] = std::min(lowpt_[pe], lowpt2_[id]);
            lowpt_[pe] = lowpt_[id];
        } else if (lowpt_[id] > lowpt_[pe]) {
            lowpt2_[pe] = std::min(lowpt2_[pe], lowpt_[id]);
        } else {
            lowpt2_[pe] = std::min(lowpt2_[pe], lowpt2_[id]);
        }
    }

    bool conflicting(const Interval& i, int b) const {
        return !i.empty() && lowpt_[i.high] > lowpt_[b];
    }

    int lowest(const ConflictPair& p) const {
        if (p.L.empty()) return lowpt_[p.R.low];
        if (p.R.empty()) return lowpt_[p.L.low];
        return std::min(lowpt_[p.L.low], lowpt_[p.R.low]);
    }

    bool dfs_test(int root) {
        struct Frame { int v; std::size_t next; };
        std::vector<Frame> frames{{root, 0}};
        while (!frames.empty()) {
            Frame& f = frames.back();
            int v = f.v;
            if (f.next < ordered_[v].size()) {
                int ei = ordered_[v][f.next];
                stack_bottom_[ei] = (int)S_.size();
                if (ei == parent_edge_[dst_[ei]]) {  // tree edge: descend first
                    f.next++;
                    frames.push_back({dst_[ei], 0});
                    continue;
                }
                // back edge
                lowpt_edge_[ei] = ei;
                ConflictPair p;
                p.R = {ei, ei};
                S_.push_back(p);
                f.next++;
                if (!integrate(v, ei)) return false;
            } else {
                frames.pop_back();
                int e = parent_edge_[v];
                if (e != kNone) {
                    int u = src_[e];
                    // leaving v: drop back edges ending at u, record the side
                    // reference of e, then fold e's constraints into u's.
                    trim(u);
                    if (lowpt_[e] < height_[u] && !S_.empty()) {
                        int hl = S_.back().L.high;
                        int hr = S_.back().R.high;
                        if (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr]))
                            ref_[e] = hl;
                        else
                            ref_[e] = hr;
                    }
                    if (!integrate(u, e)) return false;
                }
            }
        }
        return true;
    }

    // After finishing outgoing edge ei of v: if ei has a return edge below v,
    // either it is the leftmost child chain (pass its lowpoint edge up) or its
    // constraints must merge with those of earlier siblings.
    bool integrate(int v, int ei) {
        if (lowpt_[ei] >= height_[v]) return true;  // no return edge
        int e = parent_edge_[v];
        int first = ordered_[v][0];
        if (ei == first) {
            if (e != kNone) lowpt_edge_[e] = lowpt_edge_[ei];
            return true;
        }
        return add_constraints(ei, e);
    }

    bool add_constraints(int ei, int e) {
        ConflictPair P;
        // merge return edges of ei into P.R
        do {
            if (S_.empty()) return false;
            ConflictPair Q = S_.back();
            S_.pop_back();
            if (!Q.L.empty()) std::swap(Q.L, Q.R);
            if (!Q.L.empty()) return false;  // interval on both sides: not planar
            if (e != kNone && lowpt_[Q.R.low] > lowpt_[e]) {  // merge intervals
                if (P.R.empty())
                    P.R.high = Q.R.high;
                else
                    ref_[P.R.low] = Q.R.high;
                P.R.low = Q.R.low;
            } else {  // align
                if (e != kNone) ref_[Q.R.low] = lowpt_edge_[e];
            }
        } while ((int)S_.size() > stack_bottom_[ei]);
        // merge conflicting return edges of earlier siblings into P.L
        while (!S_.empty() &&
               (conflicting(S_.back().L, ei) || conflicting(S_.back().R, ei))) {
            ConflictPair Q = S_.back();
            S_.pop_back();
            if (conflicting(Q.R, ei)) std::swap(Q.L, Q.R);
            if (conflicting(Q.R, ei)) return false;  // not planar
            // merge interval below lowpt(ei) into P.R
            if (P.R.low != kNone) ref_[P.R.low] = Q.R.high;
            if (Q.R.low != kNone) P.R.low = Q.R.low;
            if (P.L.empty())
                P.L.high = Q.L.high;
            else
                ref_[P.L.low] = Q.L.high;
            P.L.low = Q.L.low;
        }
        if (!(P.L.empty() && P.R.empty())) S_.push_back(P);
        return true;
    }

    // Remove back edges that end at u from the top of the stack once u's
    // subtree is done.
    void trim(int u) {
        while (!S_.empty() && lowest(S_.back()) == height_[u]) {
            ConflictPair P = S_.back();
            S_.pop_back();
            (void)P;
        }
        if (S_.empty()) return;
        ConflictPair P = S_.back();
        S_.pop_back();
        while (P.L.high != kNone && dst_[P.L.high] == u) P.L.high = ref_[P.L.high];
        if (P.L.high == kNone && P.L.low != kNone) {
            ref_[P.L.low] = P.R.low;
            P.L.low = kNone;
        }
        while (P.R.high != kNone && dst_[P.R.high] == u) P.R.high = ref_[P.R.high];
        if (P.R.high == kNone && P.R.low != kNone) {
            ref_[P.R.low] = P.L.low;
            P.R.low = kNone;
        }
        if (!(P.L.empty() && P.R.empty())) S_.push_back(P);
    }

    int n_, m_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::vector<std::vector<int>> ordered_;  // outgoing edge ids by nesting depth
    std::vector<int> height_, parent_edge_;
    std::vector<char> oriented_;
    std::vector<int> src_, dst_, lowpt_, lowpt2_, nesting_, ref_, lowpt_edge_, stack_bottom_;
    std::vector<ConflictPair> S_;
};

}  // namespace

PlanarityVerdict is_planar(const Multigraph& g) {
    // Planarity is untouched by loops and parallel edges: test the simple
    // residual only.
    std::vector<std::pair<int, int>> simple;
    simple.reserve(g.edges().size());
    for (const auto& e : g.edges()) {
        if (e.u == e.v) continue;
        simple.emplace_back(std::min(e.u, e.v) - 1, std::max(e.u, e.v) - 1);
    }
    std::sort(simple.begin(), simple.end());
    simple.erase(std::unique(simple.begin(), simple.end()), simple.end());

    int n = g.vertex_count();
    if (n <= 4) return {true};
    if ((long long)simple.size() > 3LL * n - 6) return {false};
    LeftRight lr(n, simple);
    return {lr.run()};
}

}  // namespace corekit
