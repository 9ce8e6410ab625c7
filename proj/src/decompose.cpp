#include "corekit/decompose.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace corekit {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

struct ComponentStats {
    std::vector<int> comp;       // 0-based component index per vertex
    std::vector<long long> vertices;
    std::vector<long long> edges;
};

ComponentStats component_stats(const Multigraph& g) {
    ComponentStats st;
    st.comp = component_of(g);
    int nc = 0;
    for (int c : st.comp) nc = std::max(nc, c + 1);
    st.vertices.assign(nc, 0);
    st.edges.assign(nc, 0);
    for (int v = 0; v < g.vertex_count(); ++v) st.vertices[st.comp[v]]++;
    for (const auto& e : g.edges()) st.edges[st.comp[e.u - 1]]++;
    return st;
}

}  // namespace

std::vector<int> complex_part(const Multigraph& g) {
    auto st = component_stats(g);
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int c = st.comp[v];
        if (st.edges[c] >= st.vertices[c] + 1) out.push_back(v + 1);
    }
    return out;
}

CoreDecomposition core_kernel(const Multigraph& g) {
    CoreDecomposition d;
    d.complex_vertices = complex_part(g);

    std::vector<char> in_complex(g.vertex_count() + 1, 0);
    for (int v : d.complex_vertices) in_complex[v] = 1;

    // Peel degree <= 1 vertices inside the complex part.
    auto adj = adjacency(g);
    std::vector<char> edge_alive(g.edges().size(), 0);
    std::vector<int> edge_pos(g.edges().size());
    std::vector<std::vector<std::pair<int, int>>> inc(g.vertex_count());  // (edge pos, other vertex)
    std::vector<int> deg(g.vertex_count(), 0);
    for (int i = 0; i < (int)g.edges().size(); ++i) {
        const auto& e = g.edges()[i];
        if (!in_complex[e.u]) continue;  // complex components contain whole edges
        edge_alive[i] = 1;
        inc[e.u - 1].emplace_back(i, e.v);
        deg[e.u - 1] += (e.u == e.v) ? 2 : 1;
        if (e.u != e.v) {
            inc[e.v - 1].emplace_back(i, e.u);
            deg[e.v - 1]++;
        }
    }
    std::vector<char> removed(g.vertex_count(), 0);
    std::vector<int> stack;
    for (int v : d.complex_vertices)
        if (deg[v - 1] <= 1) stack.push_back(v - 1);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (removed[v] || deg[v] > 1) continue;
        removed[v] = 1;
        for (auto [pos, other] : inc[v]) {
            if (!edge_alive[pos]) continue;
            edge_alive[pos] = 0;
            int o = other - 1;
            deg[v]--;
            if (o != v) {
                deg[o]--;
                if (!removed[o] && deg[o] <= 1) stack.push_back(o);
            } else {
                deg[v]--;
            }
        }
    }

    // Compact core labels in ascending original-label order.
    std::vector<int> core_label(g.vertex_count() + 1, 0);
    for (int v : d.complex_vertices) {
        if (!removed[v - 1]) {
            d.core_to_orig.push_back(v);
            core_label[v] = (int)d.core_to_orig.size();
        }
    }
    d.core = Multigraph((int)d.core_to_orig.size());
    std::vector<int> core_edge_from(g.edges().size(), -1);
    for (int i = 0; i < (int)g.edges().size(); ++i) {
        if (!edge_alive[i]) continue;
        const auto& e = g.edges()[i];
        core_edge_from[i] = d.core.add_edge(core_label[e.u], core_label[e.v]);
    }

    if (d.core.vertex_count() == 0) {
        d.kernel = Multigraph(0);
        d.subdivision_number = 0;
        return d;
    }

    // Contract maximal degree-2 chains of the core.
    auto cadj = adjacency(d.core);
    auto cdeg = d.core.degree_sequence();
    std::vector<int> kernel_label(d.core.vertex_count() + 1, 0);
    for (int v = 1; v <= d.core.vertex_count(); ++v) {
        if (cdeg[v - 1] >= 3) {
            d.kernel_to_core.push_back(v);
            kernel_label[v] = (int)d.kernel_to_core.size();
        }
    }
    // The core of a complex component always has a branch vertex; an isolated
    // cycle would mean excess 0.
    assert(!d.kernel_to_core.empty());

    d.kernel = Multigraph((int)d.kernel_to_core.size());
    std::vector<char> used(d.core.edges().size(), 0);
    for (int b : d.kernel_to_core) {
        for (auto [first_to, first_id] : cadj[b - 1]) {
            if (used[first_id]) continue;
            if (first_to == b) {  // loop at a branch vertex stays a kernel loop
                used[first_id] = 1;
                d.kernel.add_edge(kernel_label[b], kernel_label[b]);
                d.counts.push_back(0);
                continue;
            }
            used[first_id] = 1;
            int prev_edge = first_id;
            int cur = first_to;
            long long internal = 0;
            while (cdeg[cur - 1] == 2) {
                ++internal;
                int next_edge = -1, next_to = -1;
                for (auto [to, id] : cadj[cur - 1]) {
                    if (id != prev_edge) { next_edge = id; next_to = to; break; }
                }
                assert(next_edge != -1);
                used[next_edge] = 1;
                prev_edge = next_edge;
                cur = next_to;
            }
            d.kernel.add_edge(kernel_label[b], kernel_label[cur]);
            d.counts.push_back(internal);
        }
    }

    d.subdivision_number = 0;
    for (long long c : d.counts) d.subdivision_number += c;
    assert(d.subdivision_number ==
           (long long)d.core.vertex_count() - (long long)d.kernel.vertex_count());
    assert((long long)d.core.edge_count() ==
           (long long)d.kernel.edge_count() + d.subdivision_number);
    return d;
}

Multigraph reconstruct_core(const Multigraph& kernel, const std::vector<long long>& counts) {
    if (counts.size() != kernel.edges().size())
        throw std::invalid_argument("reconstruct_core: counts size mismatch");
    Multigraph core(kernel.vertex_count());
    int next = kernel.vertex_count();
    for (int i = 0; i < (int)kernel.edges().size(); ++i) {
        const auto& e = kernel.edges()[i];
        long long x = counts[i];
        if (x == 0) {
            core.add_edge(e.u, e.v);
            continue;
        }
        int prev = e.u;
        for (long long j = 0; j < x; ++j) {
            int w = ++next;
            core.add_vertex();
            core.add_edge(prev, w);
            prev = w;
        }
        core.add_edge(prev, e.v);
    }
    return core;
}

std::vector<std::tuple<int, int, long long>> canonical_kernel_counts(
    const Multigraph& kernel, const std::vector<long long>& counts) {
    std::vector<std::tuple<int, int, long long>> out;
    for (int i = 0; i < (int)kernel.edges().size(); ++i) {
        const auto& e = kernel.edges()[i];
        out.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v), counts[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string decomposition_to_text(const CoreDecomposition& d) {
    std::ostringstream os;
    os << d.kernel.to_text();
    for (std::size_t i = 0; i < d.counts.size(); ++i)
        os << d.kernel.edges()[i].id << ": " << d.counts[i] << '\n';
    return os.str();
}

std::pair<Multigraph, std::vector<long long>> kernel_counts_from_text(const std::string& text) {
    std::istringstream is(text);
    int n = 0;
    long long m = 0;
    if (!(is >> n >> m)) throw std::invalid_argument("kernel_counts_from_text: bad header");
    Multigraph kernel(n);
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(is >> u >> v))
            throw std::invalid_argument("kernel_counts_from_text: truncated edges");
        kernel.add_edge(u, v);
    }
    std::vector<long long> counts((std::size_t)m, 0);
    for (long long i = 0; i < m; ++i) {
        std::string id_colon;
        long long id, count;
        if (!(is >> id_colon >> count))
            throw std::invalid_argument("kernel_counts_from_text: truncated counts");
        if (id_colon.empty() || id_colon.back() != ':')
            throw std::invalid_argument("kernel_counts_from_text: expected 'id:' token");
        id = std::stoll(id_colon.substr(0, id_colon.size() - 1));
        if (id < 0 || id >= m)
            throw std::invalid_argument("kernel_counts_from_text: edge id out of range");
        counts[(std::size_t)id] = count;
    }
    return {std::move(kernel), std::move(counts)};
}

namespace {

struct BlockFinder {
    const Multigraph& g;
    std::vector<std::vector<std::pair<int, int>>> adj;  // non-loop edges only
    std::vector<int> disc, low;
    std::vector<int> edge_stack;
    int timer = 0;
    BlockSet out;

    explicit BlockFinder(const Multigraph& graph) : g(graph) {
        adj.resize(g.vertex_count());
        for (const auto& e : g.edges()) {
            if (e.u == e.v) {
                out.blocks.push_back({e.id});  // a loop forms a block by itself
                continue;
            }
            adj[e.u - 1].emplace_back(e.v, e.id);
            adj[e.v - 1].emplace_back(e.u, e.id);
        }
        disc.assign(g.vertex_count(), -1);
        low.assign(g.vertex_count(), 0);
    }

    void flush_component(int until_edge) {
        std::vector<int> comp;
        while (true) {
            int id = edge_stack.back();
            edge_stack.pop_back();
            comp.push_back(id);
            if (id == until_edge) break;
        }
        if (comp.size() == 1)
            out.bridge_edge_ids.push_back(comp[0]);  // a bridge is not a block
        else
            out.blocks.push_back(std::move(comp));
    }

    void dfs(int root) {
        // Iterative DFS so deep chains cannot overflow the call stack.
        struct Frame { int v; int parent_edge; std::size_t next; };
        std::vector<Frame> frames;
        disc[root] = low[root] = timer++;
        frames.push_back({root, -1, 0});
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.next < adj[f.v].size()) {
                auto [w, id] = adj[f.v][f.next++];
                if (id == f.parent_edge) continue;
                int wi = w - 1;
                if (disc[wi] == -1) {
                    edge_stack.push_back(id);
                    disc[wi] = low[wi] = timer++;
                    frames.push_back({wi, id, 0});
                } else if (disc[wi] < disc[f.v]) {
                    edge_stack.push_back(id);
                    low[f.v] = std::min(low[f.v], disc[wi]);
                }
            } else {
                int v = f.v;
                int pe = f.parent_edge;
                frames.pop_back();
                if (frames.empty()) break;
                Frame& p = frames.back();
                low[p.v] = std::min(low[p.v], low[v]);
                if (low[v] >= disc[p.v]) flush_component(pe);
            }
        }
    }

    BlockSet run() {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (disc[v] == -1) dfs(v);
        int max_id = 0;
        for (const auto& e : g.edges()) max_id = std::max(max_id, e.id);
        std::vector<std::pair<int, int>> ends((std::size_t)max_id + 1);
        for (const auto& e : g.edges()) ends[(std::size_t)e.id] = {e.u, e.v};
        for (const auto& b : out.blocks) {
            std::vector<int> verts;
            for (int id : b) {
                verts.push_back(ends[(std::size_t)id].first);
                verts.push_back(ends[(std::size_t)id].second);
            }
            std::sort(verts.begin(), verts.end());
            verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
            out.sizes.push_back((int)verts.size());
        }
        // Keep blocks and sizes aligned while sorting by descending order.
        std::vector<int> idx(out.blocks.size());
        for (int i = 0; i < (int)idx.size(); ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(),
                         [&](int a, int b) { return out.sizes[a] > out.sizes[b]; });
        BlockSet sorted;
        sorted.bridge_edge_ids = out.bridge_edge_ids;
        for (int i : idx) {
            sorted.blocks.push_back(std::move(out.blocks[i]));
            sorted.sizes.push_back(out.sizes[i]);
        }
        return sorted;
    }
};

}  // namespace

BlockSet blocks(const Multigraph& g) { return BlockFinder(g).run(); }

long long bridge_number(const Multigraph& g, int w, int x) {
    if (w == x) throw std::invalid_argument("bridge_number: vertices must differ");
    if (w < 1 || w > g.vertex_count() || x < 1 || x > g.vertex_count())
        throw std::invalid_argument("bridge_number: vertex out of range");
    if (!is_connected(g)) throw std::invalid_argument("bridge_number: graph must be connected");

    int instance = -1, instances = 0;
    for (const auto& e : g.edges()) {
        if ((e.u == w && e.v == x) || (e.u == x && e.v == w)) {
            ++instances;
            instance = e.id;
        }
    }
    if (instances != 1) return 0;  // non-edge, or a parallel class (never a bridge)

    auto adj = adjacency(g);
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> stack = {w - 1};
    seen[w - 1] = 1;
    long long reached = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++reached;
        for (auto [to, id] : adj[v]) {
            if (id == instance) continue;
            if (!seen[to - 1]) {
                seen[to - 1] = 1;
                stack.push_back(to - 1);
            }
        }
    }
    if (seen[x - 1]) return 0;
    return std::min(reached, (long long)g.vertex_count() - reached);
}

std::optional<long long> girth_exact(const Multigraph& g) {
    for (const auto& e : g.edges())
        if (e.u == e.v) return 1;
    {
        auto canon = g.canonical_edges();
        if (std::adjacent_find(canon.begin(), canon.end()) != canon.end()) return 2;
    }
    // Simple graph: BFS from every vertex; a non-tree edge (u,w) closes a
    // cycle of length dist[u]+dist[w]+1, and the minimum over all roots is
    // the exact girth.
    int n = g.vertex_count();
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : g.edges()) {
        adj[e.u - 1].push_back(e.v - 1);
        adj[e.v - 1].push_back(e.u - 1);
    }
    long long best = kInf;
    std::vector<long long> dist(n);
    std::vector<int> parent(n);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        queue.push_back(s);
        dist[s] = 0;
        parent[s] = -1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            if (2 * dist[u] >= best) break;
            for (int w : adj[u]) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best >= kInf) return std::nullopt;
    return best;
}

namespace {

// Weighted adjacency over non-loop kernel edges; weight of edge i is counts[i]+1.
struct WeightedKernel {
    int n = 0;
    std::vector<std::vector<std::tuple<int, long long, int>>> adj;  // (to, weight, edge pos)
    std::vector<long long> loop_weights;

    WeightedKernel(const Multigraph& kernel, const std::vector<long long>& counts) {
        if (counts.size() != kernel.edges().size())
            throw std::invalid_argument("kernel counts size mismatch");
        n = kernel.vertex_count();
        adj.resize(n);
        for (int i = 0; i < (int)kernel.edges().size(); ++i) {
            const auto& e = kernel.edges()[i];
            long long w = counts[i] + 1;
            if (e.u == e.v) {
                loop_weights.push_back(w);
            } else {
                adj[e.u - 1].emplace_back(e.v - 1, w, i);
                adj[e.v - 1].emplace_back(e.u - 1, w, i);
            }
        }
    }
};

long long dijkstra_avoiding(const WeightedKernel& wk, int src, int dst, int banned_edge) {
    std::vector<long long> dist(wk.n, kInf);
    using Item = std::pair<long long, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    dist[src] = 0;
    pq.push({0, src});
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (d > dist[v]) continue;
        if (v == dst) return d;
        for (auto [to, w, pos] : wk.adj[v]) {
            if (pos == banned_edge) continue;
            if (d + w < dist[to]) {
                dist[to] = d + w;
                pq.push({d + w, to});
            }
        }
    }
    return dist[dst];
}

}  // namespace

std::optional<long long> girth_via_kernel(const Multigraph& kernel,
                                          const std::vector<long long>& counts) {
    if (kernel.edge_count() == 0) return std::nullopt;
    WeightedKernel wk(kernel, counts);
    long long best = kInf;
    for (long long lw : wk.loop_weights) best = std::min(best, lw);
    for (int i = 0; i < (int)kernel.edges().size(); ++i) {
        const auto& e = kernel.edges()[i];
        if (e.u == e.v) continue;
        long long w = counts[i] + 1;
        if (w >= best) continue;
        long long d = dijkstra_avoiding(wk, e.u - 1, e.v - 1, i);
        if (d < kInf) best = std::min(best, w + d);
    }
    if (best >= kInf) return std::nullopt;
    return best;
}

std::optional<long long> girth_via_kernel(const CoreDecomposition& d) {
    return girth_via_kernel(d.kernel, d.counts);
}

namespace {

// Exhaustive longest-cycle search with branch-and-bound. Cycles are rooted at
// their minimum vertex; the bound charges every edge half to each endpoint,
// so a path can gain at most top2sum/2 per fresh vertex plus one half edge at
// each open end.
struct CircumferenceSearch {
    const WeightedKernel& wk;
    std::vector<char> visited;
    std::vector<char> edge_used;
    std::vector<long long> top2sum;  // sum of two largest incident weights, doubled scale
    std::vector<long long> maxw;
    long long best = 0;
    long long remaining = 0;  // sum of top2sum over unvisited allowed vertices
    int root = 0;

    CircumferenceSearch(const WeightedKernel& k, std::size_t edge_count)
        : wk(k), visited(k.n, 0), edge_used(edge_count, 0), top2sum(k.n, 0), maxw(k.n, 0) {
        for (int v = 0; v < k.n; ++v) {
            long long m1 = 0, m2 = 0;
            for (auto [to, w, pos] : k.adj[v]) {
                (void)to;
                (void)pos;
                if (w >= m1) { m2 = m1; m1 = w; }
                else if (w > m2) m2 = w;
            }
            top2sum[v] = m1 + m2;
            maxw[v] = m1;
        }
    }

    void dfs(int u, long long path_weight) {
        for (auto [to, w, pos] : wk.adj[u]) {
            if (edge_used[pos]) continue;
            if (to == root) {
                best = std::max(best, path_weight + w);
                continue;
            }
            if (to < root || visited[to]) continue;
            if (2 * (path_weight + w) + remaining - top2sum[to] + maxw[to] + maxw[root] <=
                2 * best)
                continue;
            visited[to] = 1;
            edge_used[pos] = 1;
            remaining -= top2sum[to];
            dfs(to, path_weight + w);
            remaining += top2sum[to];
            edge_used[pos] = 0;
            visited[to] = 0;
        }
    }

    long long run() {
        for (root = 0; root < wk.n; ++root) {
            remaining = 0;
            for (int v = root + 1; v < wk.n; ++v) remaining += top2sum[v];
            visited[root] = 1;
            for (auto [to, w, pos] : wk.adj[root]) {
                if (to < root || to == root) continue;
                if (2 * w + remaining - top2sum[to] + maxw[to] + maxw[root] <= 2 * best)
                    continue;
                visited[to] = 1;
                edge_used[pos] = 1;
                remaining -= top2sum[to];
                dfs(to, w);
                remaining += top2sum[to];
                edge_used[pos] = 0;
                visited[to] = 0;
            }
            visited[root] = 0;
        }
        return best;
    }
};

}  // namespace

std::optional<long long> circumference_via_kernel(const Multigraph& kernel,
                                                  const std::vector<long long>& counts,
                                                  int vertex_cap) {
    if (kernel.edge_count() == 0) return std::nullopt;
    if (kernel.vertex_count() > vertex_cap)
        throw std::runtime_error("circumference_via_kernel: kernel exceeds exact-search cap");
    WeightedKernel wk(kernel, counts);
    long long best = 0;
    for (long long lw : wk.loop_weights) best = std::max(best, lw);
    CircumferenceSearch search(wk, kernel.edges().size());
    search.best = best;
    best = search.run();
    if (best == 0) return std::nullopt;
    return best;
}

std::optional<long long> circumference_via_kernel(const CoreDecomposition& d, int vertex_cap) {
    return circumference_via_kernel(d.kernel, d.counts, vertex_cap);
}

long long max_loop_cycle(const Multigraph& kernel, const std::vector<long long>& counts) {
    long long best = -1;
    for (int i = 0; i < (int)kernel.edges().size(); ++i) {
        const auto& e = kernel.edges()[i];
        if (e.u == e.v) best = std::max(best, counts[i] + 1);
    }
    if (best < 0) throw std::domain_error("max_loop_cycle: kernel has no loops");
    return best;
}

long long max_loop_cycle(const CoreDecomposition& d) { return max_loop_cycle(d.kernel, d.counts); }

std::optional<long long> circumference_exact(const Multigraph& g, int vertex_cap) {
    auto st = component_stats(g);
    std::optional<long long> best;

    // Unicyclic components: peel leaves, the survivors form one cycle.
    int nc = (int)st.vertices.size();
    std::vector<char> is_unicyclic(nc, 0);
    bool any_unicyclic = false;
    for (int c = 0; c < nc; ++c) {
        if (st.edges[c] == st.vertices[c]) { is_unicyclic[c] = 1; any_unicyclic = true; }
    }
    if (any_unicyclic) {
        auto adj = adjacency(g);
        std::vector<int> deg(g.vertex_count(), 0);
        for (const auto& e : g.edges()) {
            deg[e.u - 1] += (e.u == e.v) ? 2 : 1;
            if (e.u != e.v) deg[e.v - 1]++;
        }
        std::vector<char> removed(g.vertex_count(), 0);
        std::vector<int> stack;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (is_unicyclic[st.comp[v]] && deg[v] <= 1) stack.push_back(v);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (removed[v] || deg[v] > 1) continue;
            removed[v] = 1;
            for (auto [to, id] : adj[v]) {
                (void)id;
                int o = to - 1;
                if (o == v || removed[o]) continue;
                deg[v]--;
                deg[o]--;
                if (deg[o] <= 1) stack.push_back(o);
            }
        }
        std::vector<long long> cycle_len(nc, 0);
        for (const auto& e : g.edges()) {
            int c = st.comp[e.u - 1];
            if (is_unicyclic[c] && !removed[e.u - 1] && !removed[e.v - 1])
                cycle_len[c]++;
        }
        for (int c = 0; c < nc; ++c)
            if (is_unicyclic[c] && cycle_len[c] > 0)
                best = std::max(best.value_or(0), cycle_len[c]);
    }

    auto d = core_kernel(g);
    if (d.kernel.edge_count() > 0) {
        auto via = circumference_via_kernel(d, vertex_cap);
        if (via) best = std::max(best.value_or(0), *via);
    }
    return best;
}

Multigraph induced_subgraph(const Multigraph& g, const std::vector<int>& vertices) {
    std::vector<int> label(g.vertex_count() + 1, 0);
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < (int)sorted.size(); ++i) label[sorted[i]] = i + 1;
    Multigraph out((int)sorted.size());
    for (const auto& e : g.edges())
        if (label[e.u] && label[e.v]) out.add_edge(label[e.u], label[e.v]);
    return out;
}

std::vector<int> largest_component(const Multigraph& g) {
    auto comp = component_of(g);
    int nc = 0;
    for (int c : comp) nc = std::max(nc, c + 1);
    std::vector<int> size(nc, 0);
    for (int c : comp) size[c]++;
    int best = 0;
    for (int c = 1; c < nc; ++c)
        if (size[c] > size[best]) best = c;
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (comp[v] == best) out.push_back(v + 1);
    return out;
}

}  // namespace corekit
