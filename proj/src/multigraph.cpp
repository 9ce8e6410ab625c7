#include "corekit/multigraph.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace corekit {

int Multigraph::add_edge(int u, int v) {
    if (u < 1 || u > n_ || v < 1 || v > n_)
        throw std::invalid_argument("add_edge: endpoint out of range");
    int id = next_id_++;
    edges_.push_back({id, u, v});
    return id;
}

bool Multigraph::has_edge_id(int id) const {
    for (const auto& e : edges_)
        if (e.id == id) return true;
    return false;
}

const EdgeRec& Multigraph::edge_by_id(int id) const {
    for (const auto& e : edges_)
        if (e.id == id) return e;
    throw std::invalid_argument("edge_by_id: unknown edge id");
}

long long Multigraph::loop_count() const {
    long long loops = 0;
    for (const auto& e : edges_)
        if (e.u == e.v) ++loops;
    return loops;
}

std::vector<int> Multigraph::degree_sequence() const {
    std::vector<int> deg(n_, 0);
    for (const auto& e : edges_) {
        deg[e.u - 1]++;
        deg[e.v - 1]++;
    }
    return deg;
}

bool Multigraph::is_simple() const {
    std::vector<std::pair<int, int>> seen;
    seen.reserve(edges_.size());
    for (const auto& e : edges_) {
        if (e.u == e.v) return false;
        seen.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

Multigraph Multigraph::subdivide_edge(int edge_id, int new_label) const {
    if (new_label != n_ + 1)
        throw std::invalid_argument("subdivide_edge: new label must be n+1");
    const EdgeRec* target = nullptr;
    for (const auto& e : edges_)
        if (e.id == edge_id) { target = &e; break; }
    if (!target) throw std::invalid_argument("subdivide_edge: unknown edge id");

    Multigraph out;
    out.n_ = n_ + 1;
    out.next_id_ = next_id_;
    out.edges_.reserve(edges_.size() + 1);
    for (const auto& e : edges_)
        if (e.id != edge_id) out.edges_.push_back(e);
    out.edges_.push_back({out.next_id_++, target->u, new_label});
    out.edges_.push_back({out.next_id_++, new_label, target->v});
    return out;
}

std::vector<std::pair<int, int>> Multigraph::canonical_edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_)
        out.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(out.begin(), out.end());
    return out;
}

std::string Multigraph::to_text() const {
    std::ostringstream os;
    os << n_ << ' ' << edges_.size() << '\n';
    for (const auto& e : edges_) os << e.u << ' ' << e.v << '\n';
    return os.str();
}

Multigraph Multigraph::from_text(const std::string& text) {
    std::istringstream is(text);
    int n = 0;
    long long m = 0;
    if (!(is >> n >> m)) throw std::invalid_argument("from_text: bad header");
    Multigraph g(n);
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(is >> u >> v)) throw std::invalid_argument("from_text: truncated edge list");
        g.add_edge(u, v);
    }
    return g;
}

Weight weight(const Multigraph& g) {
    std::map<int, int> loops_at;                  // vertex -> loop count
    std::map<std::pair<int, int>, int> between;   // unordered pair -> multiplicity
    for (const auto& e : g.edges()) {
        if (e.u == e.v)
            loops_at[e.u]++;
        else
            between[{std::min(e.u, e.v), std::max(e.u, e.v)}]++;
    }
    Rational w(1);
    for (const auto& [v, l] : loops_at) {
        (void)v;
        long long f = 1;
        for (int i = 2; i <= l; ++i) f *= i;  // l!
        for (int i = 0; i < l; ++i) f *= 2;   // 2^l
        w = w / Rational(f);
    }
    for (const auto& [pair, mult] : between) {
        (void)pair;
        long long f = 1;
        for (int i = 2; i <= mult; ++i) f *= i;
        w = w / Rational(f);
    }
    return w;
}

std::vector<std::vector<std::pair<int, int>>> adjacency(const Multigraph& g) {
    std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count());
    for (const auto& e : g.edges()) {
        if (e.u == e.v) {
            adj[e.u - 1].emplace_back(e.v, e.id);
        } else {
            adj[e.u - 1].emplace_back(e.v, e.id);
            adj[e.v - 1].emplace_back(e.u, e.id);
        }
    }
    return adj;
}

std::vector<int> component_of(const Multigraph& g) {
    auto adj = adjacency(g);
    std::vector<int> comp(g.vertex_count(), -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, id] : adj[v]) {
                (void)id;
                if (comp[w - 1] == -1) {
                    comp[w - 1] = next;
                    stack.push_back(w - 1);
                }
            }
        }
        ++next;
    }
    return comp;
}

bool is_connected(const Multigraph& g) {
    if (g.vertex_count() <= 1) return true;
    auto comp = component_of(g);
    for (int c : comp)
        if (c != 0) return false;
    return true;
}

Multigraph relabel(const Multigraph& g, const std::vector<int>& perm) {
    if ((int)perm.size() != g.vertex_count())
        throw std::invalid_argument("relabel: permutation size mismatch");
    Multigraph out(g.vertex_count());
    for (const auto& e : g.edges()) out.add_edge(perm[e.u - 1], perm[e.v - 1]);
    return out;
}

}  // namespace corekit
