#include "corekit/corelab.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "corekit/polya.hpp"
#include "corekit/rng.hpp"

namespace corekit {

namespace {

void require_min_degree_3(const Multigraph& kernel) {
    auto deg = kernel.degree_sequence();
    for (int d : deg)
        if (d < 3) throw std::invalid_argument("kernel must have minimum degree >= 3");
}

}  // namespace

RandomCoreResult random_multicore(const Multigraph& kernel, long long k, std::uint64_t seed) {
    require_min_degree_3(kernel);
    if (k < 0) throw std::invalid_argument("random_multicore: negative k");

    struct Piece { int u, v, kernel_edge; };
    std::vector<Piece> pieces;
    pieces.reserve((std::size_t)(kernel.edge_count() + k));
    for (int i = 0; i < kernel.edge_count(); ++i) {
        const auto& e = kernel.edges()[i];
        pieces.push_back({e.u, e.v, i});
    }

    RandomCoreResult out;
    out.counts.assign((std::size_t)kernel.edge_count(), 0);
    Xoshiro256 rng(seed);
    int next_label = kernel.vertex_count();
    for (long long i = 0; i < k; ++i) {
        std::size_t pick = (std::size_t)rng.bounded(pieces.size());
        Piece p = pieces[pick];
        int w = ++next_label;
        out.counts[(std::size_t)p.kernel_edge]++;
        pieces[pick] = {p.u, w, p.kernel_edge};
        pieces.push_back({w, p.v, p.kernel_edge});
    }

    out.core = Multigraph(next_label);
    for (const auto& p : pieces) out.core.add_edge(p.u, p.v);
    out.simple = out.core.is_simple();
    out.two_simple = true;
    for (long long c : out.counts)
        if (c < 2) { out.two_simple = false; break; }
    return out;
}

std::vector<long long> random_subdivision_counts(const Multigraph& kernel, long long k,
                                                 std::uint64_t seed) {
    require_min_degree_3(kernel);
    std::vector<long long> counts((std::size_t)kernel.edge_count(), 0);
    std::vector<std::uint32_t> balls;
    urn_sample_into(kernel.edge_count(), k, seed, counts, balls);
    return counts;
}

long long min_simple_subdivisions(const Multigraph& kernel) {
    long long need = 0;
    std::map<std::pair<int, int>, long long> mult;
    for (const auto& e : kernel.edges()) {
        if (e.u == e.v)
            need += 2;
        else
            mult[{std::min(e.u, e.v), std::max(e.u, e.v)}]++;
    }
    for (const auto& [pair, m] : mult) {
        (void)pair;
        need += m - 1;
    }
    return need;
}

RandomCoreResult random_core_simple(const Multigraph& kernel, long long k, std::uint64_t seed,
                                    long long max_attempts) {
    if (k < min_simple_subdivisions(kernel))
        throw std::invalid_argument(
            "random_core_simple: k below the minimum for a simple outcome");
    if (max_attempts <= 0) {
        long long n = kernel.edge_count();
        if (k > 2 * n * n)
            max_attempts = 10 * (1 + (2 * n * n + k - 1) / k);
        else
            max_attempts = 10000;
    }
    for (long long attempt = 0; attempt < max_attempts; ++attempt) {
        auto r = random_multicore(kernel, k, derive_seed(seed, (std::uint64_t)attempt));
        if (r.simple) {
            r.attempts = attempt + 1;
            return r;
        }
    }
    throw std::runtime_error("random_core_simple: rejection attempts exhausted");
}

Multigraph loop_insertion(const Multigraph& h, int edge_id) {
    const auto& e = h.edge_by_id(edge_id);
    int y = e.u, z = e.v;
    Multigraph out(h.vertex_count());
    for (const auto& f : h.edges())
        if (f.id != edge_id) out.add_edge(f.u, f.v);
    int x = out.add_vertex();
    int w = out.add_vertex();
    out.add_edge(x, y);
    out.add_edge(x, z);
    out.add_edge(w, x);
    out.add_edge(w, w);
    return out;
}

Multigraph bridge_insertion(const Multigraph& h1, const Multigraph& h2, int e1_id, int e2_id) {
    const auto& e1 = h1.edge_by_id(e1_id);
    const auto& e2 = h2.edge_by_id(e2_id);
    int shift = h1.vertex_count();
    Multigraph out(h1.vertex_count() + h2.vertex_count());
    for (const auto& f : h1.edges())
        if (f.id != e1_id) out.add_edge(f.u, f.v);
    for (const auto& f : h2.edges())
        if (f.id != e2_id) out.add_edge(f.u + shift, f.v + shift);
    int w = out.add_vertex();
    int x = out.add_vertex();
    out.add_edge(w, e1.u);
    out.add_edge(w, e1.v);
    out.add_edge(w, x);
    out.add_edge(x, e2.u + shift);
    out.add_edge(x, e2.v + shift);
    return out;
}

KernelFamilySpec KernelFamilySpec::parse(const std::string& text) {
    KernelFamilySpec spec;
    std::string name = text;
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        name = text.substr(0, colon);
        spec.size = std::stoi(text.substr(colon + 1));
    }
    if (name == "necklace") {
        spec.family = Family::necklace;
    } else if (name == "chain" || name == "bridge-chain") {
        spec.family = Family::bridge_chain;
        if (colon == std::string::npos) spec.size = 1;
    } else if (name == "theta") {
        spec.family = Family::theta;
        if (colon == std::string::npos) spec.size = 3;
    } else if (name == "figure-eight") {
        spec.family = Family::figure_eight;
        if (colon == std::string::npos) spec.size = 2;
    } else {
        throw std::invalid_argument("unknown kernel family: " + name);
    }
    return spec;
}

std::string KernelFamilySpec::to_string() const {
    switch (family) {
        case Family::necklace: return "necklace:" + std::to_string(size);
        case Family::bridge_chain: return "chain:" + std::to_string(size);
        case Family::theta: return "theta:" + std::to_string(size);
        case Family::figure_eight: return "figure-eight:" + std::to_string(size);
    }
    return "?";
}

namespace {

Multigraph make_k4() {
    Multigraph g(4);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(1, 4);
    g.add_edge(2, 3);
    g.add_edge(2, 4);
    g.add_edge(3, 4);
    return g;
}

int edge_id_between(const Multigraph& g, int u, int v) {
    for (const auto& e : g.edges())
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return e.id;
    throw std::logic_error("edge_id_between: no such edge");
}

}  // namespace

Multigraph kernel_family(const KernelFamilySpec& spec) {
    if (spec.size < 1) throw std::invalid_argument("kernel_family: size must be >= 1");
    switch (spec.family) {
        case KernelFamilySpec::Family::necklace: {
            int L = spec.size;
            Multigraph g(2 * L);
            if (L == 1) {
                g.add_edge(1, 1);
            } else {
                for (int i = 1; i <= L; ++i) g.add_edge(i, i % L + 1);
            }
            for (int i = 1; i <= L; ++i) g.add_edge(i, L + i);
            for (int i = 1; i <= L; ++i) g.add_edge(L + i, L + i);
            return g;
        }
        case KernelFamilySpec::Family::bridge_chain: {
            int b = spec.size;
            Multigraph chain = make_k4();
            // attach K4s left to right, always splicing into an untouched edge
            // of the most recent block
            int spare_u = 3, spare_v = 4;
            for (int i = 0; i < b; ++i) {
                Multigraph next = make_k4();
                int shift = chain.vertex_count();
                chain = bridge_insertion(chain, next, edge_id_between(chain, spare_u, spare_v),
                                         edge_id_between(next, 1, 2));
                spare_u = shift + 3;
                spare_v = shift + 4;
            }
            return chain;
        }
        case KernelFamilySpec::Family::theta: {
            if (spec.size < 3)
                throw std::invalid_argument("theta kernel needs multiplicity >= 3");
            Multigraph g(2);
            for (int i = 0; i < spec.size; ++i) g.add_edge(1, 2);
            return g;
        }
        case KernelFamilySpec::Family::figure_eight: {
            if (spec.size < 2)
                throw std::invalid_argument("figure-eight kernel needs >= 2 loops");
            Multigraph g(1);
            for (int i = 0; i < spec.size; ++i) g.add_edge(1, 1);
            return g;
        }
    }
    throw std::logic_error("kernel_family: unreachable");
}

std::vector<int> bridge_chain_block_sizes(int bridges) {
    if (bridges == 0) return {4};
    std::vector<int> sizes;
    for (int i = 0; i < bridges - 1; ++i) sizes.push_back(6);
    sizes.push_back(5);
    sizes.push_back(5);
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
    return sizes;
}

}  // namespace corekit
