#include "corekit/census.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "corekit/corelab.hpp"
#include "corekit/decompose.hpp"
#include "corekit/planarity.hpp"

namespace corekit {

CensusFilter CensusFilter::parse(const std::string& csv) {
    CensusFilter f;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (item == "connected")
            f.connected = true;
        else if (item == "planar")
            f.planar = true;
        else
            throw std::invalid_argument("unknown census filter: " + item);
    }
    return f;
}

std::string CensusFilter::to_string() const {
    std::string s;
    if (connected) s += "connected";
    if (planar) s += (s.empty() ? "planar" : ",planar");
    return s;
}

Multigraph ClassCensus::graph_of(const CensusRecord& r) const {
    Multigraph g(two_n);
    for (auto [u, v] : r.edges) g.add_edge(u, v);
    return g;
}

namespace {

// A pairing of 6n half-edges maps to the edge multiset of a cubic multigraph
// on labels 1..2n (vertex of half-edge h is h/3 + 1). With 2n <= 6 an edge
// packs into 6 bits and a whole graph into one uint64 key.
struct PairingEnumerator {
    int half_edges;
    std::vector<std::uint8_t> matched;
    std::vector<std::uint8_t> codes;  // edge codes of the partial matching
    std::unordered_map<std::uint64_t, long long>* sink = nullptr;

    explicit PairingEnumerator(int six_n) : half_edges(six_n) {
        matched.assign((std::size_t)half_edges, 0);
    }

    static std::uint8_t edge_code(int a, int b) {
        int u = a / 3 + 1, v = b / 3 + 1;
        if (u > v) std::swap(u, v);
        return (std::uint8_t)((u << 3) | v);
    }

    std::uint64_t key_of_codes() {
        std::uint8_t tmp[9];
        int m = (int)codes.size();
        for (int i = 0; i < m; ++i) tmp[i] = codes[(std::size_t)i];
        std::sort(tmp, tmp + m);
        std::uint64_t key = 0;
        for (int i = 0; i < m; ++i) key = (key << 6) | tmp[i];
        return key;
    }

    void recurse() {
        int first = -1;
        for (int h = 0; h < half_edges; ++h)
            if (!matched[(std::size_t)h]) { first = h; break; }
        if (first < 0) {
            (*sink)[key_of_codes()]++;
            return;
        }
        matched[(std::size_t)first] = 1;
        for (int h = first + 1; h < half_edges; ++h) {
            if (matched[(std::size_t)h]) continue;
            matched[(std::size_t)h] = 1;
            codes.push_back(edge_code(first, h));
            recurse();
            codes.pop_back();
            matched[(std::size_t)h] = 0;
        }
        matched[(std::size_t)first] = 0;
    }

    // Enumerate the partition where half-edge 0 pairs with `partner`.
    void run_partition(int partner, std::unordered_map<std::uint64_t, long long>& out) {
        sink = &out;
        matched[0] = 1;
        matched[(std::size_t)partner] = 1;
        codes.push_back(edge_code(0, partner));
        recurse();
        codes.pop_back();
        matched[0] = 0;
        matched[(std::size_t)partner] = 0;
    }
};

std::vector<std::pair<int, int>> decode_key(std::uint64_t key, int edges) {
    std::vector<std::pair<int, int>> out((std::size_t)edges);
    for (int i = edges - 1; i >= 0; --i) {
        int code = (int)(key & 0x3F);
        key >>= 6;
        out[(std::size_t)i] = {code >> 3, code & 7};
    }
    return out;
}

}  // namespace

ClassCensus census(int two_n, CensusFilter filter, int threads) {
    if (two_n < 2 || two_n > 6 || two_n % 2 != 0)
        throw std::invalid_argument("census: two_n must be 2, 4, or 6");
    int six_n = 3 * two_n;

    if (threads <= 0) threads = (int)std::thread::hardware_concurrency();
    if (threads < 1) threads = 1;
    int partitions = six_n - 1;
    threads = std::min(threads, partitions);

    // One map per partition, merged in partner order so the result is
    // independent of scheduling.
    std::vector<std::unordered_map<std::uint64_t, long long>> maps((std::size_t)partitions);
    std::vector<std::thread> pool;
    std::size_t next_partition = 0;
    std::mutex mtx;
    std::exception_ptr failure;
    auto worker = [&]() {
        for (;;) {
            std::size_t p;
            {
                std::lock_guard<std::mutex> lock(mtx);
                if (failure || next_partition >= (std::size_t)partitions) return;
                p = next_partition++;
            }
            try {
                PairingEnumerator en(six_n);
                en.run_partition((int)p + 1, maps[p]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mtx);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::map<std::uint64_t, long long> merged;  // ordered: deterministic output
    for (auto& m : maps)
        for (auto [key, cnt] : m) merged[key] += cnt;

    ClassCensus out;
    out.two_n = two_n;
    out.filter = filter;
    out.total_pairings = double_factorial_odd(six_n / 2);
    out.total_weight = Rational(0);

    long long check_total = 0;
    for (auto [key, cnt] : merged) {
        check_total += cnt;
        CensusRecord rec;
        rec.edges = decode_key(key, six_n / 2);
        rec.pairings = cnt;
        Multigraph g(two_n);
        for (auto [u, v] : rec.edges) g.add_edge(u, v);
        rec.graph_weight = weight(g);
        rec.connected = is_connected(g);
        rec.planar = is_planar(g).planar;
        if (filter.connected && !rec.connected) continue;
        if (filter.planar && !rec.planar) continue;
        out.accepted_pairings += cnt;
        out.total_weight += rec.graph_weight;
        out.records.push_back(std::move(rec));
    }
    if (check_total != out.total_pairings)
        throw std::logic_error("census: pairing enumeration lost matchings");
    return out;
}

LoopIdentityReport verify_loop_identity(int two_n, int threads) {
    if (two_n != 4 && two_n != 6)
        throw std::invalid_argument("verify_loop_identity: two_n must be 4 or 6");
    long long n = two_n / 2;

    auto full = census(two_n, {}, threads);
    auto smaller = census(two_n - 2, {}, threads);

    LoopIdentityReport rep;
    rep.two_n = two_n;
    rep.a_n = full.total_weight;
    rep.a_n_minus_1 = smaller.total_weight;
    rep.loop_weight = Rational(0);
    for (const auto& rec : full.records) {
        for (auto [u, v] : rec.edges) {
            if (u == 1 && v == 1) {
                rep.loop_weight += rec.graph_weight;
                break;
            }
        }
    }
    rep.lhs = rep.loop_weight / rep.a_n;
    rep.rhs = Rational(2 * n - 1) * rep.a_n_minus_1 *
              (Rational(3 * (n - 1), 2) + Rational(1, 4)) / rep.a_n;
    rep.equal = (rep.lhs == rep.rhs);
    return rep;
}

BridgeIdentityReport verify_bridge_identity(int two_n, long long f, int threads) {
    if (two_n < 4 || two_n > 6 || two_n % 2 != 0)
        throw std::invalid_argument("verify_bridge_identity: two_n must be 4 or 6");
    long long n = two_n / 2;

    BridgeIdentityReport rep;
    rep.two_n = two_n;
    rep.f = f;

    auto connected = census(two_n, {.connected = true}, threads);
    rep.lhs = Rational(0);
    for (const auto& rec : connected.records) {
        Multigraph g = connected.graph_of(rec);
        if (bridge_number(g, 1, 2) >= 2 * f + 1) rep.lhs += rec.graph_weight;
    }

    std::vector<Rational> m((std::size_t)n, Rational(0));  // m[j] = |connected class on 2j|
    for (long long j = 1; j <= n - 1; ++j)
        m[(std::size_t)j] = census((int)(2 * j), {.connected = true}, threads).total_weight;

    rep.rhs = Rational(0);
    for (long long j = f; j <= n - 1 - f; ++j) {
        long long k = n - 1 - j;
        rep.rhs += Rational(binomial(2 * n - 2, 2 * j)) * m[(std::size_t)j] *
                   m[(std::size_t)k] * Rational(3 * j) * Rational(3 * k);
    }
    rep.equal = (rep.lhs == rep.rhs);
    return rep;
}

SubdivisionIdentityReport verify_subdivision_identities(const Multigraph& h) {
    SubdivisionIdentityReport rep;
    Rational wh = weight(h);
    Rational eh((long long)h.edge_count());
    rep.subdivision_expected = wh * eh;
    rep.loop_insertion_expected = wh * eh / Rational(2);

    // Distinct results only: subdividing two edges of the same parallel class
    // yields the same labelled graph.
    std::set<std::vector<std::pair<int, int>>> seen_sub;
    rep.subdivision_total = Rational(0);
    for (const auto& e : h.edges()) {
        Multigraph s = h.subdivide_edge(e.id, h.vertex_count() + 1);
        if (seen_sub.insert(s.canonical_edges()).second)
            rep.subdivision_total += weight(s);
    }

    std::set<std::vector<std::pair<int, int>>> seen_loop;
    rep.loop_insertion_total = Rational(0);
    for (const auto& e : h.edges()) {
        Multigraph s = loop_insertion(h, e.id);
        if (seen_loop.insert(s.canonical_edges()).second)
            rep.loop_insertion_total += weight(s);
    }

    rep.subdivision_ok = (rep.subdivision_total == rep.subdivision_expected);
    rep.loop_insertion_ok = (rep.loop_insertion_total == rep.loop_insertion_expected);
    return rep;
}

}  // namespace corekit
