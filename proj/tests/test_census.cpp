#include <doctest.h>

#include "corekit/census.hpp"
#include "corekit/corelab.hpp"
#include "corekit/decompose.hpp"

using namespace corekit;

TEST_CASE("census at two vertices: 5/12 split into 1/6 + 1/4") {
    auto c = census(2);
    CHECK(c.total_weight == Rational(5, 12));
    CHECK(c.total_pairings == 15);
    CHECK(c.accepted_pairings == 15);
    CHECK(c.records.size() == 2);
    for (const auto& rec : c.records) {
        CHECK(rec.connected);
        // pairing multiplicity = weight * prod deg! = weight * 36
        CHECK(Rational(rec.pairings) == rec.graph_weight * Rational(36));
    }
    auto connected = census(2, {.connected = true});
    CHECK(connected.total_weight == Rational(5, 12));
}

TEST_CASE("census at four vertices: 385/48 = 11!!/6^4") {
    auto c = census(4);
    CHECK(c.total_weight == Rational(385, 48));
    CHECK(c.total_pairings == 10395);
    CHECK(c.total_weight == Rational(10395) / Rational(1296));
    // pairing <-> weight identity on every record; 6^4 = 1296
    Rational sum(0);
    long long pairings = 0;
    for (const auto& rec : c.records) {
        CHECK(Rational(rec.pairings) == rec.graph_weight * Rational(1296));
        sum += rec.graph_weight;
        pairings += rec.pairings;
    }
    CHECK(sum == c.total_weight);
    CHECK(pairings == c.total_pairings);
}

TEST_CASE("census at six vertices: 17!!/6^6, and K33 shows up nonplanar") {
    auto c = census(6);
    CHECK(c.total_weight == Rational(425425, 576));
    CHECK(c.total_pairings == 34459425);
    // the labelled K33 with parts {1,2,3} | {4,5,6} is cubic, simple,
    // connected, and nonplanar; as a simple graph it has weight 1 and
    // therefore exactly 6^6 pairings
    std::vector<std::pair<int, int>> k33;
    for (int u = 1; u <= 3; ++u)
        for (int v = 4; v <= 6; ++v) k33.emplace_back(u, v);
    std::sort(k33.begin(), k33.end());
    bool found = false;
    long long nonplanar_records = 0;
    for (const auto& rec : c.records) {
        if (!rec.planar) ++nonplanar_records;
        if (rec.edges == k33) {
            found = true;
            CHECK(rec.graph_weight == Rational(1));
            CHECK(rec.pairings == 46656);
            CHECK(rec.connected);
            CHECK(!rec.planar);
        }
    }
    CHECK(found);
    CHECK(nonplanar_records >= 10);  // at least the ten labelled K33s
    auto planar6 = census(6, {.planar = true});
    CHECK(planar6.total_weight < c.total_weight);
}

TEST_CASE("loop identity holds exactly at two_n = 6") {
    auto rep = verify_loop_identity(6);
    CHECK(rep.a_n == Rational(425425, 576));
    CHECK(rep.lhs == Rational(3, 17));
    CHECK(rep.rhs == Rational(3, 17));
    CHECK(rep.equal);
}

TEST_CASE("filtered censuses are dominated by the full one") {
    auto all4 = census(4);
    auto planar4 = census(4, {.planar = true});
    auto conn4 = census(4, {.connected = true});
    CHECK(planar4.total_weight <= all4.total_weight);
    CHECK(conn4.total_weight <= all4.total_weight);
    CHECK(planar4.records.size() <= all4.records.size());
    // every cubic multigraph on 4 vertices is planar (K5/K33 need more edges)
    CHECK(planar4.total_weight == all4.total_weight);
    auto both4 = census(4, {.connected = true, .planar = true});
    CHECK(both4.total_weight == conn4.total_weight);
}

TEST_CASE("census caps and validation") {
    CHECK_THROWS_AS(census(8), std::invalid_argument);
    CHECK_THROWS_AS(census(3), std::invalid_argument);
}

TEST_CASE("loop identity at two_n = 4: weight 35/16, probability 3/11") {
    auto rep = verify_loop_identity(4);
    CHECK(rep.loop_weight == Rational(35, 16));
    CHECK(rep.a_n == Rational(385, 48));
    CHECK(rep.a_n_minus_1 == Rational(5, 12));
    CHECK(rep.lhs == Rational(3, 11));
    CHECK(rep.rhs == Rational(3, 11));
    CHECK(rep.equal);
}

TEST_CASE("bridge identity at two_n = 6, f = 1: both sides 75/8") {
    auto rep = verify_bridge_identity(6, 1);
    CHECK(rep.rhs == Rational(75, 8));
    CHECK(rep.lhs == Rational(75, 8));
    CHECK(rep.equal);
}

TEST_CASE("bridge identity with an empty index set is 0 = 0") {
    auto rep = verify_bridge_identity(6, 2);  // j,k >= 2 with j+k = 2 impossible
    CHECK(rep.lhs == Rational(0));
    CHECK(rep.rhs == Rational(0));
    CHECK(rep.equal);
}

TEST_CASE("subdivision identities on single graphs") {
    Multigraph loop(1);
    loop.add_edge(1, 1);
    auto r1 = verify_subdivision_identities(loop);
    CHECK(r1.subdivision_total == Rational(1, 2));
    CHECK(r1.all_ok());

    Multigraph tri(3);
    tri.add_edge(1, 2);
    tri.add_edge(2, 3);
    tri.add_edge(1, 3);
    auto r2 = verify_subdivision_identities(tri);
    CHECK(r2.subdivision_total == Rational(3));
    CHECK(r2.loop_insertion_total == Rational(3, 2));
    CHECK(r2.all_ok());

    Multigraph te = kernel_family({KernelFamilySpec::Family::theta, 3});
    auto r3 = verify_subdivision_identities(te);
    CHECK(r3.subdivision_expected == Rational(1, 2));
    CHECK(r3.all_ok());
}

TEST_CASE("subdivision identities across a small corpus") {
    std::vector<Multigraph> corpus;
    corpus.push_back(kernel_family({KernelFamilySpec::Family::theta, 3}));
    corpus.push_back(kernel_family({KernelFamilySpec::Family::theta, 4}));
    corpus.push_back(kernel_family({KernelFamilySpec::Family::figure_eight, 2}));
    corpus.push_back(kernel_family({KernelFamilySpec::Family::figure_eight, 3}));
    corpus.push_back(kernel_family({KernelFamilySpec::Family::necklace, 1}));
    corpus.push_back(kernel_family({KernelFamilySpec::Family::necklace, 2}));
    {
        Multigraph g(1);
        g.add_edge(1, 1);
        corpus.push_back(g);
    }
    {
        Multigraph g(4);  // K4
        g.add_edge(1, 2);
        g.add_edge(1, 3);
        g.add_edge(1, 4);
        g.add_edge(2, 3);
        g.add_edge(2, 4);
        g.add_edge(3, 4);
        corpus.push_back(g);
    }
    {
        Multigraph g(2);  // loop-edge-loop
        g.add_edge(1, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 2);
        corpus.push_back(g);
    }
    {
        Multigraph g(3);  // mixed: double edge + loop + pendant
        g.add_edge(1, 2);
        g.add_edge(1, 2);
        g.add_edge(2, 2);
        g.add_edge(2, 3);
        corpus.push_back(g);
    }
    CHECK(corpus.size() == 10);
    for (const auto& g : corpus) CHECK(verify_subdivision_identities(g).all_ok());
}

TEST_CASE("census is deterministic across thread counts") {
    auto a = census(4, {}, 1);
    auto b = census(4, {}, 4);
    CHECK(a.total_weight == b.total_weight);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].edges == b.records[i].edges);
        CHECK(a.records[i].pairings == b.records[i].pairings);
    }
}
