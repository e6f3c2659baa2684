#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chromind/solver.hpp"
#include "oracles.hpp"

using namespace chromind;
using namespace chromind::testing;

namespace {

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 2) % 5);
    for (int i = 0; i < 5; ++i) g.add_edge(i, 5 + i);
    return g;
}

SolverConfig sieve_cfg(uint64_t seed = 1) {
    SolverConfig cfg;
    cfg.mode = SolveMode::kSieve;
    cfg.seed = seed;
    return cfg;
}

ColoringInstance random_list_instance(SplitRng& rng, int max_n = 8, int max_k = 4) {
    const int n = 3 + static_cast<int>(rng.next_below(static_cast<uint64_t>(max_n) - 2));
    const int max_m = n * (n - 1) / 2;
    const int m = std::min(max_m, n - 1 + static_cast<int>(rng.next_below(5)));
    ColoringInstance inst;
    inst.g = random_connected_graph(n, m, rng);
    inst.k = std::max(inst.g.max_degree(), 2 + static_cast<int>(rng.next_below(max_k - 1)));
    if (inst.k > 63) inst.k = 63;
    inst.lists.resize(inst.g.m());
    for (auto& mask : inst.lists) mask = 1 + rng.next_below((uint64_t{1} << inst.k) - 1);
    return inst;
}

}  // namespace

TEST_CASE("brute-force chromatic index on knowns") {
    CHECK(brute_force_chromatic_index(Graph::cycle(3)) == 3);
    CHECK(brute_force_chromatic_index(Graph::complete(4)) == 3);
    Graph star(6);
    for (int i = 1; i < 6; ++i) star.add_edge(0, i);
    CHECK(brute_force_chromatic_index(star) == 5);
    CHECK(brute_force_chromatic_index(petersen()) == 4);

    std::vector<int> witness;
    CHECK(brute_force_chromatic_index(Graph::complete(4), &witness) == 3);
    CHECK(is_proper_edge_coloring(Graph::complete(4), witness));

    CHECK_THROWS_AS(brute_force_chromatic_index(Graph::complete(8)), std::invalid_argument);
}

TEST_CASE("vizing sanity on the brute oracle") {
    SplitRng rng(1001);
    for (int t = 0; t < 60; ++t) {
        const int n = 3 + static_cast<int>(rng.next_below(5));
        Graph g = random_connected_graph(
            n, std::min(n * (n - 1) / 2, n - 1 + static_cast<int>(rng.next_below(6))), rng);
        if (g.m() > 14) continue;
        const int chi = brute_force_chromatic_index(g);
        CHECK(chi >= g.max_degree());
        CHECK(chi <= g.max_degree() + 1);
    }
}

TEST_CASE("edge coloring on pinned graphs via the sieve") {
    Verdict k4 = edge_coloring(Graph::complete(4), sieve_cfg());
    CHECK(k4.chromatic_index == 3);
    CHECK(k4.cls == 1);
    CHECK(k4.method == "sieve");

    Verdict c5 = edge_coloring(Graph::cycle(5), sieve_cfg());
    CHECK(c5.chromatic_index == 3);
    CHECK(c5.cls == 2);

    Verdict c6 = edge_coloring(Graph::cycle(6), sieve_cfg());
    CHECK(c6.chromatic_index == 2);
    CHECK(c6.cls == 1);

    Verdict pet = edge_coloring(petersen(), sieve_cfg());
    CHECK(pet.chromatic_index == 4);
    CHECK(pet.cls == 2);
    CHECK(pet.evaluations > 0);
}

TEST_CASE("edge coloring agrees with brute force on random graphs") {
    SplitRng rng(1002);
    for (int t = 0; t < 40; ++t) {
        const int n = 4 + static_cast<int>(rng.next_below(5));
        Graph g = random_connected_graph(
            n, std::min(n * (n - 1) / 2, n - 1 + static_cast<int>(rng.next_below(6))), rng);
        if (g.m() > 12) continue;
        const int chi = brute_force_chromatic_index(g);
        Verdict v = edge_coloring(g, sieve_cfg(7 + t));
        CHECK(v.chromatic_index == chi);
    }
}

TEST_CASE("unit-degree peeling preserves the verdict") {
    SplitRng rng(1003);
    for (int t = 0; t < 25; ++t) {
        // Core plus pendant trees; the pipeline peels, brute force does not.
        const int core = 4 + static_cast<int>(rng.next_below(3));
        Graph g = random_connected_graph(core, core + static_cast<int>(rng.next_below(3)), rng);
        const int extra = 1 + static_cast<int>(rng.next_below(4));
        g.n += extra;
        for (int v = g.n - extra; v < g.n; ++v)
            g.add_edge(static_cast<int>(rng.next_below(static_cast<uint64_t>(v))), v);
        if (g.m() > 13) continue;
        const int chi = brute_force_chromatic_index(g);
        Verdict v = edge_coloring(g, sieve_cfg(100 + t));
        CHECK(v.chromatic_index == chi);
    }
}

TEST_CASE("disconnected graphs combine per component") {
    Graph g(8);  // triangle (class 2 for Delta=2) plus C5
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    for (int i = 3; i < 8; ++i) g.add_edge(i, i == 7 ? 3 : i + 1);
    Verdict v = edge_coloring(g, sieve_cfg());
    CHECK(v.delta == 2);
    CHECK(v.chromatic_index == 3);
    CHECK(v.cls == 2);
}

TEST_CASE("list edge coloring pinned instances") {
    ColoringInstance alt;
    alt.g = Graph::cycle(4);
    alt.k = 2;
    alt.lists = {0b01, 0b10, 0b01, 0b10};
    CHECK(list_edge_coloring(alt, sieve_cfg()).yes);

    ColoringInstance clash;
    clash.g = Graph::cycle(4);
    clash.k = 2;
    clash.lists = {0b01, 0b01, 0b01, 0b01};
    CHECK(!list_edge_coloring(clash, sieve_cfg()).yes);

    // Degree above k is trivially NO.
    ColoringInstance deg;
    deg.g = Graph(4);
    deg.g.add_edge(0, 1);
    deg.g.add_edge(0, 2);
    deg.g.add_edge(0, 3);
    deg.k = 2;
    deg.lists = {0b11, 0b11, 0b11};
    Verdict v = list_edge_coloring(deg, sieve_cfg());
    CHECK(!v.yes);
    CHECK(v.method == "trivial");
}

TEST_CASE("list pipeline agrees with the oracle on random instances") {
    SplitRng rng(1004);
    int with_pendants = 0;
    for (int t = 0; t < 60; ++t) {
        ColoringInstance inst = random_list_instance(rng);
        if (inst.g.m() > 13) continue;
        const auto deg = inst.g.degrees();
        if (*std::max_element(deg.begin(), deg.end()) > inst.k) continue;
        const PeelResult peel = peel_unit_degree(inst.g);
        with_pendants += peel.n_deleted() > 0;
        const bool oracle = brute_force_list_colorable(inst);
        Verdict v = list_edge_coloring(inst, sieve_cfg(200 + t));
        CHECK(v.yes == oracle);
    }
    CHECK(with_pendants > 0);
}

TEST_CASE("trees route through the polynomial-time solver") {
    ColoringInstance tree;
    tree.g = Graph::path(5);
    tree.k = 2;
    tree.lists = {0b01, 0b10, 0b01, 0b10};
    Verdict v = list_edge_coloring(tree, sieve_cfg());
    CHECK(v.yes);
    CHECK(v.method == "tree");
    CHECK(v.evaluations == 0);
}

TEST_CASE("vizing fan recoloring") {
    for (const Graph& g : {petersen(), Graph::cycle(5), Graph::complete(4), Graph::complete(6)}) {
        const auto colors = vizing_upper(g);
        CHECK(is_proper_edge_coloring(g, colors));
        for (int c : colors) CHECK(c <= g.max_degree());
    }
    SplitRng rng(1005);
    for (int t = 0; t < 60; ++t) {
        const int n = 4 + static_cast<int>(rng.next_below(8));
        const int max_m = n * (n - 1) / 2;
        Graph g = Graph::random_gnm(n, static_cast<int>(rng.next_below(max_m + 1)), rng);
        const auto colors = vizing_upper(g);
        CHECK(is_proper_edge_coloring(g, colors));
        for (int c : colors) CHECK(c <= g.max_degree());
    }
}

TEST_CASE("regular solver checks the harmonic bound and agrees with brute force") {
    // K5 is 4-regular and class 2; the singleton dominating set beats the
    // harmonic bound, which the solver asserts internally.
    Verdict k5 = edge_coloring_regular(Graph::complete(5), sieve_cfg());
    CHECK(k5.chromatic_index == 5);
    CHECK(k5.cls == 2);
    CHECK(k5.domset_size == 1);

    // alpha_4 = 1 - H_5/5.
    CHECK(k5.alpha_d == doctest::Approx(1.0 - (1 + 0.5 + 1.0 / 3 + 0.25 + 0.2) / 5));

    SplitRng rng(1006);
    for (int t = 0; t < 6; ++t) {
        Graph g = Graph::random_regular(8, 3, rng);
        if (!g.is_connected() || g.m() > 14) continue;
        Verdict v = edge_coloring_regular(g, sieve_cfg(300 + t));
        CHECK(v.chromatic_index == brute_force_chromatic_index(g));
    }
    CHECK_THROWS_AS(edge_coloring_regular(Graph::path(3), sieve_cfg()),
                    std::invalid_argument);
}

TEST_CASE("modes agree and determinism holds") {
    Graph g = Graph::cycle(7);
    Verdict sieve1 = edge_coloring(g, sieve_cfg(42));
    Verdict sieve2 = edge_coloring(g, sieve_cfg(42));
    CHECK(sieve1.chromatic_index == sieve2.chromatic_index);
    CHECK(sieve1.evaluations == sieve2.evaluations);

    SolverConfig ie;
    ie.mode = SolveMode::kIE;
    ie.seed = 42;
    Verdict vie = edge_coloring(g, ie);
    CHECK(vie.chromatic_index == sieve1.chromatic_index);
    CHECK(vie.method == "ie");

    SolverConfig brute;
    brute.mode = SolveMode::kBrute;
    Verdict vb = edge_coloring(g, brute);
    CHECK(vb.chromatic_index == sieve1.chromatic_index);

    SolverConfig jobs = sieve_cfg(42);
    jobs.jobs = 3;
    Verdict vj = edge_coloring(g, jobs);
    CHECK(vj.chromatic_index == sieve1.chromatic_index);
    CHECK(vj.evaluations == sieve1.evaluations);
}

TEST_CASE("one-sidedness: no YES on class-2 instances across seeds") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        SolverConfig cfg = sieve_cfg(seed);
        cfg.trials = 1;  // ten independent sieve runs across the seed loop
        Verdict v = edge_coloring(Graph::cycle(5), cfg);
        CHECK(v.cls == 2);
        Verdict p = edge_coloring(petersen(), cfg);
        CHECK(p.cls == 2);
    }
}
