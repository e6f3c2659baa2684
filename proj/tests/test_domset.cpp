#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chromind/domset.hpp"
#include "oracles.hpp"

using namespace chromind;
using namespace chromind::testing;

TEST_CASE("ore half") {
    Graph star(5);
    for (int i = 1; i < 5; ++i) star.add_edge(0, i);
    DomSetResult r = ore_half(star);
    CHECK(r.vertices == std::vector<int>{0});

    DomSetResult c4 = ore_half(Graph::cycle(4));
    CHECK(c4.size() <= 2);
    CHECK(is_dominating(Graph::cycle(4), c4.vertices));

    Graph k2(2);
    k2.add_edge(0, 1);
    CHECK(ore_half(k2).size() == 1);

    SplitRng rng(601);
    for (int t = 0; t < 100; ++t) {
        const int n = 2 + static_cast<int>(rng.next_below(9));
        Graph g = random_connected_graph(n, std::min(n * (n - 1) / 2, n + static_cast<int>(rng.next_below(5))), rng);
        DomSetResult r2 = ore_half(g);
        CHECK(is_dominating(g, r2.vertices));
        CHECK(r2.size() <= (n + 1) / 2);
    }
}

TEST_CASE("path dominating sets match the endpoint rules") {
    for (int p = 1; p <= 30; ++p) {
        const auto d = path_domset(p);
        CHECK(static_cast<int>(d.size()) == (p + 2) / 3);
        // Domination along the path.
        std::vector<char> covered(p, 0);
        for (int v : d) {
            covered[v] = 1;
            if (v > 0) covered[v - 1] = 1;
            if (v + 1 < p) covered[v + 1] = 1;
        }
        for (int v = 0; v < p; ++v) CHECK(covered[v]);
        const bool has_first = std::find(d.begin(), d.end(), 0) != d.end();
        const bool has_last = std::find(d.begin(), d.end(), p - 1) != d.end();
        if (p % 3 == 1) {
            CHECK(has_first);
            CHECK(has_last);
        } else if (p % 3 == 2) {
            CHECK(has_first != has_last);
        } else {
            CHECK(!has_first);
            CHECK(!has_last);
        }
    }
    CHECK(path_domset(4) == std::vector<int>{0, 3});
    CHECK(path_domset(3) == std::vector<int>{1});
    CHECK(path_domset(5) == std::vector<int>{1, 4});
}

TEST_CASE("exhaustive minimum") {
    CHECK(min_domset_exhaustive(Graph::complete(6)).size() == 1);
    Graph single(1);
    CHECK(min_domset_exhaustive(single).size() == 1);
    CHECK(min_domset_exhaustive(Graph::cycle(4)).size() == 2);
    CHECK(min_domset_exhaustive(Graph::cycle(7)).size() == 3);
    CHECK_THROWS_AS(min_domset_exhaustive(Graph(30)), std::invalid_argument);
}

TEST_CASE("structured equals exhaustive on cycles and petersen") {
    CHECK(min_domset_structured(Graph::cycle(5)).size() == 2);
    CHECK(min_domset_structured(Graph::cycle(6)).size() == 2);

    // Petersen graph: outer 5-cycle, inner 5-star polygon, spokes.
    Graph pet(10);
    for (int i = 0; i < 5; ++i) pet.add_edge(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i) pet.add_edge(5 + i, 5 + (i + 2) % 5);
    for (int i = 0; i < 5; ++i) pet.add_edge(i, 5 + i);
    DomSetResult r = min_domset_structured(pet);
    CHECK(r.size() == 3);
    CHECK(is_dominating(pet, r.vertices));
}

TEST_CASE("structured equals exhaustive on random min-degree-2 graphs") {
    SplitRng rng(602);
    for (int t = 0; t < 100; ++t) {
        const int n = 4 + static_cast<int>(rng.next_below(9));  // 4..12
        Graph g = random_connected_min_degree2(n, rng);
        DomSetResult s = min_domset_structured(g);
        DomSetResult e = min_domset_exhaustive(g);
        CHECK(is_dominating(g, s.vertices));
        CHECK(s.size() == e.size());
    }
}

TEST_CASE("structured rejects bad preconditions") {
    CHECK_THROWS_AS(min_domset_structured(Graph::path(4)), std::invalid_argument);
    Graph disconnected(6);
    disconnected.add_edge(0, 1);
    disconnected.add_edge(1, 2);
    disconnected.add_edge(0, 2);
    disconnected.add_edge(3, 4);
    disconnected.add_edge(4, 5);
    disconnected.add_edge(3, 5);
    CHECK_THROWS_AS(min_domset_structured(disconnected), std::invalid_argument);
}

TEST_CASE("solver dispatcher certifies bounds") {
    SplitRng rng(603);
    for (int t = 0; t < 40; ++t) {
        const int n = 8 + static_cast<int>(rng.next_below(5));
        Graph g = random_connected_min_degree2(n, rng);
        DomSetResult r = domset_for_solver(g);
        CHECK(is_dominating(g, r.vertices));
        CHECK(r.certified_minimum);
        CHECK(5 * r.size() <= 2 * g.n);  // minimum degree two, n >= 8
    }
    DomSetResult ore = domset_for_solver(Graph::cycle(9), DomsetMethod::kOre);
    CHECK(ore.size() <= 5);
    CHECK(!ore.certified_minimum);
}

TEST_CASE("regular graphs meet the harmonic bound") {
    SplitRng rng(604);
    for (int d = 3; d <= 6; ++d) {
        for (int t = 0; t < 5; ++t) {
            const int n = (d == 3) ? 10 : 12;
            if ((n * d) % 2 != 0) continue;
            Graph g = Graph::random_regular(n, d, rng);
            if (!g.is_connected()) continue;
            DomSetResult r = min_domset_exhaustive(g);
            // ceil(H_{d+1}/(d+1) * n), evaluated in doubles with slack.
            double h = 0;
            for (int j = 1; j <= d + 1; ++j) h += 1.0 / j;
            CHECK(r.size() <= static_cast<int>(std::ceil(h / (d + 1) * n + 1e-9)));
        }
    }
}
