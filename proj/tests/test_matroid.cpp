#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chromind/matroid.hpp"
#include "oracles.hpp"

using namespace chromind;
using namespace chromind::testing;

namespace {

std::vector<std::string> labels(const std::string& prefix, int n) {
    std::vector<std::string> out(n);
    for (int i = 0; i < n; ++i) out[i] = prefix + std::to_string(i);
    return out;
}

}  // namespace

TEST_CASE("uniform matroid") {
    MatroidRep m0 = uniform_rep(labels("g", 4), 0);
    CHECK(m0.rank() == 0);
    CHECK(m0.is_independent(std::vector<int>{}));
    CHECK(!m0.is_independent(std::vector<int>{1}));

    MatroidRep full = uniform_rep(labels("g", 4), 4);
    CHECK(full.is_independent(std::vector<int>{0, 1, 2, 3}));

    MatroidRep u23 = uniform_rep(labels("g", 3), 2);
    for_each_subset(3, [&](const std::vector<int>& s) {
        CHECK(u23.is_independent(s) == (s.size() <= 2));
    });
    CHECK_THROWS_AS(uniform_rep(labels("g", 2), 3), std::invalid_argument);
}

TEST_CASE("partition matroid") {
    PartitionSpec spec{{{0, 1}, {2}}, {1, 1}};
    MatroidRep m = partition_rep(spec, labels("g", 3));
    CHECK(m.rank() == 2);
    CHECK(m.is_independent(std::vector<int>{0, 2}));
    CHECK(!m.is_independent(std::vector<int>{0, 1}));

    PartitionSpec free{{{0}, {1, 2}}, {1, 2}};
    MatroidRep f = partition_rep(free, labels("g", 3));
    CHECK(f.is_independent(std::vector<int>{0, 1, 2}));

    PartitionSpec loops{{{0, 1}, {2}}, {0, 1}};
    MatroidRep l = partition_rep(loops, labels("g", 3));
    CHECK(!l.is_independent(std::vector<int>{0}));
    CHECK(l.is_independent(std::vector<int>{2}));

    PartitionSpec bad{{{0}}, {2}};
    CHECK_THROWS_AS(partition_rep(bad, labels("g", 1)), std::invalid_argument);
}

TEST_CASE("direct sum") {
    std::vector<MatroidRep> parts;
    parts.push_back(uniform_rep({"a"}, 1));
    parts.push_back(uniform_rep({"b"}, 1));
    MatroidRep sum = direct_sum(parts);
    CHECK(sum.rank() == 2);
    CHECK(sum.is_independent(std::vector<int>{0, 1}));

    std::vector<MatroidRep> clash;
    clash.push_back(uniform_rep({"a"}, 1));
    clash.push_back(uniform_rep({"a"}, 1));
    CHECK_THROWS_AS(direct_sum(clash), std::invalid_argument);

    CHECK(direct_sum(std::vector<MatroidRep>{}).rank() == 0);

    // Independence decomposes per block.
    SplitRng rng(401);
    std::vector<MatroidRep> blocks;
    blocks.push_back(uniform_rep(labels("x", 3), 2));
    blocks.push_back(uniform_rep(labels("y", 2), 1));
    MatroidRep s = direct_sum(blocks);
    for_each_subset(5, [&](const std::vector<int>& sel) {
        std::vector<int> left, right;
        for (int i : sel)
            (i < 3 ? left : right).push_back(i < 3 ? i : i - 3);
        const bool expect = blocks[0].is_independent(left) && blocks[1].is_independent(right);
        CHECK(s.is_independent(sel) == expect);
    });
}

TEST_CASE("transversal matroid against a matching oracle") {
    SplitRng rng(402);
    for (int trial = 0; trial < 200; ++trial) {
        const int nl = 2 + static_cast<int>(rng.next_below(7));  // up to 8
        const int nr = 1 + static_cast<int>(rng.next_below(4));
        std::vector<std::pair<int, int>> edges;
        std::vector<std::vector<int>> adj(nl);
        for (int x = 0; x < nl; ++x)
            for (int u = 0; u < nr; ++u)
                if (rng.next_below(3) == 0) {
                    edges.emplace_back(x, u);
                    adj[x].push_back(u);
                }
        MatroidRep m = transversal_rep(labels("x", nl), nr, edges, rng);
        for_each_subset(nl, [&](const std::vector<int>& s) {
            std::vector<std::vector<int>> sub;
            for (int x : s) sub.push_back(adj[x]);
            const bool saturable =
                max_bipartite_matching(sub, nr) == static_cast<int>(s.size());
            CHECK(m.is_independent(s) == saturable);
        });
    }
}

TEST_CASE("transversal corner cases") {
    SplitRng rng(403);
    // A left vertex with no edges is a loop.
    MatroidRep lonely = transversal_rep(labels("x", 2), 1, {{0, 0}}, rng);
    CHECK(!lonely.is_independent(std::vector<int>{1}));
    CHECK(lonely.is_independent(std::vector<int>{0}));

    // Complete bipartite K_{3,2}: rank two, every pair independent.
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < 3; ++x)
        for (int u = 0; u < 2; ++u) edges.emplace_back(x, u);
    MatroidRep k32 = transversal_rep(labels("x", 3), 2, edges, rng);
    CHECK(k32.rank() == 2);
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) CHECK(k32.is_independent(std::vector<int>{a, b}));
}

TEST_CASE("dual matroid") {
    SplitRng rng(404);
    MatroidRep free = uniform_rep(labels("g", 4), 4);
    MatroidRep dual_free = dual_rep(free);
    CHECK(dual_free.rank() == 0);

    MatroidRep zero = uniform_rep(labels("g", 3), 0);
    MatroidRep dual_zero = dual_rep(zero);
    CHECK(dual_zero.rank() == 3);
    CHECK(dual_zero.is_independent(std::vector<int>{0, 1, 2}));

    // Dual of U(r, n) behaves as U(n-r, n), checked against the definition
    // "disjoint from some basis" by brute force.
    for (int n = 2; n <= 6; ++n) {
        for (int r = 0; r <= n; ++r) {
            MatroidRep u = uniform_rep(labels("g", n), r);
            MatroidRep d = dual_rep(u);
            CHECK(d.rank() == n - r);
            for_each_subset(n, [&](const std::vector<int>& s) {
                CHECK(d.is_independent(s) == (s.size() <= static_cast<size_t>(n - r)));
            });
        }
    }

    // dual(dual(M)) = M on all subsets.
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + static_cast<int>(rng.next_below(4));
        std::vector<std::pair<int, int>> edges;
        for (int x = 0; x < n; ++x)
            for (int u = 0; u < 3; ++u)
                if (rng.next_below(2) == 0) edges.emplace_back(x, u);
        MatroidRep m = transversal_rep(labels("x", n), 3, edges, rng);
        if (m.rank() == 0) continue;
        MatroidRep dd = dual_rep(dual_rep(m));
        for_each_subset(n, [&](const std::vector<int>& s) {
            CHECK(dd.is_independent(s) == m.is_independent(s));
        });
    }
}

TEST_CASE("truncation") {
    SplitRng rng(405);
    MatroidRep free5 = uniform_rep(labels("g", 5), 5);
    MatroidRep t2 = truncate_rep(free5, 2, rng);
    for_each_subset(5, [&](const std::vector<int>& s) {
        CHECK(t2.is_independent(s) == (s.size() <= 2));
    });

    MatroidRep u34 = uniform_rep(labels("g", 4), 3);
    MatroidRep same = truncate_rep(u34, 3, rng);
    for_each_subset(4, [&](const std::vector<int>& s) {
        CHECK(same.is_independent(s) == u34.is_independent(s));
    });

    MatroidRep t0 = truncate_rep(u34, 0, rng);
    CHECK(t0.is_independent(std::vector<int>{}));
    CHECK(!t0.is_independent(std::vector<int>{2}));

    CHECK_THROWS_AS(truncate_rep(u34, 4, rng), std::invalid_argument);
}

TEST_CASE("extension matroid examples") {
    SplitRng rng(406);

    // Single edge with list {1}, k = 3, d_new = 2: unique basis {c2, c3}.
    MatroidRep m = extension_matroid({uint64_t{1}}, 3, 2, rng);
    CHECK(m.rank() == 2);
    CHECK(m.is_independent(std::vector<int>{1, 2}));
    CHECK(!m.is_independent(std::vector<int>{0, 1}));
    CHECK(!m.is_independent(std::vector<int>{0, 2}));

    // No edges: free matroid truncated to d_new.
    MatroidRep f = extension_matroid({}, 2, 2, rng);
    CHECK(f.is_independent(std::vector<int>{0, 1}));

    // e1 with L={1,2}, e2 with L={2}, k = 3, d_new = 1: brute-force the basis
    // predicate for every singleton.
    const std::vector<uint64_t> star{0b011, 0b010};
    MatroidRep s = extension_matroid(star, 3, 1, rng);
    for (int c = 0; c < 3; ++c) {
        const bool expect = star_feasible_avoiding(star, 3, uint64_t{1} << c);
        CHECK(s.is_independent(std::vector<int>{c}) == expect);
    }

    // Uncolorable star fails loudly.
    CHECK_THROWS_AS(extension_matroid({uint64_t{1}, uint64_t{1}}, 3, 1, rng),
                    StarInfeasibleError);
    // Truncation past the dual rank is infeasible as well.
    CHECK_THROWS_AS(extension_matroid({uint64_t{1}}, 2, 2, rng), StarInfeasibleError);
}

TEST_CASE("extension matroid matches the basis predicate on random stars") {
    for (uint64_t seed : {11u, 12u, 13u}) {
        SplitRng rng(seed);
        for (int trial = 0; trial < 100; ++trial) {
            const int k = 2 + static_cast<int>(rng.next_below(4));  // 2..5
            const int n_edges = static_cast<int>(rng.next_below(
                static_cast<uint64_t>(std::min(k, 4)) + 1));
            std::vector<uint64_t> star(n_edges);
            for (int e = 0; e < n_edges; ++e)
                star[e] = 1 + rng.next_below((uint64_t{1} << k) - 1);
            if (!star_feasible_avoiding(star, k, 0)) continue;  // star itself uncolorable
            const int max_d = k - n_edges;
            if (max_d == 0) continue;
            const int d_new = 1 + static_cast<int>(rng.next_below(max_d));
            MatroidRep m = extension_matroid(star, k, d_new, rng);
            CHECK(m.rank() == d_new);
            for_each_subset(k, [&](const std::vector<int>& s) {
                if (static_cast<int>(s.size()) != d_new) return;
                uint64_t avoid = 0;
                for (int c : s) avoid |= uint64_t{1} << c;
                CHECK(m.is_independent(s) == star_feasible_avoiding(star, k, avoid));
            });
        }
    }
}

TEST_CASE("independence is monotone and rank-bounded") {
    SplitRng rng(407);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3 + static_cast<int>(rng.next_below(4));
        const int r = 1 + static_cast<int>(rng.next_below(static_cast<uint64_t>(n)));
        MatroidRep m = uniform_rep(labels("g", n), r);
        for_each_subset(n, [&](const std::vector<int>& s) {
            if (!m.is_independent(s)) return;
            CHECK(static_cast<int>(s.size()) <= m.rank());
            for (size_t drop = 0; drop < s.size(); ++drop) {
                std::vector<int> sub;
                for (size_t i = 0; i < s.size(); ++i)
                    if (i != drop) sub.push_back(s[i]);
                CHECK(m.is_independent(sub));
            }
        });
    }
}
