// Test-only oracles: independent brute-force routes used to pin expected
// values.  Nothing here may call into the implementation paths under test.
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "chromind/graph.hpp"
#include "chromind/matching.hpp"
#include "chromind/rng.hpp"
#include "chromind/sparse_poly.hpp"

namespace chromind::testing {

// Determinant by cofactor expansion along the first row (char 2: no signs).
inline SparsePoly symbolic_det_cofactor(const std::vector<std::vector<SparsePoly>>& a) {
    const size_t n = a.size();
    if (n == 0) return SparsePoly::constant({}, GF64::one());
    if (n == 1) return a[0][0];
    SparsePoly total(a[0][0].vars());
    for (size_t j = 0; j < n; ++j) {
        if (a[0][j].is_zero()) continue;
        std::vector<std::vector<SparsePoly>> minor(n - 1, std::vector<SparsePoly>(n - 1));
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = a[r][c];
            }
        }
        total = total + a[0][j] * symbolic_det_cofactor(minor);
    }
    return total;
}

// All matchings of g (edge-id lists, the empty matching included).
inline std::vector<std::vector<int>> all_matchings(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::vector<char> used(g.n, 0);
    auto rec = [&](auto&& self, int from) -> void {
        out.push_back(cur);
        for (int e = from; e < g.m(); ++e) {
            const auto [u, v] = g.edges[e];
            if (used[u] || used[v]) continue;
            used[u] = used[v] = 1;
            cur.push_back(e);
            self(self, e + 1);
            cur.pop_back();
            used[u] = used[v] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

inline Graph random_connected_graph(int n, int m, SplitRng& rng, int max_tries = 10000) {
    for (int t = 0; t < max_tries; ++t) {
        Graph g = Graph::random_gnm(n, m, rng);
        if (g.is_connected()) return g;
    }
    throw std::runtime_error("random_connected_graph: no connected sample found");
}

inline Graph random_connected_min_degree2(int n, SplitRng& rng) {
    const int max_m = n * (n - 1) / 2;
    for (int t = 0; t < 20000; ++t) {
        const int m = n + static_cast<int>(rng.next_below(
                              static_cast<uint64_t>(std::max(1, max_m - n))));
        Graph g = Graph::random_gnm(n, std::min(m, max_m), rng);
        if (!g.is_connected()) continue;
        const auto deg = g.degrees();
        if (*std::min_element(deg.begin(), deg.end()) >= 2) return g;
    }
    throw std::runtime_error("random_connected_min_degree2: no sample found");
}

// Is the pendant star colorable when the colors in `avoid` are banned?
inline bool star_feasible_avoiding(const std::vector<uint64_t>& star_lists, int k,
                                   uint64_t avoid) {
    std::vector<std::vector<int>> adj(star_lists.size());
    for (size_t e = 0; e < star_lists.size(); ++e)
        for (int c = 0; c < k; ++c)
            if ((star_lists[e] >> c & 1) && !(avoid >> c & 1)) adj[e].push_back(c);
    return max_bipartite_matching(adj, k) == static_cast<int>(star_lists.size());
}

inline SparsePoly random_sparse_poly(const std::vector<std::string>& vars, int max_terms,
                                     int max_deg_per_var, SplitRng& rng) {
    SparsePoly p(vars);
    const int terms = 1 + static_cast<int>(rng.next_below(static_cast<uint64_t>(max_terms)));
    for (int t = 0; t < terms; ++t) {
        SparsePoly::Exponents e(vars.size(), 0);
        for (size_t j = 0; j < vars.size(); ++j)
            e[j] = static_cast<uint32_t>(rng.next_below(max_deg_per_var + 1));
        p.add_term(e, rng.next_nonzero());
    }
    return p;
}

// Random sparse polynomial whose total degree stays within the budget; each
// term scatters its degree units over random variables, so repeated hits
// produce even exponents (useful odd-support cases).
inline SparsePoly random_sparse_poly_bounded(const std::vector<std::string>& vars, int max_terms,
                                             int degree_budget, SplitRng& rng) {
    SparsePoly p(vars);
    const int terms = 1 + static_cast<int>(rng.next_below(static_cast<uint64_t>(max_terms)));
    for (int t = 0; t < terms; ++t) {
        SparsePoly::Exponents e(vars.size(), 0);
        const int deg = static_cast<int>(rng.next_below(degree_budget + 1));
        for (int u = 0; u < deg; ++u) e[rng.next_below(vars.size())] += 1;
        p.add_term(e, rng.next_nonzero());
    }
    return p;
}

template <typename F>
inline void for_each_subset(int n, F&& f) {
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) subset.push_back(i);
        f(subset);
    }
}

}  // namespace chromind::testing
