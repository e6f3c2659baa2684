#include "chromind/tree_solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "chromind/matching.hpp"

namespace chromind {

namespace {

struct TreeDp {
    const Graph& g;
    int k;
    std::vector<uint64_t> lists;
    std::vector<std::vector<int>> inc;
    // feasible[e] bit i: the subtree hanging below edge e works with e colored i.
    std::vector<uint64_t> feasible;

    TreeDp(const TreeInstance& t) : g(t.tree), k(t.k), lists(t.lists), inc(g.incident_edges()) {
        if (!g.is_tree()) throw std::invalid_argument("tree solver: input is not a tree");
        if (t.forced) {
            const auto& [e, c] = *t.forced;
            if (c < 0 || c >= k || !(lists.at(e) >> c & 1))
                throw std::invalid_argument("tree solver: forced color outside the edge list");
            lists[e] = uint64_t{1} << c;
        }
        feasible.assign(g.m(), 0);
    }

    // Can the edges in `cand` (with per-edge admissible masks) take pairwise
    // distinct colors?
    bool colors_matchable(const std::vector<uint64_t>& cand) const {
        std::vector<std::vector<int>> adj(cand.size());
        for (size_t j = 0; j < cand.size(); ++j)
            for (int c = 0; c < k; ++c)
                if (cand[j] >> c & 1) adj[j].push_back(c);
        return max_bipartite_matching(adj, k) == static_cast<int>(cand.size());
    }

    bool run(int root) {
        // Orient away from the root, process children before parents.
        std::vector<int> order{root}, parent_edge(g.n, -1), parent(g.n, -1);
        for (size_t h = 0; h < order.size(); ++h) {
            const int v = order[h];
            for (int e : inc[v]) {
                const int w = g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
                if (w == parent[v]) continue;
                parent[w] = v;
                parent_edge[w] = e;
                order.push_back(w);
            }
        }
        for (size_t h = order.size(); h-- > 0;) {
            const int v = order[h];
            const int pe = parent_edge[v];
            if (pe < 0) continue;
            std::vector<int> child_edges;
            for (int e : inc[v])
                if (e != pe) child_edges.push_back(e);
            for (int i = 0; i < k; ++i) {
                if (!(lists[pe] >> i & 1)) continue;
                std::vector<uint64_t> cand;
                cand.reserve(child_edges.size());
                for (int e : child_edges) cand.push_back(feasible[e] & ~(uint64_t{1} << i));
                if (colors_matchable(cand)) feasible[pe] |= uint64_t{1} << i;
            }
        }
        std::vector<uint64_t> cand;
        for (int e : inc[root]) cand.push_back(feasible[e]);
        return colors_matchable(cand);
    }
};

}  // namespace

bool tree_list_colorable(const TreeInstance& t) {
    if (t.tree.m() == 0) return true;
    for (uint64_t mask : t.lists)
        if (mask == 0) return false;
    TreeDp dp(t);
    int root;
    if (t.forced) {
        root = t.tree.edges[t.forced->first].first;
    } else {
        root = 0;
        const auto deg = t.tree.degrees();
        for (int v = 0; v < t.tree.n; ++v)
            if (deg[v] == 1) {
                root = v;
                break;
            }
    }
    return dp.run(root);
}

uint64_t admissible_root_colors(const TreeInstance& t, int root_edge) {
    if (root_edge < 0 || root_edge >= t.tree.m())
        throw std::invalid_argument("admissible_root_colors: no such edge");
    uint64_t out = 0;
    for (int i = 0; i < t.k; ++i) {
        if (!(t.lists[root_edge] >> i & 1)) continue;
        TreeInstance forced = t;
        forced.forced = {root_edge, i};
        if (tree_list_colorable(forced)) out |= uint64_t{1} << i;
    }
    return out;
}

std::optional<ColoringInstance> prune_trees(const ColoringInstance& inst, const PeelResult& peel) {
    if (peel.g_new.n == 0)
        throw std::invalid_argument("prune_trees: input peeled to a tree; solve it directly");
    std::vector<uint64_t> lists = inst.lists;
    std::vector<char> alive(inst.g.n, 1);

    for (const auto& tc : peel.trees) {
        const auto [eu, ev] = inst.g.edges[tc.attach_edge];
        const int w = peel.deleted[eu] ? eu : ev;

        std::vector<int> verts = tc.verts;
        verts.push_back(tc.attach_vertex);
        std::sort(verts.begin(), verts.end());
        std::vector<int> edge_map;
        TreeInstance ti;
        ti.tree = inst.g.induced(verts, &edge_map);
        ti.k = inst.k;
        ti.lists.reserve(edge_map.size());
        int root_edge = -1;
        for (size_t i = 0; i < edge_map.size(); ++i) {
            ti.lists.push_back(lists[edge_map[i]]);
            if (edge_map[i] == tc.attach_edge) root_edge = static_cast<int>(i);
        }
        const uint64_t admissible = admissible_root_colors(ti, root_edge);
        if (admissible == 0) return std::nullopt;
        lists[tc.attach_edge] = admissible;
        for (int v : tc.verts)
            if (v != w) alive[v] = 0;
    }

    std::vector<int> kept;
    for (int v = 0; v < inst.g.n; ++v)
        if (alive[v]) kept.push_back(v);
    std::vector<int> edge_map;
    ColoringInstance out;
    out.g = inst.g.induced(kept, &edge_map);
    out.k = inst.k;
    out.lists.reserve(edge_map.size());
    for (int e : edge_map) out.lists.push_back(lists[e]);
    return out;
}

}  // namespace chromind
