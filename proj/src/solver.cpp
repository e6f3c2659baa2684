#include "chromind/solver.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "chromind/matching.hpp"
#include "chromind/sieve.hpp"
#include "chromind/tree_solver.hpp"

namespace chromind {

namespace {

// Edge order in which each edge shares a vertex with an earlier one; keeps
// the backtracking oracles well pruned.
std::vector<int> adjacency_first_order(const Graph& g) {
    std::vector<int> order;
    std::vector<char> used_edge(g.m(), 0), touched(g.n, 0);
    const auto inc = g.incident_edges();
    for (int start = 0; start < g.m(); ++start) {
        if (used_edge[start]) continue;
        order.push_back(start);
        used_edge[start] = 1;
        touched[g.edges[start].first] = touched[g.edges[start].second] = 1;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int v = 0; v < g.n; ++v) {
                if (!touched[v]) continue;
                for (int e : inc[v]) {
                    if (used_edge[e]) continue;
                    order.push_back(e);
                    used_edge[e] = 1;
                    touched[g.edges[e].first] = touched[g.edges[e].second] = 1;
                    grew = true;
                }
            }
        }
    }
    return order;
}

bool backtrack_lists(const Graph& g, const std::vector<uint64_t>& lists,
                     const std::vector<int>& order, size_t pos, std::vector<uint64_t>& used,
                     std::vector<int>& colors) {
    if (pos == order.size()) return true;
    const int e = order[pos];
    const auto [u, v] = g.edges[e];
    uint64_t avail = lists[e] & ~used[u] & ~used[v];
    while (avail != 0) {
        const int c = __builtin_ctzll(avail);
        avail &= avail - 1;
        const uint64_t bit = uint64_t{1} << c;
        used[u] |= bit;
        used[v] |= bit;
        colors[e] = c;
        if (backtrack_lists(g, lists, order, pos + 1, used, colors)) return true;
        used[u] &= ~bit;
        used[v] &= ~bit;
        colors[e] = -1;
    }
    return false;
}

// Backtracking with first-use symmetry pruning for the uniform-palette case.
bool backtrack_plain(const Graph& g, int k, const std::vector<int>& order, size_t pos,
                     std::vector<uint64_t>& used, std::vector<int>& colors, int used_count) {
    if (pos == order.size()) return true;
    const int e = order[pos];
    const auto [u, v] = g.edges[e];
    const int limit = std::min(k, used_count + 1);
    for (int c = 0; c < limit; ++c) {
        const uint64_t bit = uint64_t{1} << c;
        if ((used[u] | used[v]) & bit) continue;
        used[u] |= bit;
        used[v] |= bit;
        colors[e] = c;
        if (backtrack_plain(g, k, order, pos + 1, used, colors,
                            std::max(used_count, c + 1)))
            return true;
        used[u] &= ~bit;
        used[v] &= ~bit;
        colors[e] = -1;
    }
    return false;
}

bool plain_colorable(const Graph& g, int k, std::vector<int>* witness) {
    if (k > 63) throw std::invalid_argument("edge coloring: more than 63 colors unsupported");
    const auto order = adjacency_first_order(g);
    std::vector<uint64_t> used(g.n, 0);
    std::vector<int> colors(g.m(), -1);
    if (!backtrack_plain(g, k, order, 0, used, colors, 0)) return false;
    if (witness) *witness = colors;
    return true;
}

}  // namespace

int brute_force_chromatic_index(const Graph& g, std::vector<int>* witness, int cap_m) {
    if (g.m() > cap_m)
        throw std::invalid_argument("brute_force_chromatic_index: edge cap exceeded");
    if (g.m() == 0) {
        if (witness) witness->clear();
        return 0;
    }
    for (int k = g.max_degree();; ++k)
        if (plain_colorable(g, k, witness)) return k;
}

bool brute_force_list_colorable(const ColoringInstance& inst, std::vector<int>* witness,
                                int cap_m) {
    if (inst.g.m() > cap_m)
        throw std::invalid_argument("brute_force_list_colorable: edge cap exceeded");
    inst.validate();
    const auto order = adjacency_first_order(inst.g);
    std::vector<uint64_t> used(inst.g.n, 0);
    std::vector<int> colors(inst.g.m(), -1);
    if (!backtrack_lists(inst.g, inst.lists, order, 0, used, colors)) return false;
    if (witness) *witness = colors;
    return true;
}

bool is_proper_edge_coloring(const Graph& g, const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) != g.m()) return false;
    const auto inc = g.incident_edges();
    for (int v = 0; v < g.n; ++v) {
        std::set<int> seen;
        for (int e : inc[v]) {
            if (colors[e] < 0 || !seen.insert(colors[e]).second) return false;
        }
    }
    return true;
}

std::vector<int> vizing_upper(const Graph& g) {
    const int delta = g.max_degree();
    std::vector<int> color(g.m(), -1);
    if (g.m() == 0) return color;
    const int palette = delta + 1;
    // at[v][c] = edge at v colored c, or -1.
    std::vector<std::vector<int>> at(g.n, std::vector<int>(palette, -1));
    const auto inc = g.incident_edges();

    auto other = [&](int e, int v) {
        return g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
    };
    auto free_color = [&](int v) {
        for (int c = 0; c < palette; ++c)
            if (at[v][c] < 0) return c;
        throw std::logic_error("vizing_upper: no free color at a vertex");
    };
    // Recoloring swaps colors between adjacent edges, so clear every touched
    // table entry before writing any new one.
    auto recolor_batch = [&](const std::vector<std::pair<int, int>>& updates) {
        for (const auto& [e, nc] : updates) {
            if (color[e] < 0) continue;
            const auto [u, v] = g.edges[e];
            at[u][color[e]] = -1;
            at[v][color[e]] = -1;
        }
        for (const auto& [e, nc] : updates) {
            const auto [u, v] = g.edges[e];
            color[e] = nc;
            at[u][nc] = e;
            at[v][nc] = e;
        }
    };

    for (int e0 = 0; e0 < g.m(); ++e0) {
        const int x = g.edges[e0].first;
        const int y = g.edges[e0].second;

        // Maximal fan of x starting at y.
        std::vector<int> fan{y};
        std::vector<int> fan_edge{e0};
        std::vector<char> in_fan(g.n, 0);
        in_fan[y] = 1;
        bool extended = true;
        while (extended) {
            extended = false;
            for (int e : inc[x]) {
                if (color[e] < 0) continue;
                const int w = other(e, x);
                if (in_fan[w]) continue;
                if (at[fan.back()][color[e]] < 0) {  // color of e free at fan end
                    fan.push_back(w);
                    fan_edge.push_back(e);
                    in_fan[w] = 1;
                    extended = true;
                    break;
                }
            }
        }

        const int c = free_color(x);
        const int d = free_color(fan.back());
        if (c != d) {
            // Invert the cd path starting at x (first edge colored d).
            std::vector<int> path;
            int cur = x, want = d;
            while (at[cur][want] >= 0) {
                const int pe = at[cur][want];
                path.push_back(pe);
                cur = other(pe, cur);
                want = (want == d) ? c : d;
            }
            std::vector<std::pair<int, int>> flips;
            flips.reserve(path.size());
            for (int pe : path) flips.emplace_back(pe, color[pe] == c ? d : c);
            recolor_batch(flips);
        }
        // Shrink the fan to the first vertex where d is now free, rotate, and
        // finish with color d.
        size_t l = 0;
        while (l < fan.size() && at[fan[l]][d] >= 0) ++l;
        if (l == fan.size()) throw std::logic_error("vizing_upper: fan has no d-free vertex");
        std::vector<std::pair<int, int>> rotation;
        for (size_t i = 0; i < l; ++i) rotation.emplace_back(fan_edge[i], color[fan_edge[i + 1]]);
        rotation.emplace_back(fan_edge[l], d);
        recolor_batch(rotation);
    }

    if (!is_proper_edge_coloring(g, color))
        throw std::logic_error("vizing_upper: produced an improper coloring");
    for (int c : color)
        if (c < 0 || c > delta) throw std::logic_error("vizing_upper: palette exceeded");
    return color;
}

namespace {

struct PipelineStats {
    uint64_t evaluations = 0;
    int domset_size = 0;
    int core_n = 0;
    std::string domset_method = "-";
    std::set<std::string> methods;
};

ColoringInstance component_instance(const ColoringInstance& inst, const std::vector<int>& verts) {
    std::vector<int> edge_map;
    ColoringInstance out;
    out.g = inst.g.induced(verts, &edge_map);
    out.k = inst.k;
    out.lists.reserve(edge_map.size());
    for (int e : edge_map) out.lists.push_back(inst.lists[e]);
    return out;
}

// chi'(comp) <= k for a connected component, by the edge-mode pipeline.
bool decide_edge_colorable(const Graph& comp, int k, const SolverConfig& cfg, SplitRng comp_rng,
                           PipelineStats& stats) {
    const PeelResult peel = peel_unit_degree(comp);
    if (peel.g_new.n == 0) {  // the component was a tree; chi' = Delta <= k
        stats.methods.insert("brute");
        return true;
    }
    const Graph& rem = peel.g_new;
    if (cfg.mode == SolveMode::kBrute ||
        (cfg.mode == SolveMode::kAuto && rem.m() <= cfg.brute_threshold_m)) {
        stats.methods.insert("brute");
        return plain_colorable(rem, k, nullptr);
    }

    stats.core_n += rem.n;
    DomSetResult dom;
    if (cfg.mode != SolveMode::kIE) {
        dom = domset_for_solver(rem, cfg.domset_method);
        stats.domset_size += dom.size();
        stats.domset_method = dom.method;
        stats.methods.insert("sieve");
    } else {
        stats.methods.insert("ie");
    }

    const ColoringInstance ci = ColoringInstance::with_full_lists(rem, k);
    for (int trial = 0; trial < cfg.trials; ++trial) {
        SplitRng trng = comp_rng.split(100 + static_cast<uint64_t>(trial));
        const EnumerationContext ctx = build_context(ci, ContextMode::kEdgeColoring, nullptr, trng);
        const SieveVerdict sv = cfg.mode == SolveMode::kIE
                                    ? detect_full_monomial_ie(ctx, trng.split(9))
                                    : detect_full_monomial(ctx, dom.vertices, trng.split(9),
                                                           cfg.jobs);
        stats.evaluations += sv.evaluations_used;
        if (sv.found) return true;
    }
    return false;
}

bool decide_list_colorable(const ColoringInstance& comp, const SolverConfig& cfg,
                           SplitRng comp_rng, PipelineStats& stats) {
    if (comp.g.m() == 0) {
        stats.methods.insert("trivial");
        return true;
    }
    for (uint64_t mask : comp.lists)
        if (mask == 0) {
            stats.methods.insert("trivial");
            return false;
        }
    if (cfg.mode == SolveMode::kBrute) {
        stats.methods.insert("brute");
        return brute_force_list_colorable(comp, nullptr, 1 << 20);
    }
    if (comp.g.is_tree()) {
        stats.methods.insert("tree");
        return tree_list_colorable({comp.g, comp.k, comp.lists, std::nullopt});
    }

    const PeelResult peel1 = peel_unit_degree(comp.g);
    const auto pruned = prune_trees(comp, peel1);
    if (!pruned) {
        stats.methods.insert("tree");
        return false;
    }
    const PeelResult peel2 = peel_unit_degree(pruned->g);
    for (const auto& tc : peel2.trees)
        if (tc.verts.size() != 1)
            throw std::logic_error("list pipeline: pruning left a multi-vertex pendant tree");

    const std::string tag = cfg.mode == SolveMode::kIE ? "ie" : "sieve";
    stats.methods.insert(tag);

    // Pendant stars: gather their lists and require each to be colorable.
    const auto star_edges = star_decomposition(peel2);
    std::vector<std::vector<uint64_t>> star_masks(peel2.g_new.n);
    for (int v = 0; v < peel2.g_new.n; ++v) {
        for (int e : star_edges[v]) star_masks[v].push_back(pruned->lists[e]);
        std::vector<std::vector<int>> adj(star_masks[v].size());
        for (size_t j = 0; j < star_masks[v].size(); ++j)
            for (int cbit = 0; cbit < comp.k; ++cbit)
                if (star_masks[v][j] >> cbit & 1) adj[j].push_back(cbit);
        if (max_bipartite_matching(adj, comp.k) < static_cast<int>(star_masks[v].size()))
            return false;
    }

    ColoringInstance core;
    core.g = peel2.g_new;
    core.k = pruned->k;
    core.lists.reserve(peel2.new_edge_to_orig.size());
    for (int e : peel2.new_edge_to_orig) core.lists.push_back(pruned->lists[e]);

    stats.core_n += core.g.n;
    DomSetResult dom;
    if (cfg.mode != SolveMode::kIE) {
        const int n1 = peel2.n_deleted();
        // Many pendants: the Ore set on the core already beats the target
        // bound; otherwise find a certified-minimum dominating set.
        if (5 * n1 >= pruned->g.n) dom = ore_half(core.g);
        else dom = domset_for_solver(core.g, cfg.domset_method);
        stats.domset_size += dom.size();
        stats.domset_method = dom.method;
    }

    for (int trial = 0; trial < cfg.trials; ++trial) {
        SplitRng trng = comp_rng.split(100 + static_cast<uint64_t>(trial));
        try {
            const EnumerationContext ctx =
                build_context(core, ContextMode::kListColoring, &star_masks, trng);
            const SieveVerdict sv = cfg.mode == SolveMode::kIE
                                        ? detect_full_monomial_ie(ctx, trng.split(9))
                                        : detect_full_monomial(ctx, dom.vertices, trng.split(9),
                                                               cfg.jobs);
            stats.evaluations += sv.evaluations_used;
            if (sv.found) return true;
        } catch (const StarInfeasibleError&) {
            return false;
        }
    }
    return false;
}

std::string merged_method(const PipelineStats& stats) {
    if (stats.methods.empty()) return "trivial";
    if (stats.methods.size() == 1) return *stats.methods.begin();
    if (stats.methods.count("sieve")) return "sieve";
    if (stats.methods.count("ie")) return "ie";
    return "mixed";
}

}  // namespace

Verdict edge_coloring(const Graph& g, const SolverConfig& cfg) {
    Verdict v;
    v.problem = "edge-coloring";
    v.seed = cfg.seed;
    v.trials = cfg.trials;
    v.delta = g.max_degree();

    PipelineStats stats;
    SplitRng root(cfg.seed);
    int chi = 0;
    int comp_count = 0;
    const auto comp_id = g.component_ids(&comp_count);
    for (int c = 0; c < comp_count; ++c) {
        std::vector<int> verts;
        for (int vtx = 0; vtx < g.n; ++vtx)
            if (comp_id[vtx] == c) verts.push_back(vtx);
        const Graph comp = g.induced(verts);
        if (comp.m() == 0) continue;
        const int delta_c = comp.max_degree();
        const bool class1 =
            decide_edge_colorable(comp, delta_c, cfg, root.split(0x1000 + c), stats);
        chi = std::max(chi, delta_c + (class1 ? 0 : 1));
    }
    v.chromatic_index = chi;
    v.cls = (chi <= v.delta) ? 1 : 2;
    v.yes = v.cls == 1;
    v.method = merged_method(stats);
    v.evaluations = stats.evaluations;
    v.domset_size = stats.domset_size;
    v.core_n = stats.core_n;
    v.domset_method = stats.domset_method;
    return v;
}

namespace {

// ceil(n * H_{d+1} / (d+1)) with exact rational arithmetic.
int harmonic_domset_bound(int d, int n) {
    uint64_t lcm = 1;
    for (uint64_t j = 2; j <= static_cast<uint64_t>(d) + 1; ++j)
        lcm = std::lcm(lcm, j);
    unsigned __int128 num = 0;
    for (uint64_t j = 1; j <= static_cast<uint64_t>(d) + 1; ++j) num += lcm / j;
    num *= static_cast<unsigned>(n);
    const unsigned __int128 den =
        static_cast<unsigned __int128>(lcm) * (static_cast<uint64_t>(d) + 1);
    return static_cast<int>((num + den - 1) / den);
}

}  // namespace

Verdict edge_coloring_regular(const Graph& g, const SolverConfig& cfg) {
    const auto deg = g.degrees();
    const int d = deg.empty() ? 0 : deg[0];
    for (int dv : deg)
        if (dv != d) throw std::invalid_argument("edge_coloring_regular: graph is not regular");

    Verdict v;
    v.problem = "edge-coloring";
    v.seed = cfg.seed;
    v.trials = cfg.trials;
    v.delta = d;
    double h = 0;
    for (int j = 1; j <= d + 1; ++j) h += 1.0 / j;
    v.alpha_d = 1.0 - h / (d + 1);

    if (d <= 1) {  // edgeless or a perfect matching
        v.chromatic_index = d;
        v.cls = 1;
        v.yes = true;
        v.method = "brute";
        return v;
    }

    PipelineStats stats;
    SplitRng root(cfg.seed);
    int chi = 0;
    int comp_count = 0;
    const auto comp_id = g.component_ids(&comp_count);
    for (int c = 0; c < comp_count; ++c) {
        std::vector<int> verts;
        for (int vtx = 0; vtx < g.n; ++vtx)
            if (comp_id[vtx] == c) verts.push_back(vtx);
        const Graph comp = g.induced(verts);

        bool class1;
        if (cfg.mode == SolveMode::kBrute ||
            (cfg.mode == SolveMode::kAuto && comp.m() <= cfg.brute_threshold_m)) {
            stats.methods.insert("brute");
            class1 = plain_colorable(comp, d, nullptr);
        } else {
            const DomSetResult dom = comp.n <= 24 ? min_domset_exhaustive(comp)
                                                  : min_domset_structured(comp);
            if (dom.size() > harmonic_domset_bound(d, comp.n))
                throw std::logic_error("edge_coloring_regular: harmonic bound violated");
            stats.core_n += comp.n;
            stats.domset_size += dom.size();
            stats.domset_method = dom.method;
            stats.methods.insert("sieve");
            const ColoringInstance ci = ColoringInstance::with_full_lists(comp, d);
            SplitRng comp_rng = root.split(0x1000 + c);
            class1 = false;
            for (int trial = 0; trial < cfg.trials && !class1; ++trial) {
                SplitRng trng = comp_rng.split(100 + static_cast<uint64_t>(trial));
                const EnumerationContext ctx =
                    build_context(ci, ContextMode::kEdgeColoring, nullptr, trng);
                const SieveVerdict sv =
                    detect_full_monomial(ctx, dom.vertices, trng.split(9), cfg.jobs);
                stats.evaluations += sv.evaluations_used;
                class1 = sv.found;
            }
        }
        chi = std::max(chi, d + (class1 ? 0 : 1));
    }
    v.chromatic_index = chi;
    v.cls = (chi <= d) ? 1 : 2;
    v.yes = v.cls == 1;
    v.method = merged_method(stats);
    v.evaluations = stats.evaluations;
    v.domset_size = stats.domset_size;
    v.core_n = stats.core_n;
    v.domset_method = stats.domset_method;
    return v;
}

Verdict list_edge_coloring(const ColoringInstance& inst, const SolverConfig& cfg) {
    inst.validate();
    Verdict v;
    v.problem = "list-edge-coloring";
    v.seed = cfg.seed;
    v.trials = cfg.trials;
    v.delta = inst.g.max_degree();

    PipelineStats stats;
    if (inst.g.max_degree() > inst.k) {  // some vertex needs more colors than exist
        v.yes = false;
        v.method = "trivial";
        return v;
    }

    SplitRng root(cfg.seed);
    bool all_yes = true;
    int comp_count = 0;
    const auto comp_id = inst.g.component_ids(&comp_count);
    for (int c = 0; c < comp_count && all_yes; ++c) {
        std::vector<int> verts;
        for (int vtx = 0; vtx < inst.g.n; ++vtx)
            if (comp_id[vtx] == c) verts.push_back(vtx);
        const ColoringInstance comp = component_instance(inst, verts);
        all_yes = decide_list_colorable(comp, cfg, root.split(0x1000 + c), stats);
    }
    v.yes = all_yes;
    v.method = merged_method(stats);
    v.evaluations = stats.evaluations;
    v.domset_size = stats.domset_size;
    v.core_n = stats.core_n;
    v.domset_method = stats.domset_method;
    return v;
}

}  // namespace chromind
