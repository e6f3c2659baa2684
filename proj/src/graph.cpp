#include "chromind/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

namespace chromind {

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("Graph: vertex out of range");
    if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
    if (u > v) std::swap(u, v);
    if (edge_index(u, v) >= 0) throw std::invalid_argument("Graph: duplicate edge rejected");
    edges.emplace_back(u, v);
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (size_t i = 0; i < edges.size(); ++i)
        if (edges[i].first == u && edges[i].second == v) return static_cast<int>(i);
    return -1;
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

std::vector<std::vector<int>> Graph::incident_edges() const {
    std::vector<std::vector<int>> inc(n);
    for (size_t i = 0; i < edges.size(); ++i) {
        inc[edges[i].first].push_back(static_cast<int>(i));
        inc[edges[i].second].push_back(static_cast<int>(i));
    }
    return inc;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

int Graph::max_degree() const {
    const auto deg = degrees();
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::vector<int> Graph::component_ids(int* count) const {
    std::vector<int> comp(n, -1);
    const auto adj = adjacency();
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (comp[w] < 0) {
                    comp[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    if (count) *count = next;
    return comp;
}

int Graph::component_count() const {
    int c = 0;
    component_ids(&c);
    return c;
}

bool Graph::is_connected() const { return n == 0 || component_count() == 1; }

bool Graph::is_tree() const { return is_connected() && m() == n - 1; }

Graph Graph::induced(const std::vector<int>& verts, std::vector<int>* edge_map) const {
    std::vector<int> pos(n, -1);
    for (size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
    Graph sub(static_cast<int>(verts.size()));
    if (edge_map) edge_map->clear();
    for (size_t i = 0; i < edges.size(); ++i) {
        const auto& [u, v] = edges[i];
        if (pos[u] >= 0 && pos[v] >= 0) {
            sub.add_edge(pos[u], pos[v]);
            if (edge_map) edge_map->push_back(static_cast<int>(i));
        }
    }
    return sub;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph Graph::random_gnm(int n, int m, SplitRng& rng) {
    const long long max_m = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > max_m) throw std::invalid_argument("random_gnm: infeasible edge count");
    Graph g(n);
    while (g.m() < m) {
        const int u = static_cast<int>(rng.next_below(static_cast<uint64_t>(n)));
        const int v = static_cast<int>(rng.next_below(static_cast<uint64_t>(n)));
        if (u == v || g.edge_index(u, v) >= 0) continue;
        g.add_edge(u, v);
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

Graph Graph::random_regular(int n, int d, SplitRng& rng) {
    if (d < 0 || d >= n || (static_cast<long long>(n) * d) % 2 != 0)
        throw std::invalid_argument("random_regular: infeasible parameters");
    // Configuration model, drawing a uniformly random legal stub pair at each
    // step; restart when no legal pair remains.
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<size_t>(n) * d);
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < d; ++i) stubs.push_back(v);
        Graph g(n);
        std::vector<char> present(static_cast<size_t>(n) * n, 0);
        bool stuck = false;
        while (!stubs.empty() && !stuck) {
            std::vector<std::pair<size_t, size_t>> legal;
            for (size_t i = 0; i < stubs.size(); ++i)
                for (size_t j = i + 1; j < stubs.size(); ++j) {
                    const int u = stubs[i], v = stubs[j];
                    if (u != v && !present[static_cast<size_t>(u) * n + v]) legal.emplace_back(i, j);
                }
            if (legal.empty()) {
                stuck = true;
                break;
            }
            const auto [i, j] = legal[rng.next_below(legal.size())];
            const int u = stubs[i], v = stubs[j];
            g.add_edge(u, v);
            present[static_cast<size_t>(u) * n + v] = present[static_cast<size_t>(v) * n + u] = 1;
            stubs.erase(stubs.begin() + static_cast<long>(j));
            stubs.erase(stubs.begin() + static_cast<long>(i));
        }
        if (!stuck) {
            std::sort(g.edges.begin(), g.edges.end());
            return g;
        }
    }
    throw std::runtime_error("random_regular: configuration model failed to converge");
}

ColoringInstance ColoringInstance::edge_coloring(Graph g) {
    const int k = g.max_degree();
    return with_full_lists(std::move(g), k);
}

ColoringInstance ColoringInstance::with_full_lists(Graph g, int k) {
    ColoringInstance inst;
    inst.g = std::move(g);
    inst.k = k;
    inst.lists.assign(inst.g.edges.size(), inst.full_mask());
    return inst;
}

void ColoringInstance::validate() const {
    if (k < 0 || k > 63) throw std::invalid_argument("ColoringInstance: k out of range");
    if (lists.size() != g.edges.size())
        throw std::invalid_argument("ColoringInstance: one list per edge required");
    for (uint64_t mask : lists)
        if ((mask & ~full_mask()) != 0)
            throw std::invalid_argument("ColoringInstance: list color outside [k]");
}

ParsedInstance parse_instance(std::istream& in) {
    int n = -1, m = -1;
    int k = -1;
    bool any_list = false;
    std::vector<std::pair<int, int>> raw_edges;
    std::vector<std::pair<std::pair<int, int>, std::vector<int>>> raw_lists;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        const std::string where = " (line " + std::to_string(lineno) + ")";
        if (tag == "p") {
            std::string fmt;
            if (!(ls >> fmt >> n >> m) || fmt != "edge" || n < 0 || m < 0)
                throw ParseError("bad problem line" + where);
        } else if (tag == "e") {
            int u, v;
            if (!(ls >> u >> v)) throw ParseError("bad edge line" + where);
            raw_edges.emplace_back(u, v);
        } else if (tag == "l") {
            int u, v, c;
            if (!(ls >> u >> v)) throw ParseError("bad list line" + where);
            std::vector<int> colors;
            while (ls >> c) colors.push_back(c);
            raw_lists.push_back({{u, v}, std::move(colors)});
            any_list = true;
        } else if (tag == "k") {
            if (!(ls >> k) || k < 0) throw ParseError("bad color-count line" + where);
        } else {
            throw ParseError("unknown line tag '" + tag + "'" + where);
        }
    }
    if (n < 0) throw ParseError("missing problem line");
    Graph g(n);
    for (const auto& [u, v] : raw_edges) {
        if (u < 1 || u > n || v < 1 || v > n) throw ParseError("edge endpoint out of range");
        try {
            g.add_edge(u - 1, v - 1);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    if (g.m() != m) throw ParseError("edge count differs from problem line");
    if (any_list && k < 0) throw ParseError("lists given without a k line");

    ParsedInstance out;
    out.list_mode = any_list || k >= 0;
    if (!out.list_mode) {
        out.inst = ColoringInstance::edge_coloring(std::move(g));
        return out;
    }
    if (k > 63) throw ParseError("k larger than 63 unsupported");
    out.inst = ColoringInstance::with_full_lists(std::move(g), k);
    std::vector<char> list_seen(out.inst.g.edges.size(), 0);
    for (const auto& [uv, colors] : raw_lists) {
        const int e = out.inst.g.edge_index(uv.first - 1, uv.second - 1);
        if (e < 0) throw ParseError("list for nonexistent edge");
        if (list_seen[e]) throw ParseError("duplicate list for edge");
        list_seen[e] = 1;
        uint64_t mask = 0;
        for (int c : colors) {
            if (c < 1 || c > k) throw ParseError("list color outside [k]");
            mask |= uint64_t{1} << (c - 1);
        }
        out.inst.lists[e] = mask;
    }
    return out;
}

ParsedInstance parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file: " + path);
    return parse_instance(in);
}

std::string serialize_instance(const ColoringInstance& inst, bool list_mode,
                               const std::string& comment) {
    std::ostringstream out;
    if (!comment.empty()) out << "c " << comment << "\n";
    out << "p edge " << inst.g.n << " " << inst.g.m() << "\n";
    for (const auto& [u, v] : inst.g.edges) out << "e " << u + 1 << " " << v + 1 << "\n";
    if (list_mode) {
        out << "k " << inst.k << "\n";
        for (size_t i = 0; i < inst.lists.size(); ++i) {
            if (inst.lists[i] == inst.full_mask()) continue;
            const auto& [u, v] = inst.g.edges[i];
            out << "l " << u + 1 << " " << v + 1;
            for (int c = 0; c < inst.k; ++c)
                if (inst.lists[i] >> c & 1) out << " " << c + 1;
            out << "\n";
        }
    }
    return out.str();
}

int PeelResult::n_deleted() const {
    int c = 0;
    for (char d : deleted) c += d;
    return c;
}

PeelResult peel_unit_degree(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("peel_unit_degree: graph must be connected");
    PeelResult out;
    out.deleted.assign(g.n, 0);
    auto deg = g.degrees();
    const auto adj = g.adjacency();
    std::vector<int> queue;
    for (int v = 0; v < g.n; ++v)
        if (deg[v] <= 1) queue.push_back(v);
    while (!queue.empty()) {
        const int v = queue.back();
        queue.pop_back();
        if (out.deleted[v] || deg[v] > 1) continue;
        out.deleted[v] = 1;
        for (int w : adj[v]) {
            if (out.deleted[w]) continue;
            if (--deg[w] <= 1) queue.push_back(w);
        }
    }

    std::vector<int> kept;
    out.orig_to_kept.assign(g.n, -1);
    for (int v = 0; v < g.n; ++v) {
        if (!out.deleted[v]) {
            out.orig_to_kept[v] = static_cast<int>(kept.size());
            kept.push_back(v);
        }
    }
    out.kept_to_orig = kept;
    out.g_new = g.induced(kept, &out.new_edge_to_orig);

    // Components of the deleted forest, plus the unique attachment of each.
    std::vector<int> comp(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (!out.deleted[s] || comp[s] >= 0) continue;
        const int id = static_cast<int>(out.trees.size());
        out.trees.push_back({});
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            out.trees[id].verts.push_back(v);
            for (int w : adj[v]) {
                if (out.deleted[w] && comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    for (size_t e = 0; e < g.edges.size(); ++e) {
        const auto& [u, v] = g.edges[e];
        if (out.deleted[u] == out.deleted[v]) continue;
        const int tree = comp[out.deleted[u] ? u : v];
        const int anchor = out.deleted[u] ? v : u;
        PeelResult::TreeComp& tc = out.trees[tree];
        if (tc.attach_edge >= 0)
            throw std::logic_error("peel_unit_degree: deleted component with two connections");
        tc.attach_vertex = anchor;
        tc.attach_edge = static_cast<int>(e);
    }
    if (out.g_new.n > 0)
        for (const auto& tc : out.trees)
            if (tc.attach_edge < 0)
                throw std::logic_error("peel_unit_degree: deleted component with no connection");
    return out;
}

std::vector<std::vector<int>> star_decomposition(const PeelResult& p) {
    std::vector<std::vector<int>> stars(p.g_new.n);
    for (const auto& tc : p.trees) {
        if (tc.verts.size() != 1)
            throw std::invalid_argument(
                "star_decomposition: multi-vertex pendant component; prune trees first");
        stars[p.orig_to_kept[tc.attach_vertex]].push_back(tc.attach_edge);
    }
    return stars;
}

}  // namespace chromind
