#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chromind/rng.hpp"

namespace chromind {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/*
 * Undirected simple graph on dense vertex indices 0..n-1.  No loops, no
 * multi-edges; edges are stored with the smaller endpoint first and addressed
 * by their index in the edge list.
 */
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    Graph() = default;
    explicit Graph(int n_) : n(n_) {}

    void add_edge(int u, int v);
    int edge_index(int u, int v) const;  // -1 if absent
    int m() const { return static_cast<int>(edges.size()); }

    std::vector<std::vector<int>> adjacency() const;
    std::vector<std::vector<int>> incident_edges() const;  // edge ids per vertex
    std::vector<int> degrees() const;
    int max_degree() const;

    // Component id per vertex, ids dense from 0.
    std::vector<int> component_ids(int* count = nullptr) const;
    int component_count() const;
    bool is_connected() const;
    bool is_tree() const;

    Graph induced(const std::vector<int>& verts, std::vector<int>* edge_map = nullptr) const;

    static Graph cycle(int n);
    static Graph complete(int n);
    static Graph path(int n);
    static Graph random_gnm(int n, int m, SplitRng& rng);
    static Graph random_regular(int n, int d, SplitRng& rng);
};

/*
 * A coloring instance: graph, color count k, and a per-edge admissible-color
 * bitmask over colors 0..k-1.  Plain edge coloring uses k = max degree and
 * full lists.
 */
struct ColoringInstance {
    Graph g;
    int k = 0;
    std::vector<uint64_t> lists;

    static ColoringInstance edge_coloring(Graph g);
    static ColoringInstance with_full_lists(Graph g, int k);
    uint64_t full_mask() const { return k >= 64 ? ~uint64_t{0} : (uint64_t{1} << k) - 1; }
    void validate() const;
};

struct ParsedInstance {
    ColoringInstance inst;
    bool list_mode = false;
};

ParsedInstance parse_instance(std::istream& in);
ParsedInstance parse_instance_file(const std::string& path);
std::string serialize_instance(const ColoringInstance& inst, bool list_mode,
                               const std::string& comment = "");

/*
 * Result of exhaustively deleting unit-degree vertices.  The deleted vertices
 * form a forest; each component attaches to g_new by exactly one edge at
 * exactly one vertex, which peeling asserts.  Empty g_new means the input was
 * a tree.
 */
struct PeelResult {
    Graph g_new;
    std::vector<int> kept_to_orig;
    std::vector<int> orig_to_kept;      // -1 for deleted vertices
    std::vector<int> new_edge_to_orig;  // edge ids into the original graph
    std::vector<char> deleted;

    struct TreeComp {
        std::vector<int> verts;  // original vertex ids
        int attach_vertex = -1;  // original id of the unique g_new endpoint
        int attach_edge = -1;    // original id of the unique connecting edge
    };
    std::vector<TreeComp> trees;

    int n_deleted() const;
};

PeelResult peel_unit_degree(const Graph& g);  // pre: g connected

// Per-kept-vertex pendant edge ids (original ids).  Requires every deleted
// component to be a single vertex; run tree pruning first otherwise.
std::vector<std::vector<int>> star_decomposition(const PeelResult& p);

}  // namespace chromind
