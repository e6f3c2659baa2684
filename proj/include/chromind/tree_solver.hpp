#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "chromind/graph.hpp"

namespace chromind {

struct TreeInstance {
    Graph tree;
    int k = 0;
    std::vector<uint64_t> lists;
    std::optional<std::pair<int, int>> forced;  // (edge id, color), color in 0..k-1
};

// Exact decision by bottom-up DP: an edge can take a color iff the incident
// subtrees admit a system of distinct colors, checked with a bipartite
// matching per (edge, color).
bool tree_list_colorable(const TreeInstance& t);

// Colors i in L_e such that the tree is colorable with e forced to i.
uint64_t admissible_root_colors(const TreeInstance& t, int root_edge);

// Replace every attached tree by its connecting edge with the recomputed
// admissible list; nullopt when some list comes back empty (a NO instance).
std::optional<ColoringInstance> prune_trees(const ColoringInstance& inst, const PeelResult& peel);

}  // namespace chromind
