#pragma once

#include <vector>

namespace chromind {

// Maximum bipartite matching (augmenting paths).  adj[x] lists the right
// vertices available to left vertex x.  Returns the matching size; match_left,
// when given, receives the matched right vertex per left vertex or -1.
int max_bipartite_matching(const std::vector<std::vector<int>>& adj, int n_right,
                           std::vector<int>* match_left = nullptr);

}  // namespace chromind
