#include "chromind/matching.hpp"

namespace chromind {

namespace {

bool augment(int x, const std::vector<std::vector<int>>& adj, std::vector<int>& match_right,
             std::vector<char>& seen) {
    for (int y : adj[x]) {
        if (seen[y]) continue;
        seen[y] = 1;
        if (match_right[y] < 0 || augment(match_right[y], adj, match_right, seen)) {
            match_right[y] = x;
            return true;
        }
    }
    return false;
}

}  // namespace

int max_bipartite_matching(const std::vector<std::vector<int>>& adj, int n_right,
                           std::vector<int>* match_left) {
    const int n_left = static_cast<int>(adj.size());
    std::vector<int> match_right(n_right, -1);
    int size = 0;
    for (int x = 0; x < n_left; ++x) {
        std::vector<char> seen(n_right, 0);
        if (augment(x, adj, match_right, seen)) ++size;
    }
    if (match_left) {
        match_left->assign(n_left, -1);
        for (int y = 0; y < n_right; ++y)
            if (match_right[y] >= 0) (*match_left)[match_right[y]] = y;
    }
    return size;
}

}  // namespace chromind
