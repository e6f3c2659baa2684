#pragma once

#include <string>
#include <vector>

#include "chromind/graph.hpp"

namespace chromind {

struct DomSetResult {
    std::vector<int> vertices;  // sorted
    bool certified_minimum = false;
    std::string method;
    int size() const { return static_cast<int>(vertices.size()); }
};

enum class DomsetMethod { kAuto, kOre, kStructured, kExhaustive };

bool is_dominating(const Graph& g, const std::vector<int>& set);

// Minimal dominating set vs its complement, whichever is smaller; at most
// ceil(n/2) vertices on connected inputs.  Not a certified minimum.
DomSetResult ore_half(const Graph& g);

// Minimum dominating set of the path v_0..v_{p-1} with the endpoint pattern
// fixed by p mod 3: both endpoints (p = 1), exactly one (p = 2), neither (p = 0).
std::vector<int> path_domset(int p);

// Certified minimum for connected graphs of minimum degree two: enumerate
// guesses over the degree->=3 vertices and resolve the degree-2 paths by
// per-length casework plus a final bipartite matching.
DomSetResult min_domset_structured(const Graph& g);

DomSetResult min_domset_exhaustive(const Graph& g, int cap_n = 24);

// Dispatcher used by the solver pipelines; certifies the strongest bound the
// chosen method supports.
DomSetResult domset_for_solver(const Graph& g, DomsetMethod method = DomsetMethod::kAuto);

}  // namespace chromind
