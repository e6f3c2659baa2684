#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chromind/domset.hpp"
#include "chromind/graph.hpp"

namespace chromind {

enum class SolveMode { kAuto, kSieve, kIE, kBrute };

struct SolverConfig {
    SolveMode mode = SolveMode::kAuto;
    uint64_t seed = 1;
    int trials = 3;  // independent Y/sieve seeds before reporting NO
    DomsetMethod domset_method = DomsetMethod::kAuto;
    int jobs = 1;
    int brute_threshold_m = 8;  // constant-size remainder handled exactly
};

struct Verdict {
    std::string problem;
    bool yes = false;  // list answer; for edge coloring, chi' == Delta
    int chromatic_index = 0;
    int delta = 0;
    int cls = 0;  // 1 or 2, edge coloring only
    std::string method;
    std::string domset_method = "-";
    int domset_size = 0;
    int core_n = 0;  // vertices of the sieved min-degree-2 cores
    uint64_t evaluations = 0;
    uint64_t seed = 0;
    int trials = 0;
    double alpha_d = 0.0;  // regular variant only
};

// Decide chi'(G) = Delta vs Delta+1: peel unit-degree vertices, brute-force
// constant remainders, otherwise dominating-set-accelerated sieving.
Verdict edge_coloring(const Graph& g, const SolverConfig& cfg);

// Regular-graph variant: certified-minimum dominating set, with the harmonic
// size bound asserted.
Verdict edge_coloring_regular(const Graph& g, const SolverConfig& cfg);

// Trees solved exactly; otherwise peel, prune pendant trees to stars, check
// stars, and sieve with extension matroids on the min-degree-2 core.
Verdict list_edge_coloring(const ColoringInstance& inst, const SolverConfig& cfg);

int brute_force_chromatic_index(const Graph& g, std::vector<int>* witness = nullptr,
                                int cap_m = 16);
bool brute_force_list_colorable(const ColoringInstance& inst, std::vector<int>* witness = nullptr,
                                int cap_m = 16);

bool is_proper_edge_coloring(const Graph& g, const std::vector<int>& colors);

// Proper edge coloring with at most Delta+1 colors by fan recoloring;
// verified before returning.
std::vector<int> vizing_upper(const Graph& g);

}  // namespace chromind
