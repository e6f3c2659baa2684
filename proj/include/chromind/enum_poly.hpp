#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "chromind/graph.hpp"
#include "chromind/matroid.hpp"
#include "chromind/sparse_poly.hpp"

namespace chromind {

enum class ContextMode { kEdgeColoring, kListColoring };

/*
 * Evaluation oracle for the matching-enumerating polynomial P(X, Y) =
 * Pf(B A B^T).  The Y variables are fixed to random field values at build
 * time, so evaluation takes an X assignment (one value per edge) to a field
 * element.  B is the block-diagonal representation of the direct sum of the
 * per-vertex matroids: uniform of rank deg(v) in edge mode, extension
 * matroids in list mode.
 */
struct EnumerationContext {
    Graph g;
    int k = 0;
    std::vector<uint64_t> lists;              // color membership per edge
    std::vector<MatroidRep> vertex_matroids;  // M_v over the k copies of v
    MatrixF b;                                // 2m x kn
    std::vector<int> row_offset;              // first B row of each vertex block
    std::vector<int> row_owner;               // vertex owning each B row
    std::vector<std::vector<GF64>> y;         // y[edge][color]

    int n() const { return g.n; }
    int m() const { return g.m(); }
    int col(int v, int i) const { return v * k + i; }
};

// star_lists (list mode only): per-vertex pendant edge masks; an unsatisfiable
// star surfaces as StarInfeasibleError.
EnumerationContext build_context(const ColoringInstance& inst, ContextMode mode,
                                 const std::vector<std::vector<uint64_t>>* star_lists,
                                 SplitRng& rng);

GF64 evaluate_P(const EnumerationContext& ctx, std::span<const GF64> x_assign);

// Fully expanded P over the edge variables (Y folded into coefficients),
// via the Ishikawa-Wakayama subset expansion; oracle scale only.
SparsePoly symbolic_P(const EnumerationContext& ctx);

}  // namespace chromind
