#include "chromind/matroid.hpp"

#include <set>

#include "chromind/matching.hpp"

namespace chromind {

namespace {

void check_ground_disjoint(std::span<const MatroidRep> reps) {
    std::set<std::string> seen;
    for (const MatroidRep& m : reps)
        for (const std::string& g : m.ground)
            if (!seen.insert(g).second)
                throw std::invalid_argument("direct_sum: ground label collision: " + g);
}

}  // namespace

std::string MatroidRep::debug_string() const {
    std::string out = "ground:";
    for (const std::string& g : ground) out += " " + g;
    out += "\n" + rep.to_hex_grid();
    return out;
}

MatroidRep uniform_rep(std::vector<std::string> ground, int r) {
    const int n = static_cast<int>(ground.size());
    if (r > n) throw std::invalid_argument("uniform_rep: rank exceeds ground size");
    MatrixF rep(r, n);
    for (int j = 0; j < n; ++j) {
        const GF64 p(static_cast<uint64_t>(j) + 1);
        GF64 pw = GF64::one();
        for (int i = 0; i < r; ++i) {
            rep.at(i, j) = pw;
            pw *= p;
        }
    }
    return MatroidRep{std::move(rep), std::move(ground)};
}

MatroidRep partition_rep(const PartitionSpec& spec, std::vector<std::string> ground) {
    if (spec.parts.size() != spec.capacities.size())
        throw std::invalid_argument("partition_rep: parts/capacities size mismatch");
    const int n = static_cast<int>(ground.size());
    std::vector<char> used(n, 0);
    for (const auto& part : spec.parts)
        for (int p : part) {
            if (p < 0 || p >= n) throw std::invalid_argument("partition_rep: position out of range");
            if (used[p]) throw std::invalid_argument("partition_rep: parts not disjoint");
            used[p] = 1;
        }
    for (size_t i = 0; i < spec.parts.size(); ++i) {
        if (spec.capacities[i] < 0 ||
            spec.capacities[i] > static_cast<int>(spec.parts[i].size()))
            throw std::invalid_argument("partition_rep: capacity exceeds part size");
    }
    MatrixF rep(spec.rank(), n);
    int row = 0;
    for (size_t i = 0; i < spec.parts.size(); ++i) {
        const auto& part = spec.parts[i];
        std::vector<std::string> part_labels(part.size());
        for (size_t j = 0; j < part.size(); ++j) part_labels[j] = ground[part[j]];
        MatroidRep blk = uniform_rep(std::move(part_labels), spec.capacities[i]);
        for (int r = 0; r < blk.rank(); ++r)
            for (size_t j = 0; j < part.size(); ++j)
                rep.at(row + r, part[j]) = blk.rep.at(r, static_cast<int>(j));
        row += blk.rank();
    }
    return MatroidRep{std::move(rep), std::move(ground)};
}

MatroidRep direct_sum(std::span<const MatroidRep> reps) {
    check_ground_disjoint(reps);
    std::vector<MatrixF> blocks;
    std::vector<std::string> ground;
    blocks.reserve(reps.size());
    for (const MatroidRep& m : reps) {
        blocks.push_back(m.rep);
        ground.insert(ground.end(), m.ground.begin(), m.ground.end());
    }
    return MatroidRep{block_diag(blocks), std::move(ground)};
}

MatroidRep transversal_rep(std::vector<std::string> left, int right_count,
                           const std::vector<std::pair<int, int>>& edges, SplitRng& rng) {
    const int n = static_cast<int>(left.size());
    MatrixF raw(right_count, n);
    for (const auto& [x, u] : edges) {
        if (x < 0 || x >= n || u < 0 || u >= right_count)
            throw std::invalid_argument("transversal_rep: edge endpoint out of range");
        raw.at(u, x) = rng.next_nonzero();
    }
    const int r = raw.row_echelon();
    MatrixF rep(r, n);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) rep.at(i, j) = raw.at(i, j);
    return MatroidRep{std::move(rep), std::move(left)};
}

MatroidRep dual_rep(const MatroidRep& m) {
    const int r = m.rank();
    const int n = m.size();
    MatrixF work = m.rep;
    std::vector<int> pivots;
    if (work.row_echelon(&pivots) != r)
        throw std::invalid_argument("dual_rep: representation is not full row rank");
    std::vector<char> is_pivot(n, 0);
    for (int p : pivots) is_pivot[p] = 1;
    std::vector<int> free_cols;
    for (int j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    // In pivot-first column order the reduced matrix reads [I_r | D]; the dual
    // is [D^T | I_{n-r}] restored to the original column order.
    MatrixF dual(n - r, n);
    for (int j = 0; j < n - r; ++j) {
        for (int i = 0; i < r; ++i) dual.at(j, pivots[i]) = work.at(i, free_cols[j]);
        dual.at(j, free_cols[j]) = GF64::one();
    }
    return MatroidRep{std::move(dual), m.ground};
}

MatroidRep truncate_rep(const MatroidRep& m, int h, SplitRng& rng) {
    if (h > m.rank()) throw std::invalid_argument("truncate_rep: h exceeds rank");
    MatrixF t(h, m.rank());
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < m.rank(); ++j) t.at(i, j) = rng.next_field();
    return MatroidRep{t * m.rep, m.ground};
}

MatroidRep extension_matroid(const std::vector<uint64_t>& star_edge_lists, int k, int d_new,
                             SplitRng& rng) {
    const int n_edges = static_cast<int>(star_edge_lists.size());
    std::vector<std::string> ground(k);
    for (int i = 0; i < k; ++i) ground[i] = "c" + std::to_string(i + 1);

    std::vector<std::vector<int>> adj(k);
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < n_edges; ++e) {
        for (int i = 0; i < k; ++i) {
            if (star_edge_lists[e] >> i & 1) {
                adj[i].push_back(e);
                edges.emplace_back(i, e);
            }
        }
    }
    // Exact feasibility first: the star is list-colorable iff a matching
    // saturates its edge set.
    if (max_bipartite_matching(adj, n_edges) < n_edges)
        throw StarInfeasibleError("extension_matroid: star admits no proper list edge coloring");
    if (d_new > k - n_edges)
        throw StarInfeasibleError("extension_matroid: requested rank exceeds dual rank");

    for (int attempt = 0; attempt < 8; ++attempt) {
        SplitRng sub = rng.split(static_cast<uint64_t>(attempt) + 17);
        MatroidRep trans = transversal_rep(ground, n_edges, edges, sub);
        if (trans.rank() != n_edges) continue;  // vanishing-determinant fluke
        return truncate_rep(dual_rep(trans), d_new, sub);
    }
    throw std::logic_error("extension_matroid: transversal representation kept losing rank");
}

}  // namespace chromind
