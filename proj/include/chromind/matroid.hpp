#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chromind/matrix.hpp"
#include "chromind/rng.hpp"

namespace chromind {

/*
 * Linear matroid given by an r x n representation matrix whose row count
 * equals the matroid rank.  A column set is independent iff the selected
 * columns have full rank.
 */
struct MatroidRep {
    MatrixF rep;
    std::vector<std::string> ground;

    int rank() const { return rep.rows(); }
    int size() const { return rep.cols(); }

    bool is_independent(std::span<const int> cols) const {
        if (static_cast<int>(cols.size()) > rank()) return false;
        return rep.select_columns(cols).rank() == static_cast<int>(cols.size());
    }

    bool spans(std::span<const int> cols) const {
        return rep.select_columns(cols).rank() == rank();
    }

    std::string debug_string() const;
};

// Disjoint parts with per-part capacities; rank is the capacity sum.
struct PartitionSpec {
    std::vector<std::vector<int>> parts;  // positions into the ground set
    std::vector<int> capacities;

    int rank() const {
        int r = 0;
        for (int c : capacities) r += c;
        return r;
    }
};

// Signals a pendant star that admits no proper list edge coloring (or a
// truncation request past the dual's rank); the solver maps this to NO.
struct StarInfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Vandermonde representation on the field encodings 1, 2, ... of the ground
// positions; deterministic, every r columns independent.
MatroidRep uniform_rep(std::vector<std::string> ground, int r);

MatroidRep partition_rep(const PartitionSpec& spec, std::vector<std::string> ground);

MatroidRep direct_sum(std::span<const MatroidRep> reps);

// Randomized transversal matroid representation on the left vertex set;
// one-sided whp (independent sets are always saturable by a matching).
MatroidRep transversal_rep(std::vector<std::string> left, int right_count,
                           const std::vector<std::pair<int, int>>& edges, SplitRng& rng);

MatroidRep dual_rep(const MatroidRep& m);

MatroidRep truncate_rep(const MatroidRep& m, int h, SplitRng& rng);

// Matroid over the k color copies of a vertex whose bases B of size d_new
// leave the pendant star colorable from lists L_e minus the colors named by
// B.  Built as transversal -> dual -> d_new-truncation.
MatroidRep extension_matroid(const std::vector<uint64_t>& star_edge_lists, int k, int d_new,
                             SplitRng& rng);

}  // namespace chromind
