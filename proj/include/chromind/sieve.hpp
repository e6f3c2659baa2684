#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "chromind/enum_poly.hpp"
#include "chromind/matroid.hpp"
#include "chromind/sparse_poly.hpp"

namespace chromind {

/*
 * Black-box polynomial evaluation oracle with call instrumentation.  Oracles
 * compose: the inclusion-exclusion and coefficient-extraction transforms wrap
 * an inner oracle, whose counter keeps tracking the base evaluations.
 */
struct EvalOracle {
    int arity = 0;
    int degree_bound = 0;
    std::function<GF64(std::span<const GF64>)> fn;
    std::shared_ptr<std::atomic<uint64_t>> calls = std::make_shared<std::atomic<uint64_t>>(0);

    GF64 operator()(std::span<const GF64> x) const {
        calls->fetch_add(1, std::memory_order_relaxed);
        return fn(x);
    }
};

EvalOracle oracle_from(const SparsePoly& p);         // p must outlive the oracle
EvalOracle oracle_from(const EnumerationContext& c); // likewise

struct SieveVerdict {
    bool found = false;  // one-sided: YES is certified by a nonzero value
    uint64_t evaluations_used = 0;
    uint64_t seed = 0;
};

// Coefficient of z^target_power from degree_bound+1 evaluations at the field
// encodings 1..degree_bound+1.
GF64 interpolate_coeff(const std::function<GF64(GF64)>& f, int degree_bound, int target_power);
GF64 interpolate_coeff_at(std::span<const GF64> values_at_points, int target_power);

// Oracle for the sub-polynomial of monomials divisible by prod_{x in t} x,
// as the 2^|t| characteristic-2 sum of zero-restrictions.
EvalOracle ie_restrict(const EvalOracle& p, std::vector<int> t);

// Oracle over the remaining variables for the coefficient of prod_{x in t} x:
// substitute x -> xz on t, interpolate the z^|t| coefficient, then
// inclusion-exclusion with the t variables pinned to one.
EvalOracle coeff_extract(const EvalOracle& p, std::vector<int> t);

// Detects a monomial whose odd support spans m, with O(d 2^rank) evaluations:
// a subset-enumeration transform over row subsets of the representation with
// per-variable scalar twists, isolating the q^rank coefficient by
// interpolation in an auxiliary variable.
SieveVerdict odd_sieve(const EvalOracle& p, const MatroidRep& m, int degree_bound, SplitRng rng,
                       int jobs = 1);

// Detects a monomial whose support is a basis of the partition matroid, for
// polynomials compatible with it (per-part degrees equal the capacities);
// delegates to odd_sieve with capacities lowered by one.
SieveVerdict partition_sieve(const EvalOracle& p, const PartitionSpec& spec, int degree_bound,
                             SplitRng rng, int jobs = 1);

// Dominating-set-accelerated test for a monomial divisible by every edge
// variable: extract the coefficient of the non-crossing edges, then partition
// sieve the crossing edges grouped by their endpoint outside the dominating
// set.
SieveVerdict detect_full_monomial(const EnumerationContext& ctx, const std::vector<int>& domset,
                                  SplitRng rng, int jobs = 1);

// Plain 2^m inclusion-exclusion detection over all edges; the slow exact
// baseline with no dominating-set speedup.
SieveVerdict detect_full_monomial_ie(const EnumerationContext& ctx, SplitRng rng);

}  // namespace chromind
