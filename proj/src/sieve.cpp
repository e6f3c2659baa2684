#include "chromind/sieve.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace chromind {

EvalOracle oracle_from(const SparsePoly& p) {
    EvalOracle o;
    o.arity = p.arity();
    o.degree_bound = p.degree();
    o.fn = [poly = &p](std::span<const GF64> x) { return poly->evaluate(x); };
    return o;
}

EvalOracle oracle_from(const EnumerationContext& c) {
    EvalOracle o;
    o.arity = c.m();
    o.degree_bound = c.m();  // P is homogeneous of degree m in X
    o.fn = [ctx = &c](std::span<const GF64> x) { return evaluate_P(*ctx, x); };
    return o;
}

GF64 interpolate_coeff_at(std::span<const GF64> values, int target_power) {
    const int npts = static_cast<int>(values.size());
    if (target_power < 0 || target_power >= npts)
        throw std::invalid_argument("interpolate: target power outside the point range");
    std::vector<GF64> pts(npts);
    for (int i = 0; i < npts; ++i) pts[i] = GF64(static_cast<uint64_t>(i) + 1);

    // full(z) = prod_j (z + z_j); coefficients low to high.
    std::vector<GF64> full(npts + 1, GF64::zero());
    full[0] = GF64::one();
    for (int j = 0; j < npts; ++j) {
        for (int i = j + 1; i > 0; --i) full[i] = full[i - 1] + full[i] * pts[j];
        full[0] = full[0] * pts[j];
    }

    GF64 acc = GF64::zero();
    std::vector<GF64> quot(npts);
    for (int j = 0; j < npts; ++j) {
        // Synthetic division of full by (z + z_j).
        quot[npts - 1] = full[npts];
        for (int i = npts - 2; i >= 0; --i) quot[i] = full[i + 1] + pts[j] * quot[i + 1];
        GF64 denom = GF64::one();
        for (int i = 0; i < npts; ++i)
            if (i != j) denom *= pts[j] + pts[i];
        acc += values[j] * quot[target_power] * denom.inverse();
    }
    return acc;
}

GF64 interpolate_coeff(const std::function<GF64(GF64)>& f, int degree_bound, int target_power) {
    std::vector<GF64> values(degree_bound + 1);
    for (int t = 0; t <= degree_bound; ++t) values[t] = f(GF64(static_cast<uint64_t>(t) + 1));
    return interpolate_coeff_at(values, target_power);
}

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

EvalOracle ie_restrict(const EvalOracle& p, std::vector<int> t) {
    t = sorted_unique(t);
    for (int pos : t)
        if (pos < 0 || pos >= p.arity) throw std::invalid_argument("ie_restrict: bad position");
    EvalOracle out;
    out.arity = p.arity;
    out.degree_bound = p.degree_bound;
    out.calls = std::make_shared<std::atomic<uint64_t>>(0);
    out.fn = [p, t](std::span<const GF64> x) {
        std::vector<GF64> point(x.begin(), x.end());
        GF64 total = GF64::zero();
        const uint64_t subsets = uint64_t{1} << t.size();
        for (uint64_t s = 0; s < subsets; ++s) {
            for (size_t j = 0; j < t.size(); ++j)
                point[t[j]] = (s >> j & 1) ? GF64::zero() : x[t[j]];
            total += p(point);
        }
        return total;
    };
    return out;
}

EvalOracle coeff_extract(const EvalOracle& p, std::vector<int> t) {
    t = sorted_unique(t);
    for (int pos : t)
        if (pos < 0 || pos >= p.arity) throw std::invalid_argument("coeff_extract: bad position");
    std::vector<char> in_t(p.arity, 0);
    for (int pos : t) in_t[pos] = 1;
    std::vector<int> rest;
    for (int i = 0; i < p.arity; ++i)
        if (!in_t[i]) rest.push_back(i);

    EvalOracle out;
    out.arity = static_cast<int>(rest.size());
    out.degree_bound = std::max(0, p.degree_bound - static_cast<int>(t.size()));
    out.calls = std::make_shared<std::atomic<uint64_t>>(0);
    const int d = p.degree_bound;
    out.fn = [p, t, rest, d](std::span<const GF64> xr) {
        std::vector<GF64> point(static_cast<size_t>(p.arity), GF64::zero());
        for (size_t i = 0; i < rest.size(); ++i) point[rest[i]] = xr[i];
        if (t.empty()) return p(point);
        GF64 total = GF64::zero();
        const int zd = std::max(d, static_cast<int>(t.size()));
        std::vector<GF64> values(zd + 1);
        const uint64_t subsets = uint64_t{1} << t.size();
        for (uint64_t s = 0; s < subsets; ++s) {
            for (int tp = 0; tp <= zd; ++tp) {
                const GF64 z(static_cast<uint64_t>(tp) + 1);
                for (size_t j = 0; j < t.size(); ++j)
                    point[t[j]] = (s >> j & 1) ? GF64::zero() : z;
                values[tp] = p(point);
            }
            total += interpolate_coeff_at(values, static_cast<int>(t.size()));
        }
        return total;
    };
    return out;
}

SieveVerdict odd_sieve(const EvalOracle& p, const MatroidRep& m, int degree_bound, SplitRng rng,
                       int jobs) {
    if (m.size() != p.arity)
        throw std::invalid_argument("odd_sieve: matroid ground set must match the variables");
    const int k = m.rank();
    const int n = p.arity;
    const int d = std::max(degree_bound, k);  // the q^k extraction needs k+1 points
    if (k > 30) throw std::invalid_argument("odd_sieve: rank too large to enumerate");

    std::vector<GF64> rho(n), twist(n);
    for (int j = 0; j < n; ++j) rho[j] = rng.next_field();
    for (int j = 0; j < n; ++j) twist[j] = rng.next_field();

    const uint64_t total_masks = uint64_t{1} << k;
    const uint64_t before = p.calls->load();

    auto run_range = [&](uint64_t lo, uint64_t hi, std::vector<GF64>& sums) {
        std::vector<GF64> base(n), x(n);
        for (uint64_t w = lo; w < hi; ++w) {
            for (int j = 0; j < n; ++j) {
                GF64 colsum = GF64::zero();
                uint64_t rowbits = w;
                while (rowbits != 0) {
                    const int i = __builtin_ctzll(rowbits);
                    rowbits &= rowbits - 1;
                    colsum += m.rep.at(i, j);
                }
                base[j] = rho[j] * twist[j] * colsum;
            }
            for (int tp = 0; tp <= d; ++tp) {
                const GF64 q(static_cast<uint64_t>(tp) + 1);
                for (int j = 0; j < n; ++j) x[j] = rho[j] + q * base[j];
                sums[tp] += p(x);
            }
        }
    };

    std::vector<GF64> sums(d + 1, GF64::zero());
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(total_masks)));
    if (workers == 1) {
        run_range(0, total_masks, sums);
    } else {
        std::vector<std::vector<GF64>> partial(workers, std::vector<GF64>(d + 1, GF64::zero()));
        std::vector<std::thread> threads;
        const uint64_t chunk = (total_masks + workers - 1) / workers;
        for (int wkr = 0; wkr < workers; ++wkr) {
            const uint64_t lo = wkr * chunk;
            const uint64_t hi = std::min<uint64_t>(total_masks, lo + chunk);
            threads.emplace_back([&, lo, hi, wkr] { run_range(lo, hi, partial[wkr]); });
        }
        for (auto& th : threads) th.join();
        for (const auto& part : partial)
            for (int tp = 0; tp <= d; ++tp) sums[tp] += part[tp];
    }

    SieveVerdict out;
    out.found = !interpolate_coeff_at(sums, k).is_zero();
    out.evaluations_used = p.calls->load() - before;
    return out;
}

SieveVerdict partition_sieve(const EvalOracle& p, const PartitionSpec& spec, int degree_bound,
                             SplitRng rng, int jobs) {
    std::vector<char> seen(p.arity, 0);
    int covered = 0;
    for (const auto& part : spec.parts)
        for (int pos : part) {
            if (pos < 0 || pos >= p.arity || seen[pos])
                throw std::invalid_argument("partition_sieve: parts must partition the variables");
            seen[pos] = 1;
            ++covered;
        }
    if (covered != p.arity)
        throw std::invalid_argument("partition_sieve: parts must cover every variable");
    if (spec.rank() != degree_bound)
        throw std::invalid_argument("partition_sieve: capacities must sum to the degree");
    PartitionSpec lowered = spec;
    for (size_t i = 0; i < lowered.capacities.size(); ++i) {
        if (lowered.capacities[i] < 1)
            throw std::invalid_argument("partition_sieve: capacities must be positive");
        --lowered.capacities[i];
    }
    std::vector<std::string> labels(p.arity);
    for (int i = 0; i < p.arity; ++i) labels[i] = "g" + std::to_string(i);
    const MatroidRep lowered_rep = partition_rep(lowered, std::move(labels));
    return odd_sieve(p, lowered_rep, degree_bound, rng, jobs);
}

SieveVerdict detect_full_monomial(const EnumerationContext& ctx, const std::vector<int>& domset,
                                  SplitRng rng, int jobs) {
    std::vector<char> in_d(ctx.g.n, 0);
    for (int v : domset) in_d[v] = 1;
    {
        std::vector<char> covered = in_d;
        const auto adj = ctx.g.adjacency();
        for (int v : domset)
            for (int w : adj[v]) covered[w] = 1;
        for (int v = 0; v < ctx.g.n; ++v)
            if (!covered[v])
                throw std::invalid_argument("detect_full_monomial: set does not dominate");
    }

    std::vector<int> eprime, rest;
    for (int e = 0; e < ctx.m(); ++e) {
        const auto [u, w] = ctx.g.edges[e];
        if (in_d[u] != in_d[w]) eprime.push_back(e);
        else rest.push_back(e);
    }

    const EvalOracle p = oracle_from(ctx);
    const EvalOracle q = coeff_extract(p, rest);

    // One part per vertex outside the dominating set, holding its crossing
    // edges; capacities equal the part sizes, so E' is the unique basis.
    std::vector<int> part_of_vertex(ctx.g.n, -1);
    PartitionSpec spec;
    for (size_t j = 0; j < eprime.size(); ++j) {
        const auto [u, w] = ctx.g.edges[eprime[j]];
        const int outside = in_d[u] ? w : u;
        if (part_of_vertex[outside] < 0) {
            part_of_vertex[outside] = static_cast<int>(spec.parts.size());
            spec.parts.emplace_back();
        }
        spec.parts[part_of_vertex[outside]].push_back(static_cast<int>(j));
    }
    spec.capacities.resize(spec.parts.size());
    for (size_t i = 0; i < spec.parts.size(); ++i)
        spec.capacities[i] = static_cast<int>(spec.parts[i].size());

    const uint64_t before = p.calls->load();
    SieveVerdict verdict =
        partition_sieve(q, spec, static_cast<int>(eprime.size()), rng.split(3), jobs);
    verdict.evaluations_used = p.calls->load() - before;
    return verdict;
}

SieveVerdict detect_full_monomial_ie(const EnumerationContext& ctx, SplitRng rng) {
    const EvalOracle p = oracle_from(ctx);
    std::vector<int> all(ctx.m());
    for (int e = 0; e < ctx.m(); ++e) all[e] = e;
    const EvalOracle q = ie_restrict(p, all);
    std::vector<GF64> point(ctx.m());
    for (int e = 0; e < ctx.m(); ++e) point[e] = rng.next_field();
    const uint64_t before = p.calls->load();
    SieveVerdict out;
    out.found = !q(point).is_zero();
    out.evaluations_used = p.calls->load() - before;
    return out;
}

}  // namespace chromind
