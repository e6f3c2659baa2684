#include "chromind/enum_poly.hpp"

#include <stdexcept>
#include <string>

namespace chromind {

EnumerationContext build_context(const ColoringInstance& inst, ContextMode mode,
                                 const std::vector<std::vector<uint64_t>>* star_lists,
                                 SplitRng& rng) {
    inst.validate();
    EnumerationContext ctx;
    ctx.g = inst.g;
    ctx.k = inst.k;
    ctx.lists = inst.lists;

    const auto deg = ctx.g.degrees();
    SplitRng matroid_rng = rng.split(1);
    for (int v = 0; v < ctx.g.n; ++v) {
        std::vector<std::string> labels(ctx.k);
        for (int i = 0; i < ctx.k; ++i)
            labels[i] = "v" + std::to_string(v) + "c" + std::to_string(i + 1);
        if (mode == ContextMode::kEdgeColoring) {
            ctx.vertex_matroids.push_back(uniform_rep(std::move(labels), deg[v]));
        } else {
            if (star_lists == nullptr)
                throw std::invalid_argument("build_context: list mode requires star lists");
            SplitRng vr = matroid_rng.split(static_cast<uint64_t>(v));
            MatroidRep mv = extension_matroid((*star_lists)[v], ctx.k, deg[v], vr);
            mv.ground = std::move(labels);
            ctx.vertex_matroids.push_back(std::move(mv));
        }
    }

    ctx.row_offset.resize(ctx.g.n);
    int rows = 0;
    for (int v = 0; v < ctx.g.n; ++v) {
        ctx.row_offset[v] = rows;
        rows += deg[v];
    }
    if (rows != 2 * ctx.m())
        throw std::logic_error("build_context: matroid ranks do not sum to 2m");
    ctx.b = MatrixF(rows, ctx.k * ctx.g.n);
    ctx.row_owner.resize(rows);
    for (int v = 0; v < ctx.g.n; ++v) {
        const MatroidRep& mv = ctx.vertex_matroids[v];
        for (int r = 0; r < mv.rank(); ++r) {
            ctx.row_owner[ctx.row_offset[v] + r] = v;
            for (int i = 0; i < ctx.k; ++i)
                ctx.b.at(ctx.row_offset[v] + r, ctx.col(v, i)) = mv.rep.at(r, i);
        }
    }

    SplitRng y_rng = rng.split(2);
    ctx.y.assign(ctx.m(), std::vector<GF64>(ctx.k));
    for (int e = 0; e < ctx.m(); ++e)
        for (int i = 0; i < ctx.k; ++i) ctx.y[e][i] = y_rng.next_field();
    return ctx;
}

GF64 evaluate_P(const EnumerationContext& ctx, std::span<const GF64> x_assign) {
    const int m2 = 2 * ctx.m();
    const int kn = ctx.k * ctx.g.n;
    if (static_cast<int>(x_assign.size()) != ctx.m())
        throw std::invalid_argument("evaluate_P: assignment must cover every edge");

    // BA has nonzeros only at (row of u, column (w, i)) for edges {u, w} in
    // E_i, which keeps the congruence product near-linear in the B blocks.
    MatrixF ba(m2, kn);
    for (int e = 0; e < ctx.m(); ++e) {
        const auto [u, w] = ctx.g.edges[e];
        uint64_t mask = ctx.lists[e];
        while (mask != 0) {
            const int i = __builtin_ctzll(mask);
            mask &= mask - 1;
            const GF64 val = x_assign[e] * ctx.y[e][i];
            const int cu = ctx.col(u, i), cw = ctx.col(w, i);
            const int du = ctx.vertex_matroids[u].rank(), dw = ctx.vertex_matroids[w].rank();
            for (int r = 0; r < du; ++r) {
                const int row = ctx.row_offset[u] + r;
                ba.at(row, cw) += ctx.b.at(row, cu) * val;
            }
            for (int r = 0; r < dw; ++r) {
                const int row = ctx.row_offset[w] + r;
                ba.at(row, cu) += ctx.b.at(row, cw) * val;
            }
        }
    }

    MatrixF c(m2, m2);
    for (int rp = 0; rp < m2; ++rp) {
        const int v = ctx.row_owner[rp];
        for (int r = 0; r < m2; ++r) {
            GF64 acc = GF64::zero();
            for (int i = 0; i < ctx.k; ++i)
                acc += ba.at(r, ctx.col(v, i)) * ctx.b.at(rp, ctx.col(v, i));
            c.at(r, rp) = acc;
        }
    }
    // B A B^T is skew-symmetric by construction over characteristic two.
    return c.pfaffian(false);
}

SparsePoly symbolic_P(const EnumerationContext& ctx) {
    const int kn = ctx.k * ctx.g.n;
    const int m2 = 2 * ctx.m();
    if (kn > 12 || ctx.m() > 8)
        throw std::invalid_argument("symbolic_P: oracle caps are kn <= 12 and m <= 8");

    std::vector<std::string> vars(ctx.m());
    for (int e = 0; e < ctx.m(); ++e) vars[e] = "x" + std::to_string(e);

    // Symbolic A: entry ((u,i),(w,i)) = y_ei * x_e for e = {u,w} in E_i.
    std::vector<std::vector<SparsePoly>> a(kn, std::vector<SparsePoly>(kn, SparsePoly(vars)));
    for (int e = 0; e < ctx.m(); ++e) {
        const auto [u, w] = ctx.g.edges[e];
        for (int i = 0; i < ctx.k; ++i) {
            if (!(ctx.lists[e] >> i & 1)) continue;
            SparsePoly entry = SparsePoly::constant(vars, ctx.y[e][i]) * SparsePoly::variable(vars, e);
            a[ctx.col(u, i)][ctx.col(w, i)] = entry;
            a[ctx.col(w, i)][ctx.col(u, i)] = entry;
        }
    }

    SparsePoly total(vars);
    if (m2 > kn) return total;
    std::vector<int> subset(m2);
    for (int i = 0; i < m2; ++i) subset[i] = i;
    while (true) {
        const GF64 detb = ctx.b.select_columns(subset).det();
        if (!detb.is_zero()) {
            std::vector<std::vector<SparsePoly>> sub(m2, std::vector<SparsePoly>(m2));
            for (int i = 0; i < m2; ++i)
                for (int j = 0; j < m2; ++j) sub[i][j] = a[subset[i]][subset[j]];
            total = total + SparsePoly::constant(vars, detb) * symbolic_pfaffian(sub);
        }
        int i = m2 - 1;
        while (i >= 0 && subset[i] == kn - m2 + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < m2; ++j) subset[j] = subset[j - 1] + 1;
    }
    return total;
}

}  // namespace chromind
