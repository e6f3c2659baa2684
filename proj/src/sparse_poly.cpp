#include "chromind/sparse_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace chromind {

std::vector<int> monomial_supp(std::span<const uint32_t> exps) {
    std::vector<int> out;
    for (size_t i = 0; i < exps.size(); ++i)
        if (exps[i] > 0) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> monomial_osupp(std::span<const uint32_t> exps) {
    std::vector<int> out;
    for (size_t i = 0; i < exps.size(); ++i)
        if (exps[i] % 2 == 1) out.push_back(static_cast<int>(i));
    return out;
}

SparsePoly SparsePoly::constant(std::vector<std::string> vars, GF64 c) {
    SparsePoly p(std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

SparsePoly SparsePoly::variable(std::vector<std::string> vars, int idx) {
    SparsePoly p(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e.at(idx) = 1;
    p.add_term(e, GF64::one());
    return p;
}

SparsePoly SparsePoly::monomial(std::vector<std::string> vars, Exponents exps, GF64 c) {
    SparsePoly p(std::move(vars));
    if (exps.size() != p.vars_.size())
        throw std::invalid_argument("SparsePoly: exponent vector length mismatch");
    p.add_term(exps, c);
    return p;
}

int SparsePoly::degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (uint32_t x : e) t += static_cast<int>(x);
        d = std::max(d, t);
    }
    return d;
}

void SparsePoly::add_term(const Exponents& exps, GF64 c) {
    if (exps.size() != vars_.size())
        throw std::invalid_argument("SparsePoly: exponent vector length mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        if (terms_.size() >= kTermCap) throw std::length_error("SparsePoly: term cap exceeded");
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SparsePoly SparsePoly::remap(const std::vector<std::string>& new_vars) const {
    std::vector<int> pos(vars_.size(), -1);
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
        pos[i] = static_cast<int>(it - new_vars.begin());
    }
    SparsePoly out(new_vars);
    for (const auto& [e, c] : terms_) {
        Exponents ne(new_vars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        out.add_term(ne, c);
    }
    return out;
}

void SparsePoly::align(const SparsePoly& a, const SparsePoly& b, SparsePoly& a2, SparsePoly& b2) {
    if (a.vars_ == b.vars_) {
        a2 = a;
        b2 = b;
        return;
    }
    std::vector<std::string> merged = a.vars_;
    for (const std::string& v : b.vars_)
        if (std::find(merged.begin(), merged.end(), v) == merged.end()) merged.push_back(v);
    a2 = a.remap(merged);
    b2 = b.remap(merged);
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    SparsePoly a, b;
    align(*this, o, a, b);
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    SparsePoly a, b;
    align(*this, o, a, b);
    SparsePoly out(a.vars_);
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

GF64 SparsePoly::evaluate(std::span<const GF64> point) const {
    if (point.size() != vars_.size())
        throw std::invalid_argument("SparsePoly: evaluation point arity mismatch");
    GF64 total = GF64::zero();
    for (const auto& [e, c] : terms_) {
        GF64 t = c;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t *= point[i].pow(e[i]);
        total += t;
    }
    return total;
}

bool SparsePoly::has_monomial_divisible_by(std::span<const int> var_positions) const {
    for (const auto& [e, c] : terms_) {
        bool ok = true;
        for (int p : var_positions)
            if (e[p] == 0) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

bool SparsePoly::osupp_spans(const MatroidRep& m) const {
    if (m.size() != arity())
        throw std::invalid_argument("SparsePoly: matroid ground set does not match variables");
    for (const auto& [e, c] : terms_)
        if (m.spans(monomial_osupp(e))) return true;
    return false;
}

SparsePoly SparsePoly::coefficient_of_product(std::span<const int> t) const {
    std::vector<char> in_t(vars_.size(), 0);
    for (int p : t) in_t[p] = 1;
    std::vector<std::string> rest_vars;
    std::vector<int> rest_pos;
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (!in_t[i]) {
            rest_vars.push_back(vars_[i]);
            rest_pos.push_back(static_cast<int>(i));
        }
    }
    SparsePoly out(rest_vars);
    for (const auto& [e, c] : terms_) {
        bool keep = true;
        for (int p : t)
            if (e[p] != 1) {
                keep = false;
                break;
            }
        if (!keep) continue;
        Exponents ne(rest_pos.size());
        for (size_t i = 0; i < rest_pos.size(); ++i) ne[i] = e[rest_pos[i]];
        out.add_term(ne, c);
    }
    return out;
}

SparsePoly SparsePoly::restrict_zero(std::span<const int> var_positions) const {
    std::vector<char> zeroed(vars_.size(), 0);
    for (int p : var_positions) zeroed[p] = 1;
    SparsePoly out(vars_);
    for (const auto& [e, c] : terms_) {
        bool survives = true;
        for (size_t i = 0; i < e.size(); ++i)
            if (zeroed[i] && e[i] > 0) {
                survives = false;
                break;
            }
        if (survives) out.add_term(e, c);
    }
    return out;
}

std::string SparsePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.to_hex();
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            out += "*" + vars_[i];
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

namespace {

SparsePoly poly_matching_sum(const std::vector<std::vector<SparsePoly>>& a,
                             const std::vector<int>& alive,
                             const std::vector<std::string>& vars) {
    if (alive.empty()) return SparsePoly::constant(vars, GF64::one());
    SparsePoly total(vars);
    const int u = alive.front();
    for (size_t j = 1; j < alive.size(); ++j) {
        const int v = alive[j];
        if (a[u][v].is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(alive.size() - 2);
        for (size_t t = 1; t < alive.size(); ++t)
            if (t != j) rest.push_back(alive[t]);
        total = total + a[u][v] * poly_matching_sum(a, rest, vars);
    }
    return total;
}

}  // namespace

SparsePoly symbolic_pfaffian(const std::vector<std::vector<SparsePoly>>& a) {
    const int n = static_cast<int>(a.size());
    if (n > 12) throw std::invalid_argument("symbolic_pfaffian: dimension capped at 12");
    std::vector<std::string> vars;
    for (const auto& row : a) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("symbolic_pfaffian: matrix is not square");
        for (const auto& p : row)
            for (const std::string& v : p.vars())
                if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    }
    // Align every entry onto one shared variable list before expanding.
    std::vector<std::vector<SparsePoly>> aligned(n, std::vector<SparsePoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            aligned[i][j] = SparsePoly(vars) + a[i][j];
    for (int i = 0; i < n; ++i) {
        if (!aligned[i][i].is_zero())
            throw std::invalid_argument("symbolic_pfaffian: nonzero diagonal");
        for (int j = i + 1; j < n; ++j)
            if (!(aligned[i][j] + aligned[j][i]).is_zero())
                throw std::invalid_argument("symbolic_pfaffian: matrix is not symmetric");
    }
    if (n % 2 != 0) return SparsePoly(vars);
    std::vector<int> alive(n);
    for (int i = 0; i < n; ++i) alive[i] = i;
    return poly_matching_sum(aligned, alive, vars);
}

}  // namespace chromind
