#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "chromind/gf64.hpp"
#include "chromind/matroid.hpp"

namespace chromind {

std::vector<int> monomial_supp(std::span<const uint32_t> exps);
std::vector<int> monomial_osupp(std::span<const uint32_t> exps);

/*
 * Exact sparse multivariate polynomial over GF(2^64): the desk-scale symbolic
 * oracle.  Terms map dense exponent vectors to nonzero coefficients; the term
 * count is hard-capped because this is a validator, not a solver path.
 */
class SparsePoly {
public:
    using Exponents = std::vector<uint32_t>;
    using TermMap = std::map<Exponents, GF64>;

    static constexpr size_t kTermCap = 1'000'000;

    SparsePoly() = default;
    explicit SparsePoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static SparsePoly constant(std::vector<std::string> vars, GF64 c);
    static SparsePoly variable(std::vector<std::string> vars, int idx);
    static SparsePoly monomial(std::vector<std::string> vars, Exponents exps, GF64 c);

    const std::vector<std::string>& vars() const { return vars_; }
    int arity() const { return static_cast<int>(vars_.size()); }
    const TermMap& terms() const { return terms_; }
    size_t num_terms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;

    void add_term(const Exponents& exps, GF64 c);

    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator*(const SparsePoly& o) const;

    GF64 evaluate(std::span<const GF64> point) const;

    bool has_monomial_divisible_by(std::span<const int> var_positions) const;

    // True iff some term's odd-support column set spans m; the matroid ground
    // set must line up with the variable list.
    bool osupp_spans(const MatroidRep& m) const;

    // Terms with degree exactly one in every variable of t, as a polynomial
    // over the remaining variables.
    SparsePoly coefficient_of_product(std::span<const int> t) const;

    SparsePoly restrict_zero(std::span<const int> var_positions) const;

    // Canonical rendering: terms in exponent order, hex coefficients.
    std::string to_string() const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    static void align(const SparsePoly& a, const SparsePoly& b, SparsePoly& a2, SparsePoly& b2);
    SparsePoly remap(const std::vector<std::string>& new_vars) const;
};

// Defining matching sum over a symbolic skew-symmetric matrix; dimension <= 12.
SparsePoly symbolic_pfaffian(const std::vector<std::vector<SparsePoly>>& a);

}  // namespace chromind
