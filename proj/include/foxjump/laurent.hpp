#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace foxjump {

using Exponents = std::vector<std::int64_t>;

/// Variables of a group ring Z[Z^f x Z/d_1 x ... x Z/d_k]. The first
/// `free_rank` names are free Laurent variables, the remaining ones are
/// torsion variables whose exponents live in [0, d_i).
class VariableContext {
   public:
    VariableContext(std::vector<std::string> free_names, std::vector<std::string> torsion_names = {},
                    std::vector<std::int64_t> torsion_moduli = {});

    static std::shared_ptr<const VariableContext> make(std::vector<std::string> free_names,
                                                       std::vector<std::string> torsion_names = {},
                                                       std::vector<std::int64_t> torsion_moduli = {});

    std::size_t free_rank() const noexcept { return free_rank_; }
    std::size_t size() const noexcept { return names_.size(); }
    std::size_t torsion_count() const noexcept { return names_.size() - free_rank_; }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<std::int64_t>& torsion_moduli() const noexcept { return moduli_; }
    bool has_torsion() const noexcept { return !moduli_.empty(); }

    /// Reduces torsion coordinates into [0, d_i).
    void normalize(Exponents& e) const;

    bool operator==(const VariableContext& other) const = default;

   private:
    std::vector<std::string> names_;
    std::size_t free_rank_;
    std::vector<std::int64_t> moduli_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

bool same_context(const ContextPtr& a, const ContextPtr& b) noexcept;

class ContextMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct Monomial {
    Exponents exps;

    bool is_identity() const noexcept;
    bool operator==(const Monomial&) const = default;
};

/// Graded lexicographic order on free exponents, then lex on torsion
/// exponents. `TermOrder{f}(a, b)` is true when a sorts before b, i.e. a is
/// the larger monomial; maps keyed with it iterate leading term first.
struct TermOrder {
    std::size_t free_rank = 0;
    bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

class LaurentPoly {
   public:
    using TermMap = std::map<Monomial, mpz_class, TermOrder>;

    explicit LaurentPoly(ContextPtr ctx);

    static LaurentPoly constant(ContextPtr ctx, const mpz_class& c);
    static LaurentPoly monomial(ContextPtr ctx, Exponents exps, const mpz_class& c = 1);
    /// Builds from `(coefficient, exponents)` pairs; repeated monomials are summed.
    static LaurentPoly from_terms(ContextPtr ctx, const std::vector<std::pair<mpz_class, Exponents>>& terms);

    const ContextPtr& context() const noexcept { return ctx_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    /// Coefficient of the given monomial (zero when absent).
    mpz_class coefficient(const Exponents& exps) const;
    const Monomial& leading_monomial() const;
    const mpz_class& leading_coefficient() const;

    /// Componentwise minimum of the free exponents over all terms.
    Exponents min_free_exponents() const;

    void add_term(Exponents exps, const mpz_class& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const mpz_class& c);

    /// Multiplies by the unit x^exps.
    LaurentPoly shifted(const Exponents& exps) const;

    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    friend LaurentPoly operator*(LaurentPoly lhs, const mpz_class& c) { return lhs *= c; }

    bool operator==(const LaurentPoly& rhs) const;

    /// Plain sum-of-terms rendering, e.g. `r^2 - 2*r*s^-1 + 1`.
    std::string to_string() const;
    /// Numerator with nonnegative exponents over a single monomial
    /// denominator, e.g. `-(r^4*s^2 + s^3)/s^3`.
    std::string to_paper_string() const;

   private:
    void check_context(const LaurentPoly& other) const;

    ContextPtr ctx_;
    TermMap terms_;
};

class DivisionByZeroPoly : public std::domain_error {
   public:
    DivisionByZeroPoly() : std::domain_error("division by the zero polynomial") {}
};

class NotDivisible : public std::domain_error {
   public:
    explicit NotDivisible(LaurentPoly remainder);
    const LaurentPoly& remainder() const noexcept { return remainder_; }

   private:
    LaurentPoly remainder_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly neg(const LaurentPoly& p);

/// Returns q with q * d == p. Throws NotDivisible (with the remainder of
/// the division in the polynomial ring after clearing Laurent units) or
/// DivisionByZeroPoly. Free contexts only; torsion raises ContextMismatch.
LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& d);

/// Ring homomorphism sending variable i of p's context to the monomial
/// images[i] of `target`.
LaurentPoly substitute(const LaurentPoly& p, const std::vector<Monomial>& images, const ContextPtr& target);

Monomial monomial_product(const VariableContext& ctx, const Monomial& a, const Monomial& b);
Monomial monomial_power(const VariableContext& ctx, const Monomial& a, std::int64_t k);

/// Rectangular matrix of Laurent polynomials sharing one context.
class LaurentMatrix {
   public:
    LaurentMatrix(ContextPtr ctx, std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const ContextPtr& context() const noexcept { return ctx_; }

    LaurentPoly& operator()(std::size_t i, std::size_t j) { return entries_.at(i * cols_ + j); }
    const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }

    bool operator==(const LaurentMatrix& rhs) const;

   private:
    ContextPtr ctx_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<LaurentPoly> entries_;
};

LaurentMatrix substitute(const LaurentMatrix& m, const std::vector<Monomial>& images, const ContextPtr& target);

}  // namespace foxjump
