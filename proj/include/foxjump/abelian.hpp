#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "foxjump/laurent.hpp"
#include "foxjump/presentation.hpp"

namespace foxjump {

class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    mpz_class& operator()(std::size_t i, std::size_t j) { return data_.at(i * cols_ + j); }
    const mpz_class& operator()(std::size_t i, std::size_t j) const { return data_.at(i * cols_ + j); }

    IntMatrix transpose() const;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    bool operator==(const IntMatrix&) const = default;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& k);
    /// col[dst] += k * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& k);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    std::string to_string() const;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> data_;
};

/// Exact determinant of a square matrix (fraction-free elimination).
mpz_class determinant(const IntMatrix& m);
std::size_t integer_rank(const IntMatrix& m);

struct SmithForm {
    IntMatrix U, D, V;  // U * M * V == D

    /// Nonzero diagonal entries of D, in order (each divides the next).
    std::vector<mpz_class> invariant_factors() const;
    std::size_t rank() const;
};

/// Smith normal form with smallest-absolute-value pivoting; ties broken by
/// lowest row, then lowest column.
SmithForm smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form: the row space basis in echelon form with
/// positive pivots and entries above each pivot reduced into [0, pivot).
/// Zero rows are dropped.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Relations x generators matrix of total exponents.
IntMatrix exponent_matrix(const Presentation& p);

struct AbelianStructure {
    std::size_t free_rank = 0;
    std::vector<std::int64_t> torsion;  // d_1 | d_2 | ...
    SmithForm smith;                   // of the exponent matrix
};

AbelianStructure abelianization(const Presentation& p);

/// Images of the generators in Z[H_1] as Laurent monomials.
struct AbelianizationMap {
    ContextPtr context;
    std::vector<Monomial> images;

    const Monomial& image(std::size_t generator) const { return images.at(generator); }
    /// Image of a word.
    Monomial image(const Word& w) const;
};

class InvalidAssignment : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct UserImages {
    ContextPtr context;
    std::vector<Monomial> images;
};

/// With user images: validates that every relation maps to the identity
/// monomial and returns them. Without: derives images from the Smith
/// change of basis, with the free block Hermite-reduced so the result is
/// canonical. Derived contexts name free variables t (rank 1), r, s
/// (rank 2) or t1..tf, and torsion variables u1..uk.
AbelianizationMap monomial_assignment(const Presentation& p, const std::optional<UserImages>& user_images = {});

/// The assignment x -> r s^-1, y -> r s^2, z -> r^-3 s for cartwright_steger().
AbelianizationMap cartwright_steger_assignment();

}  // namespace foxjump
