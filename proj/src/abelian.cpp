#include "foxjump/abelian.hpp"

#include <sstream>

namespace foxjump {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("IntMatrix rows must have equal length");
        for (auto v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix product: dimension mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

namespace {

// Bareiss elimination; returns the rank and leaves the last pivot (the
// determinant up to sign for square full-rank input) in `last_pivot`.
std::size_t bareiss(IntMatrix a, mpz_class& last_pivot, int& sign) {
    const auto m = a.rows(), n = a.cols();
    mpz_class prev = 1;
    std::size_t rank = 0;
    sign = 1;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t p = rank;
        while (p < m && a(p, col) == 0) ++p;
        if (p == m) continue;
        if (p != rank) {
            a.swap_rows(p, rank);
            sign = -sign;
        }
        for (std::size_t i = rank + 1; i < m; ++i) {
            for (std::size_t j = col + 1; j < n; ++j) {
                mpz_class v = a(rank, col) * a(i, j) - a(i, col) * a(rank, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = v;
            }
            a(i, col) = 0;
        }
        prev = a(rank, col);
        ++rank;
    }
    last_pivot = prev;
    return rank;
}

}  // namespace

mpz_class determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() == 0) return 1;
    mpz_class pivot;
    int sign = 1;
    const auto rank = bareiss(m, pivot, sign);
    if (rank < m.rows()) return 0;
    return sign * pivot;
}

std::size_t integer_rank(const IntMatrix& m) {
    mpz_class pivot;
    int sign = 1;
    return bareiss(m, pivot, sign);
}

std::vector<mpz_class> SmithForm::invariant_factors() const {
    std::vector<mpz_class> out;
    for (std::size_t k = 0; k < std::min(D.rows(), D.cols()); ++k)
        if (D(k, k) != 0) out.push_back(D(k, k));
    return out;
}

std::size_t SmithForm::rank() const { return invariant_factors().size(); }

SmithForm smith_normal_form(const IntMatrix& m) {
    const auto rows = m.rows(), cols = m.cols();
    SmithForm s{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
    auto& D = s.D;

    auto move_to_pivot = [&](std::size_t t, std::size_t i, std::size_t j) {
        D.swap_rows(t, i);
        s.U.swap_rows(t, i);
        D.swap_cols(t, j);
        s.V.swap_cols(t, j);
    };

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // Smallest nonzero entry of the trailing block, lowest row then column.
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (D(i, j) != 0 && (pi == rows || abs(D(i, j)) < abs(D(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows) break;
        move_to_pivot(t, pi, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (D(i, t) == 0) continue;
                const mpz_class q = D(i, t) / D(t, t);
                D.add_row_multiple(i, t, -q);
                s.U.add_row_multiple(i, t, -q);
                if (D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (D(t, j) == 0) continue;
                const mpz_class q = D(t, j) / D(t, t);
                D.add_col_multiple(j, t, -q);
                s.V.add_col_multiple(j, t, -q);
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) {
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (D(i, t) != 0 && abs(D(i, t)) < abs(D(bi, bj))) {
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (D(t, j) != 0 && abs(D(t, j)) < abs(D(bi, bj))) {
                        bi = t;
                        bj = j;
                    }
                move_to_pivot(t, bi, bj);
                continue;
            }
            std::size_t bad_row = rows;
            for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
                        bad_row = i;
                        break;
                    }
            if (bad_row == rows) break;
            D.add_row_multiple(t, bad_row, 1);
            s.U.add_row_multiple(t, bad_row, 1);
        }
        if (D(t, t) < 0) {
            D.negate_row(t);
            s.U.negate_row(t);
        }
    }
    return s;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
    IntMatrix h = m;
    const auto rows = h.rows(), cols = h.cols();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        for (;;) {
            std::size_t p = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (h(i, col) != 0 && (p == rows || abs(h(i, col)) < abs(h(p, col)))) p = i;
            if (p == rows) break;
            h.swap_rows(r, p);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (h(i, col) == 0) continue;
                const mpz_class q = h(i, col) / h(r, col);
                h.add_row_multiple(i, r, -q);
                if (h(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h(r, col) == 0) continue;
        if (h(r, col) < 0) h.negate_row(r);
        for (std::size_t i = 0; i < r; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(r, col).get_mpz_t());
            h.add_row_multiple(i, r, -q);
        }
        ++r;
    }
    IntMatrix out(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = h(i, j);
    return out;
}

IntMatrix exponent_matrix(const Presentation& p) {
    IntMatrix e(p.relation_count(), p.generator_count());
    for (std::size_t j = 0; j < p.relation_count(); ++j)
        for (const auto& s : p.relations()[j].syllables()) e(j, s.generator) += s.exponent;
    return e;
}

AbelianStructure abelianization(const Presentation& p) {
    AbelianStructure a;
    a.smith = smith_normal_form(exponent_matrix(p));
    const auto factors = a.smith.invariant_factors();
    a.free_rank = p.generator_count() - factors.size();
    for (const auto& d : factors)
        if (d > 1) a.torsion.push_back(d.get_si());
    return a;
}

Monomial AbelianizationMap::image(const Word& w) const {
    Monomial out{Exponents(context->size(), 0)};
    for (const auto& s : w.syllables()) {
        const auto& img = images.at(s.generator).exps;
        for (std::size_t k = 0; k < out.exps.size(); ++k) out.exps[k] += s.exponent * img[k];
    }
    context->normalize(out.exps);
    return out;
}

namespace {

void validate(const Presentation& p, const AbelianizationMap& map) {
    if (map.images.size() != p.generator_count())
        throw InvalidAssignment("assignment needs one image per generator");
    for (const auto& img : map.images)
        if (img.exps.size() != map.context->size()) throw InvalidAssignment("image outside the assignment context");
    for (std::size_t j = 0; j < p.relation_count(); ++j)
        if (!map.image(p.relations()[j]).is_identity())
            throw InvalidAssignment("relation " + std::to_string(j + 1) + " does not map to the identity");
}

std::vector<std::string> free_names(std::size_t f) {
    if (f == 1) return {"t"};
    if (f == 2) return {"r", "s"};
    std::vector<std::string> out;
    for (std::size_t k = 1; k <= f; ++k) out.push_back("t" + std::to_string(k));
    return out;
}

}  // namespace

AbelianizationMap monomial_assignment(const Presentation& p, const std::optional<UserImages>& user_images) {
    if (user_images) {
        AbelianizationMap map{user_images->context, user_images->images};
        if (!map.context) throw InvalidAssignment("assignment has no context");
        validate(p, map);
        return map;
    }

    const auto ab = abelianization(p);
    const auto n = p.generator_count();
    const auto& V = ab.smith.V;
    const auto& D = ab.smith.D;
    const auto rank = ab.smith.rank();
    const auto f = ab.free_rank;

    std::vector<std::string> torsion_names;
    std::vector<std::size_t> torsion_cols;
    for (std::size_t k = 0; k < rank; ++k)
        if (D(k, k) > 1) {
            torsion_cols.push_back(k);
            torsion_names.push_back("u" + std::to_string(torsion_cols.size()));
        }
    auto ctx = VariableContext::make(free_names(f), torsion_names, ab.torsion);

    // Free block of V, transposed and Hermite-reduced: canonical up to the
    // choice of basis of the free quotient.
    IntMatrix block(f, n);
    for (std::size_t c = 0; c < f; ++c)
        for (std::size_t i = 0; i < n; ++i) block(c, i) = V(i, rank + c);
    const auto h = f ? hermite_normal_form(block) : block;

    AbelianizationMap map{ctx, {}};
    for (std::size_t i = 0; i < n; ++i) {
        Exponents e(ctx->size(), 0);
        for (std::size_t c = 0; c < f; ++c) e[c] = h(c, i).get_si();
        for (std::size_t k = 0; k < torsion_cols.size(); ++k) e[f + k] = V(i, torsion_cols[k]).get_si();
        ctx->normalize(e);
        map.images.push_back(Monomial{std::move(e)});
    }
    validate(p, map);
    return map;
}

AbelianizationMap cartwright_steger_assignment() {
    static const auto ctx = VariableContext::make({"r", "s"});
    UserImages images{ctx, {Monomial{{1, -1}}, Monomial{{1, 2}}, Monomial{{-3, 1}}}};
    return monomial_assignment(cartwright_steger(), images);
}

}  // namespace foxjump
