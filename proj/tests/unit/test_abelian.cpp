#include <doctest.h>

#include "foxjump/abelian.hpp"
#include "support.hpp"

using namespace foxjump;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = testsupport::uniform(rng, -range, range);
    return m;
}

bool is_diagonal_chain(const IntMatrix& d) {
    std::vector<mpz_class> diag;
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j) {
            if (i != j && d(i, j) != 0) return false;
            if (i == j) diag.push_back(d(i, j));
        }
    for (std::size_t k = 0; k + 1 < diag.size(); ++k) {
        if (diag[k] < 0) return false;
        if (diag[k] == 0) {
            if (diag[k + 1] != 0) return false;
        } else if (diag[k + 1] % diag[k] != 0) {
            return false;
        }
    }
    return diag.empty() || diag.back() >= 0;
}

}  // namespace

TEST_CASE("exponent matrix") {
    const auto e = exponent_matrix(cartwright_steger());
    REQUIRE(e.rows() == 12);
    REQUIRE(e.cols() == 3);
    CHECK(e(0, 0) == -7);
    CHECK(e(0, 1) == -2);
    CHECK(e(0, 2) == -3);
    CHECK(e(1, 0) == 0);
    CHECK(e(1, 1) == 0);
    CHECK(e(1, 2) == 0);
    const auto empty = exponent_matrix(Presentation({"a", "b"}, {}));
    CHECK(empty.rows() == 0);
    CHECK(empty.cols() == 2);
}

TEST_CASE("Smith normal form examples") {
    auto d = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
    CHECK(d.D == IntMatrix{{1, 0}, {0, 6}});
    auto cs = smith_normal_form(exponent_matrix(cartwright_steger()));
    CHECK(cs.invariant_factors() == std::vector<mpz_class>{1});
    auto z = smith_normal_form(IntMatrix(3, 2));
    CHECK(z.D == IntMatrix(3, 2));
    CHECK(z.U == IntMatrix::identity(3));
    CHECK(z.V == IntMatrix::identity(2));
}

TEST_CASE("Smith normal form properties on random matrices") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const auto rows = static_cast<std::size_t>(testsupport::uniform(rng, 1, 5));
        const auto cols = static_cast<std::size_t>(testsupport::uniform(rng, 1, 5));
        const auto m = random_matrix(rng, rows, cols, 6);
        const auto snf = smith_normal_form(m);
        CHECK(snf.U * m * snf.V == snf.D);
        CHECK(abs(determinant(snf.U)) == 1);
        CHECK(abs(determinant(snf.V)) == 1);
        CHECK(is_diagonal_chain(snf.D));
        CHECK(snf.rank() == integer_rank(m));
    }
}

TEST_CASE("determinant and rank") {
    CHECK(determinant(IntMatrix{{2, 1}, {1, 3}}) == 5);
    CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
    CHECK(integer_rank(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 2);
    CHECK(integer_rank(exponent_matrix(cartwright_steger())) == 1);
}

TEST_CASE("Hermite normal form") {
    CHECK(hermite_normal_form(IntMatrix{{2, 1}, {0, 2}}) == IntMatrix{{2, 1}, {0, 2}});
    CHECK(hermite_normal_form(IntMatrix{{0, 2}, {2, 1}}) == IntMatrix{{2, 1}, {0, 2}});
    CHECK(hermite_normal_form(IntMatrix{{2, 5}, {0, 3}}) == IntMatrix{{2, 2}, {0, 3}});
    CHECK(hermite_normal_form(IntMatrix{{1, 1}, {2, 2}}) == IntMatrix{{1, 1}});

    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const auto m = random_matrix(rng, 3, 3, 5);
        const auto h = hermite_normal_form(m);
        CHECK(h.rows() == integer_rank(m));
        // echelon with positive pivots and reduced entries above them
        std::size_t col = 0;
        for (std::size_t i = 0; i < h.rows(); ++i) {
            while (col < h.cols() && h(i, col) == 0) ++col;
            REQUIRE(col < h.cols());
            CHECK(h(i, col) > 0);
            for (std::size_t k = i + 1; k < h.rows(); ++k) CHECK(h(k, col) == 0);
            for (std::size_t k = 0; k < i; ++k) {
                CHECK(h(k, col) >= 0);
                CHECK(h(k, col) < h(i, col));
            }
            ++col;
        }
        // same lattice: idempotent, and unimodular row mixing does not change it
        CHECK(hermite_normal_form(h) == h);
        auto mixed = m;
        mixed.add_row_multiple(0, 1, testsupport::uniform(rng, -3, 3));
        mixed.swap_rows(1, 2);
        mixed.negate_row(0);
        CHECK(hermite_normal_form(mixed) == h);
    }
}

TEST_CASE("abelianization examples") {
    auto cs = abelianization(cartwright_steger());
    CHECK(cs.free_rank == 2);
    CHECK(cs.torsion.empty());
    auto f2 = abelianization(Presentation({"a", "b"}, {}));
    CHECK(f2.free_rank == 2);
    CHECK(f2.torsion.empty());
    auto z2 = abelianization(parse_presentation("gens: a\nrel: a^2"));
    CHECK(z2.free_rank == 0);
    CHECK(z2.torsion == std::vector<std::int64_t>{2});
    auto z2z6 = abelianization(parse_presentation("gens: a b\nrel: a^2\nrel: b^6\nrel: a b a^-1 b^-1"));
    CHECK(z2z6.torsion == std::vector<std::int64_t>{2, 6});
}

TEST_CASE("free rank is generators minus the rank of the exponent matrix") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<std::size_t>(testsupport::uniform(rng, 1, 4));
        std::vector<Word> rels;
        for (int k = 0; k < testsupport::uniform(rng, 0, 4); ++k) rels.push_back(testsupport::random_word(rng, n, 6, 3));
        std::vector<std::string> names;
        for (std::size_t g = 0; g < n; ++g) names.push_back("g" + std::to_string(g));
        Presentation p(names, rels);
        const auto ab = abelianization(p);
        CHECK(ab.free_rank == n - integer_rank(exponent_matrix(p)));
        for (std::size_t k = 0; k + 1 < ab.torsion.size(); ++k) CHECK(ab.torsion[k + 1] % ab.torsion[k] == 0);
        for (auto d : ab.torsion) CHECK(d > 1);
        // derived assignments always validate
        const auto map = monomial_assignment(p);
        CHECK(map.context->free_rank() == ab.free_rank);
        for (const auto& w : p.relations()) CHECK(map.image(w).is_identity());
        CHECK_NOTHROW(monomial_assignment(p, UserImages{map.context, map.images}));
    }
}

TEST_CASE("builtin assignment") {
    auto map = cartwright_steger_assignment();
    CHECK(map.context->names() == std::vector<std::string>{"r", "s"});
    CHECK(map.image(0).exps == Exponents{1, -1});
    CHECK(map.image(1).exps == Exponents{1, 2});
    CHECK(map.image(2).exps == Exponents{-3, 1});
    for (const auto& w : cartwright_steger().relations()) CHECK(map.image(w).is_identity());

    UserImages bad{map.context, {Monomial{{1, 0}}, Monomial{{0, 1}}, Monomial{{1, 0}}}};
    CHECK_THROWS_AS(monomial_assignment(cartwright_steger(), bad), InvalidAssignment);
    UserImages short_list{map.context, {Monomial{{1, 0}}}};
    CHECK_THROWS_AS(monomial_assignment(cartwright_steger(), short_list), InvalidAssignment);
}

TEST_CASE("derived assignments") {
    auto f2 = monomial_assignment(Presentation({"x", "y"}, {}));
    CHECK(f2.context->names() == std::vector<std::string>{"r", "s"});
    CHECK(f2.image(0).exps == Exponents{1, 0});
    CHECK(f2.image(1).exps == Exponents{0, 1});

    auto trefoil = monomial_assignment(parse_presentation("gens: a b\nrel: a^2 b^-3"));
    CHECK(trefoil.context->names() == std::vector<std::string>{"t"});
    CHECK(trefoil.image(0).exps == Exponents{3});
    CHECK(trefoil.image(1).exps == Exponents{2});

    auto cs = monomial_assignment(cartwright_steger());
    CHECK(cs.context->free_rank() == 2);
    for (const auto& w : cartwright_steger().relations()) CHECK(cs.image(w).is_identity());
    // repeated derivation is canonical
    CHECK(monomial_assignment(cartwright_steger()).images == cs.images);

    auto torsion = monomial_assignment(parse_presentation("gens: a b\nrel: a^2"));
    CHECK(torsion.context->free_rank() == 1);
    CHECK(torsion.context->torsion_moduli() == std::vector<std::int64_t>{2});
    CHECK(torsion.image(parse_presentation("gens: a b\nrel: a^2").relations()[0]).is_identity());
}
