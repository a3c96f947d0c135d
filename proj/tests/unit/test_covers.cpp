#include <doctest.h>

#include <set>
#include <sstream>

#include "foxjump/covers.hpp"
#include "support.hpp"

using namespace foxjump;

namespace {

std::int64_t sigma_oracle(std::int64_t n) {
    std::int64_t s = 0;
    for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0) s += d;
    return s;
}

// Upper-triangular Hermite bases of index n in Z^3: diagonal (a, b, c) with
// abc = n; the row above b has one free entry, the rows above c have two.
std::int64_t count3_oracle(std::int64_t n) {
    std::int64_t total = 0;
    for (std::int64_t a = 1; a <= n; ++a)
        for (std::int64_t b = 1; a * b <= n; ++b)
            if (n % (a * b) == 0) {
                const auto c = n / (a * b);
                total += b * c * c;
            }
    return total;
}

const AlexanderMatrix& cs_matrix() {
    static const auto a = alexander_matrix(cartwright_steger(), cartwright_steger_assignment());
    return a;
}

}  // namespace

TEST_CASE("sublattice examples") {
    const auto one = sublattices(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].upper_triangle() == std::vector<std::int64_t>{1, 0, 1});

    const auto two = sublattices(2);
    REQUIRE(two.size() == 3);
    CHECK(two[0].upper_triangle() == std::vector<std::int64_t>{1, 0, 2});
    CHECK(two[1].upper_triangle() == std::vector<std::int64_t>{1, 1, 2});
    CHECK(two[2].upper_triangle() == std::vector<std::int64_t>{2, 0, 1});

    CHECK(sublattices(6).size() == 12);
    for (const auto& l : sublattices(6)) CHECK(l.index() == 6);

    CHECK(sublattices(5, 1).size() == 1);
    CHECK_THROWS_AS(sublattices(0), std::invalid_argument);
    CHECK_THROWS_AS(sublattices(-3), std::invalid_argument);
    CHECK_THROWS_AS(sublattices(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(divisor_sum(0), std::invalid_argument);
}

TEST_CASE("sublattice counts equal the divisor sum") {
    for (std::int64_t n = 1; n <= 200; ++n) {
        CHECK(divisor_sum(n) == sigma_oracle(n));
        CHECK(static_cast<std::int64_t>(sublattices(n).size()) == sigma_oracle(n));
    }
    for (std::int64_t n = 1; n <= 12; ++n) CHECK(static_cast<std::int64_t>(sublattices(n, 3).size()) == count3_oracle(n));
}

TEST_CASE("sublattices are distinct and in Hermite form") {
    for (std::int64_t n = 1; n <= 30; ++n) {
        const auto all = sublattices(n);
        std::set<std::vector<std::int64_t>> seen;
        for (const auto& l : all) {
            CHECK(seen.insert(l.upper_triangle()).second);
            CHECK(Sublattice(l.basis()) == l);
            const auto& b = l.basis();
            CHECK(b(1, 0) == 0);
            CHECK(b(0, 1) >= 0);
            CHECK(b(0, 1) < b(1, 1));
        }
        for (std::size_t k = 0; k + 1 < all.size(); ++k) CHECK(all[k].upper_triangle() < all[k + 1].upper_triangle());
    }
}

TEST_CASE("Hermite form does not depend on the basis") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = testsupport::uniform(rng, 1, 40);
        const auto all = sublattices(n);
        const auto& l = all[static_cast<std::size_t>(testsupport::uniform(rng, 0, static_cast<std::int64_t>(all.size()) - 1))];
        auto b = l.basis();
        for (int step = 0; step < 4; ++step) {
            b.add_row_multiple(step % 2, 1 - step % 2, testsupport::uniform(rng, -5, 5));
            if (testsupport::uniform(rng, 0, 1)) b.swap_rows(0, 1);
            if (testsupport::uniform(rng, 0, 1)) b.negate_row(1);
        }
        const Sublattice again(b);
        CHECK(again == l);
        CHECK(again.index() == n);
        CHECK(betti_of_cover(cs_matrix(), 2, again) == betti_of_cover(cs_matrix(), 2, l));
    }
    CHECK_THROWS_AS(Sublattice(IntMatrix{{1, 2}, {2, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(Sublattice(IntMatrix(0, 0)), std::invalid_argument);
}

TEST_CASE("membership") {
    const Sublattice l(IntMatrix{{2, 1}, {0, 3}});
    CHECK(l.contains({2, 1}));
    CHECK(l.contains({0, 3}));
    CHECK(l.contains({2, 4}));
    CHECK(!l.contains({1, 0}));
    CHECK(!l.contains({0, 1}));
    CHECK_THROWS_AS(l.contains({1}), std::invalid_argument);
}

TEST_CASE("characters of a cyclic quotient") {
    const Sublattice l(IntMatrix{{1, 0}, {0, 3}});
    const auto spec = cover_spec(l);
    CHECK(spec.invariant_factors == std::vector<std::int64_t>{1, 3});
    CHECK(spec.order() == 3);
    CHECK(spec.exponent() == 3);
    const auto chars = characters_of_quotient(l);
    REQUIRE(chars.size() == 3);
    CHECK(chars[0].is_trivial());
    std::set<std::vector<std::int64_t>> got;
    for (const auto& c : chars) {
        CHECK(c.modulus == 3);
        got.insert(c.exponents);
    }
    CHECK(got == std::set<std::vector<std::int64_t>>{{0, 0}, {0, 1}, {0, 2}});
}

TEST_CASE("characters are exactly the duals of the quotient") {
    for (std::int64_t n = 1; n <= 24; ++n)
        for (const auto& l : sublattices(n)) {
            const auto chars = characters_of_quotient(l);
            CHECK(static_cast<std::int64_t>(chars.size()) == n);
            CHECK(chars[0].is_trivial());
            std::set<std::vector<std::int64_t>> distinct;
            std::size_t trivial = 0;
            for (const auto& c : chars) {
                const auto m = c.modulus;
                CHECK(m == cover_spec(l).exponent());
                distinct.insert(c.exponents);
                trivial += c.is_trivial();
                // kills every basis vector of L
                for (std::size_t i = 0; i < 2; ++i) {
                    std::int64_t pairing = 0;
                    for (std::size_t j = 0; j < 2; ++j) pairing += c.exponents[j] * l.basis()(i, j).get_si();
                    CHECK(pairing % m == 0);
                }
            }
            CHECK(distinct.size() == chars.size());
            CHECK(trivial == 1);
        }
}

TEST_CASE("Betti numbers of covers") {
    for (std::int64_t n = 1; n <= 8; ++n)
        for (const auto& l : sublattices(n)) CHECK(betti_of_cover(cs_matrix(), 2, l) == 2);

    // free group: Nielsen-Schreier gives rank n + 1 for every index-n subgroup
    const auto f2 = Presentation({"x", "y"}, {});
    const auto af2 = alexander_matrix(f2, monomial_assignment(f2));
    for (std::int64_t n = 1; n <= 10; ++n)
        for (const auto& l : sublattices(n)) CHECK(betti_of_cover(af2, 2, l) == n + 1);

    const auto trefoil = parse_presentation("gens: a b\nrel: a^2 b^-3");
    const auto at = alexander_matrix(trefoil, monomial_assignment(trefoil));
    CHECK(betti_of_cover(at, 1, Sublattice(IntMatrix{{6}})) == 3);
    CHECK(betti_of_cover(at, 1, Sublattice(IntMatrix{{5}})) == 1);
    CHECK_THROWS_AS(betti_of_cover(at, 1, Sublattice(IntMatrix{{2, 0}, {0, 1}})), ContextMismatch);
}

TEST_CASE("census") {
    std::vector<CensusRow> rows;
    const auto summary = betti_census(cartwright_steger(), cartwright_steger_assignment(), 6,
                                      [&](const CensusRow& r) { rows.push_back(r); });
    CHECK(rows.size() == 33);
    CHECK(summary.total_rows == 33);
    REQUIRE(summary.per_n.size() == 6);
    const std::vector<std::int64_t> expected{1, 3, 4, 7, 6, 12};
    for (std::size_t k = 0; k < 6; ++k) {
        CHECK(summary.per_n[k].n == static_cast<std::int64_t>(k + 1));
        CHECK(summary.per_n[k].rows == expected[k]);
        CHECK(summary.per_n[k].sigma == expected[k]);
    }
    CHECK(summary.counts_match());
    CHECK(summary.all_b1_equal(2));
    CHECK(summary.base_b1 == 2);
    for (std::size_t k = 0; k + 1 < rows.size(); ++k) CHECK(rows[k].n <= rows[k + 1].n);
    CHECK(rows[1].hnf == std::vector<std::int64_t>{1, 0, 2});
    CHECK(rows[1].invariant_factors == std::vector<std::int64_t>{1, 2});

    const auto single = betti_census(cartwright_steger(), cartwright_steger_assignment(), 1);
    CHECK(single.total_rows == 1);

    const auto f2 = Presentation({"x", "y"}, {});
    const auto free = betti_census(f2, monomial_assignment(f2), 5);
    CHECK(free.counts_match());
    for (const auto& t : free.per_n) {
        CHECK(t.min_b1 == t.n + 1);
        CHECK(t.max_b1 == t.n + 1);
    }
}

TEST_CASE("census errors") {
    const auto torsion = parse_presentation("gens: a b\nrel: a^2");
    CHECK_THROWS_AS(betti_census(torsion, monomial_assignment(torsion), 3), std::invalid_argument);
    const auto finite = parse_presentation("gens: a\nrel: a");
    CHECK_THROWS_AS(betti_census(finite, monomial_assignment(finite), 3), std::invalid_argument);
    CHECK_THROWS_AS(betti_census(cartwright_steger(), cartwright_steger_assignment(), 0), std::invalid_argument);
    const auto f3 = Presentation({"x", "y", "z"}, {});
    CHECK_THROWS_AS(betti_census(f3, cartwright_steger_assignment(), 2), ContextMismatch);
}

TEST_CASE("census serialization") {
    const CensusRow row{4, {1, 2, 4}, {1, 4}, 2};
    std::ostringstream os;
    write_csv_header(os);
    write_csv_row(os, row);
    CHECK(os.str() == "n,hnf,invariant_factors,b1\n4,1 2 4,1 4,2\n");
    const auto j = to_json(row);
    CHECK(j["n"] == 4);
    CHECK(j["b1"] == 2);
    CHECK(j["hnf"] == nlohmann::json::parse("[1,2,4]"));
}
