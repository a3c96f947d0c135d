#include <doctest.h>

#include "foxjump/laurent.hpp"
#include "foxjump/strata.hpp"
#include "support.hpp"

using namespace foxjump;

namespace {

const ContextPtr& rs() {
    static const auto ctx = VariableContext::make({"r", "s"});
    return ctx;
}

LaurentPoly r() { return LaurentPoly::monomial(rs(), {1, 0}); }
LaurentPoly s() { return LaurentPoly::monomial(rs(), {0, 1}); }
LaurentPoly one() { return LaurentPoly::constant(rs(), 1); }

}  // namespace

TEST_CASE("ring operations on small examples") {
    CHECK(((r() - s()) + (s() - r())).is_zero());
    CHECK((r() - s()) * (r() + s()) == r() * r() - s() * s());
    CHECK(r() * LaurentPoly::monomial(rs(), {-1, 0}) == one());
    CHECK(add(r(), neg(r())).is_zero());
    CHECK(mul(r(), s()) == LaurentPoly::monomial(rs(), {1, 1}));
}

TEST_CASE("zero coefficients are never stored") {
    LaurentPoly p(rs());
    p.add_term({1, 2}, 3);
    p.add_term({1, 2}, -3);
    CHECK(p.is_zero());
    CHECK(p.term_count() == 0);
    auto q = LaurentPoly::from_terms(rs(), {{2, {0, 0}}, {-2, {0, 0}}, {1, {1, 0}}});
    CHECK(q == r());
}

TEST_CASE("operations across contexts are rejected") {
    auto t = VariableContext::make({"t"});
    CHECK_THROWS_AS(r() + LaurentPoly::monomial(t, {1}), ContextMismatch);
    CHECK_THROWS_AS(r() * LaurentPoly::monomial(t, {1}), ContextMismatch);
    // equal contexts built separately are compatible
    auto rs2 = VariableContext::make({"r", "s"});
    CHECK(r() + LaurentPoly::monomial(rs2, {0, 1}) == r() + s());
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = testsupport::random_poly(rng, rs());
        auto b = testsupport::random_poly(rng, rs());
        auto c = testsupport::random_poly(rng, rs());
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("exact division examples") {
    CHECK(exact_divide(r() * r() - s() * s(), r() - s()) == r() + s());
    CHECK(exact_divide(r() - s(), r() - s()) == one());
    try {
        exact_divide(r() - s() + one(), r() - s());
        FAIL("expected NotDivisible");
    } catch (const NotDivisible& e) {
        CHECK(!e.remainder().is_zero());
    }
    CHECK_THROWS_AS(exact_divide(r(), LaurentPoly(rs())), DivisionByZeroPoly);
    // Laurent units are cleared before dividing
    auto d = (r() - s()).shifted({-3, 2});
    CHECK(exact_divide((r() + one()) * d, d) == r() + one());
}

TEST_CASE("exact division inverts multiplication") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        auto p = testsupport::random_poly(rng, rs());
        auto d = testsupport::random_nonzero_poly(rng, rs());
        CHECK(exact_divide(p * d, d) == p);
    }
}

TEST_CASE("exact division is unavailable with torsion") {
    auto ctx = VariableContext::make({"t"}, {"u"}, {2});
    auto u = LaurentPoly::monomial(ctx, {0, 1});
    CHECK_THROWS_AS(exact_divide(u, u), ContextMismatch);
}

TEST_CASE("substitution examples") {
    auto line = VariableContext::make({"r"});
    std::vector<Monomial> s_to_r{Monomial{{1}}, Monomial{{1}}};
    CHECK(substitute(r() * LaurentPoly::monomial(rs(), {0, -1}), s_to_r, line) == LaurentPoly::constant(line, 1));
    CHECK(substitute(r() - s(), s_to_r, line).is_zero());
    auto t = VariableContext::make({"t"});
    CHECK(substitute(LaurentPoly::monomial(rs(), {1, 2}), {Monomial{{3}}, Monomial{{2}}}, t) ==
          LaurentPoly::monomial(t, {7}));
    CHECK_THROWS_AS(substitute(r(), {Monomial{{1}}}, line), ContextMismatch);
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937_64 rng(13);
    auto t = VariableContext::make({"t"});
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Monomial> images{Monomial{{testsupport::uniform(rng, -3, 3)}},
                                     Monomial{{testsupport::uniform(rng, -3, 3)}}};
        auto p = testsupport::random_poly(rng, rs());
        auto q = testsupport::random_poly(rng, rs());
        CHECK(substitute(p * q, images, t) == substitute(p, images, t) * substitute(q, images, t));
        CHECK(substitute(p + q, images, t) == substitute(p, images, t) + substitute(q, images, t));
    }
}

TEST_CASE("torsion exponents are reduced") {
    auto ctx = VariableContext::make({"t"}, {"u"}, {3});
    auto u = LaurentPoly::monomial(ctx, {0, 1});
    CHECK(u * u * u == LaurentPoly::constant(ctx, 1));
    CHECK(LaurentPoly::monomial(ctx, {0, -1}) == u * u);
    CHECK(LaurentPoly::monomial(ctx, {0, 5}).leading_monomial().exps == Exponents{0, 2});
}

TEST_CASE("canonical order and rendering") {
    auto p = r() * r() - LaurentPoly::monomial(rs(), {1, -1}) * mpz_class(2) + one();
    CHECK(p.to_string() == "r^2 - 2*r*s^-1 + 1");
    CHECK(p.leading_monomial().exps == Exponents{2, 0});
    CHECK(LaurentPoly(rs()).to_string() == "0");
    auto q = -(LaurentPoly::monomial(rs(), {4, -1}) + LaurentPoly::monomial(rs(), {0, 0}));
    CHECK(q.to_paper_string() == "-(r^4 + s)/s");
}

TEST_CASE("term list encoding") {
    auto p = LaurentPoly::monomial(rs(), {2, -1}, 3) - one();
    CHECK(terms_to_json(p).dump() == "[[3,2,-1],[-1,0,0]]");
    mpz_class big("123456789012345678901234567890");
    CHECK(terms_to_json(LaurentPoly::constant(rs(), big)).dump() == "[[\"123456789012345678901234567890\",0,0]]");
}
