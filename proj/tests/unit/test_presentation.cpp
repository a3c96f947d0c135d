#include <doctest.h>

#include "foxjump/presentation.hpp"
#include "support.hpp"

using namespace foxjump;

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<Syllable> syl(std::initializer_list<std::pair<std::size_t, std::int64_t>> v) {
    std::vector<Syllable> out;
    for (auto [g, e] : v) out.push_back({g, e});
    return out;
}

}  // namespace

TEST_CASE("parse examples") {
    auto p = parse_presentation("gens: x y z\nrel: x y^-1");
    CHECK(p.generator_count() == 3);
    REQUIRE(p.relation_count() == 1);
    CHECK(p.relations()[0].syllables() == syl({{0, 1}, {1, -1}}));

    auto q = parse_presentation("gens: a\nrel: a a^-1");
    REQUIRE(q.relation_count() == 1);
    CHECK(q.relations()[0].empty());

    CHECK_THROWS_AS(parse_presentation("gens: x\nrel: x^0"), ParseError);
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_presentation("gens: x y\n# comment\nrel: x w");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 8);
    }
    CHECK_THROWS_AS(parse_presentation("rel: x\ngens: x"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: x x"), ParseError);
    CHECK_THROWS_AS(parse_presentation("rel x"), ParseError);
    CHECK_THROWS_AS(parse_presentation(""), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: x\nrel: x^"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: x\nrel: x^-"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: x\ngens: y"), ParseError);
}

TEST_CASE("comments and blank lines are ignored") {
    auto p = parse_presentation("# group\n\ngens: a b   # two\nrel: a b a^-1 b^-1  # commutator\n\n");
    CHECK(p.generator_names() == std::vector<std::string>{"a", "b"});
    CHECK(p.relation_count() == 1);
    CHECK(p.relations()[0].size() == 4);
}

TEST_CASE("generator names are validated") {
    CHECK_THROWS_AS(Presentation({"x", "x"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Presentation({"1x"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Presentation({""}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Presentation({"a^b"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Presentation({"x"}, {Word(syl({{1, 1}}))}), std::invalid_argument);
    CHECK_NOTHROW(Presentation({"x1", "y_2"}, {}));
}

TEST_CASE("free reduction examples") {
    CHECK(free_reduce(syl({{0, 2}, {0, -2}})).empty());
    CHECK(free_reduce(syl({{0, 1}, {1, 1}, {1, -1}, {0, 1}})).syllables() == syl({{0, 2}}));
    CHECK(free_reduce(syl({{0, 1}, {1, 2}})).syllables() == syl({{0, 1}, {1, 2}}));
    CHECK(free_reduce(syl({{0, 0}, {1, 3}})).syllables() == syl({{1, 3}}));
}

TEST_CASE("free reduction is idempotent and preserves exponent sums") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Syllable> raw;
        const auto len = testsupport::uniform(rng, 0, 30);
        std::vector<std::int64_t> sums(3, 0);
        for (std::int64_t k = 0; k < len; ++k) {
            Syllable s{static_cast<std::size_t>(testsupport::uniform(rng, 0, 2)), testsupport::uniform(rng, -3, 3)};
            sums[s.generator] += s.exponent;
            raw.push_back(s);
        }
        auto w = free_reduce(raw);
        CHECK(free_reduce(w.syllables()) == w);
        for (std::size_t k = 0; k + 1 < w.size(); ++k) CHECK(w.syllables()[k].generator != w.syllables()[k + 1].generator);
        for (const auto& s : w.syllables()) CHECK(s.exponent != 0);
        for (std::size_t g = 0; g < 3; ++g) CHECK(w.exponent_sum(g) == sums[g]);
        CHECK((w * w.inverse()).empty());
    }
}

TEST_CASE("serialize then parse is the identity") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Word> rels;
        for (int k = 0; k < testsupport::uniform(rng, 0, 5); ++k) rels.push_back(testsupport::random_word(rng, 3, 10));
        Presentation p({"a", "b", "c"}, rels);
        CHECK(parse_presentation(serialize(p)) == p);
    }
    CHECK(parse_presentation(serialize(cartwright_steger())) == cartwright_steger());
}

TEST_CASE("builtin presentation") {
    const auto& cs = cartwright_steger();
    CHECK(cs.generator_names() == std::vector<std::string>{"x", "y", "z"});
    REQUIRE(cs.relation_count() == 12);
    const auto& r1 = cs.relations()[0];
    CHECK(r1.exponent_sum(0) == -7);
    CHECK(r1.exponent_sum(1) == -2);
    CHECK(r1.exponent_sum(2) == -3);
    const auto& r2 = cs.relations()[1];
    CHECK(r2.exponent_sum(0) == 0);
    CHECK(r2.exponent_sum(1) == 0);
    CHECK(r2.exponent_sum(2) == 0);
    for (const auto& w : cs.relations()) {
        CHECK(free_reduce(w.syllables()) == w);
        // proportional to (7, 2, 3)
        const auto k = w.exponent_sum(1) / 2;
        CHECK(w.exponent_sum(0) == 7 * k);
        CHECK(w.exponent_sum(1) == 2 * k);
        CHECK(w.exponent_sum(2) == 3 * k);
    }
}

TEST_CASE("builtin presentation checksum") {
    CHECK(fnv1a(serialize(cartwright_steger())) == 15923631016249965931ull);
}
