#pragma once

#include <numeric>
#include <random>

#include "foxjump/laurent.hpp"
#include "foxjump/presentation.hpp"

namespace testsupport {

using foxjump::ContextPtr;
using foxjump::LaurentPoly;

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline LaurentPoly random_poly(std::mt19937_64& rng, const ContextPtr& ctx, int max_terms = 5, int exp_range = 3,
                               int coef_range = 5) {
    LaurentPoly p(ctx);
    const auto terms = uniform(rng, 0, max_terms);
    for (std::int64_t t = 0; t < terms; ++t) {
        foxjump::Exponents e(ctx->size());
        for (auto& x : e) x = uniform(rng, -exp_range, exp_range);
        ctx->normalize(e);
        p.add_term(e, uniform(rng, -coef_range, coef_range));
    }
    return p;
}

inline LaurentPoly random_nonzero_poly(std::mt19937_64& rng, const ContextPtr& ctx, int max_terms = 5) {
    for (;;) {
        auto p = random_poly(rng, ctx, max_terms);
        if (!p.is_zero()) return p;
    }
}

/// Random freely reduced word with at most max_len syllables before reduction.
inline foxjump::Word random_word(std::mt19937_64& rng, std::size_t generators, std::size_t max_len = 40,
                                 int max_exp = 5) {
    std::vector<foxjump::Syllable> raw;
    const auto len = uniform(rng, 0, static_cast<std::int64_t>(max_len));
    for (std::int64_t k = 0; k < len; ++k) {
        std::int64_t e = 0;
        while (e == 0) e = uniform(rng, -max_exp, max_exp);
        raw.push_back({static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(generators) - 1)), e});
    }
    return foxjump::Word(raw);
}

/// Integer polynomial gcd (coefficients low degree first), by Euclid with
/// pseudo-remainders and content removal; primitive with positive leading
/// coefficient. Small-degree oracle; no overflow protection.
inline std::vector<long long> euclid_gcd(std::vector<long long> a, std::vector<long long> b) {
    auto trim = [](std::vector<long long>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    auto primitive = [&](std::vector<long long>& p) {
        trim(p);
        if (p.empty()) return;
        long long g = 0;
        for (auto c : p) g = std::gcd(g, c < 0 ? -c : c);
        for (auto& c : p) c /= g;
        if (p.back() < 0)
            for (auto& c : p) c = -c;
    };
    primitive(a);
    primitive(b);
    while (!b.empty()) {
        // a <- prem(a, b)
        while (a.size() >= b.size() && !a.empty()) {
            const auto lead_a = a.back();
            const auto lead_b = b.back();
            const auto shift = a.size() - b.size();
            for (auto& c : a) c *= lead_b;
            for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= lead_a * b[k];
            trim(a);
        }
        primitive(a);
        std::swap(a, b);
    }
    return a;
}

}  // namespace testsupport
