#include "foxjump/fox.hpp"

namespace foxjump {

LaurentPoly fox_derivative(const Word& w, std::size_t generator, const AbelianizationMap& map) {
    const auto& ctx = map.context;
    LaurentPoly result(ctx);
    Monomial prefix{Exponents(ctx->size(), 0)};
    // D(u g^l) = D(u) + alpha(u) D(g^l), one syllable at a time.
    for (const auto& s : w.syllables()) {
        const auto& a = map.image(s.generator);
        if (s.generator == generator) result += power_derivative(a, s.exponent, ctx).shifted(prefix.exps);
        prefix = monomial_product(*ctx, prefix, monomial_power(*ctx, a, s.exponent));
    }
    return result;
}

LaurentPoly power_derivative(const Monomial& alpha, std::int64_t exponent, const ContextPtr& ctx) {
    LaurentPoly out(ctx);
    if (exponent > 0) {
        for (std::int64_t j = 0; j < exponent; ++j) out.add_term(monomial_power(*ctx, alpha, j).exps, 1);
    } else {
        for (std::int64_t j = exponent; j <= -1; ++j) out.add_term(monomial_power(*ctx, alpha, j).exps, -1);
    }
    return out;
}

LaurentPoly fox_derivative_steps(const Word& w, std::size_t generator, const AbelianizationMap& map) {
    const auto& ctx = map.context;
    const auto& syl = w.syllables();

    // Step 1: truncate after the last occurrence of the generator.
    std::size_t end = syl.size();
    while (end > 0 && syl[end - 1].generator != generator) --end;
    if (end == 0) return LaurentPoly(ctx);

    // Steps 2-4 produce factors F_1 ... F_k; each is either a unit alpha(g)^l
    // (foreign syllable) or D_i(g_i^l) + alpha(g_i)^l. Step 5 expands the
    // product keeping exactly one D-part with only unit parts to its left,
    // i.e. acc <- D + alpha^l * acc from the right.
    LaurentPoly acc(ctx);
    for (std::size_t k = end; k-- > 0;) {
        const auto& s = syl[k];
        const auto unit = monomial_power(*ctx, map.image(s.generator), s.exponent);
        acc = acc.shifted(unit.exps);
        if (s.generator == generator) acc += power_derivative(map.image(generator), s.exponent, ctx);
    }
    return acc;
}

AlexanderMatrix alexander_matrix(const Presentation& p, const AbelianizationMap& map) {
    AlexanderMatrix a{map, LaurentMatrix(map.context, p.generator_count(), p.relation_count())};
    for (std::size_t i = 0; i < p.generator_count(); ++i)
        for (std::size_t j = 0; j < p.relation_count(); ++j)
            a.entries(i, j) = fox_derivative(p.relations()[j], i, map);
    return a;
}

}  // namespace foxjump
