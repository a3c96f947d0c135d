#pragma once

#include "foxjump/abelian.hpp"
#include "foxjump/laurent.hpp"
#include "foxjump/presentation.hpp"

namespace foxjump {

/// D_i(w) by the product rule D(gh) = D(g) + alpha(g) D(h), applied from the
/// left one syllable at a time with the closed power sums of power_derivative.
LaurentPoly fox_derivative(const Word& w, std::size_t generator, const AbelianizationMap& map);

/// D_i(w) by the block algorithm: drop everything after the last
/// occurrence of g_i, replace other syllables by their images, expand each
/// g_i^l as D_i(g_i^l) + alpha(g_i)^l with closed power sums, and collapse
/// the nested product from the right.
LaurentPoly fox_derivative_steps(const Word& w, std::size_t generator, const AbelianizationMap& map);

/// D_i(g^l) for a single syllable of g = g_i: sum_{j=0}^{l-1} a^j for l > 0,
/// -sum_{j=l}^{-1} a^j for l < 0.
LaurentPoly power_derivative(const Monomial& alpha, std::int64_t exponent, const ContextPtr& ctx);

struct AlexanderMatrix {
    AbelianizationMap map;
    /// Rows are generators, columns are relations.
    LaurentMatrix entries;

    std::size_t generators() const noexcept { return entries.rows(); }
    std::size_t relations() const noexcept { return entries.cols(); }
    const LaurentPoly& operator()(std::size_t generator, std::size_t relation) const {
        return entries(generator, relation);
    }
};

AlexanderMatrix alexander_matrix(const Presentation& p, const AbelianizationMap& map);

}  // namespace foxjump
