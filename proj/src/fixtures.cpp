#include "foxjump/fixtures.hpp"

#include <array>
#include <stdexcept>

namespace foxjump {

namespace {

struct Term {
    int coefficient;
    int r;
    int s;
};

// Reference entries with denominators cleared
// into negative exponents; rows x, y, z, relations 1..12.
const std::array<std::vector<Term>, 36>& table_terms() {
    static const std::array<std::vector<Term>, 36> terms = {{
        // d R1 / dx
        {{-1, 4, -1}, {-1, 4, -3}, {-1, 3, -2}, {-1, 2, -1}, {-1, 2, -2}, {-1, 1, -1}, {-1, 0, 0}},
        // d R2 / dx
        {{1, 5, 4}, {1, 4, 5}, {1, 3, 6}, {-1, 4, 2}, {-1, 3, 3}, {-1, 2, 4}, {-1, 1, -1}, {1, -2, 0}},
        // d R3 / dx
        {{-1, 5, 2}, {-1, 4, 3}, {-1, 3, 4}, {-1, 3, 2}, {-1, 3, -3}, {-1, 2, -2}, {-1, 1, -1}},
        // d R4 / dx
        {{1, 4, 6}, {1, 3, 7}, {1, 2, 8}, {1, 3, 2}, {1, 2, 3}, {1, 1, 4}, {1, -2, 3}},
        // d R5 / dx
        {{-1, 2, 0}, {-1, 1, 1}, {-1, 0, 2}, {1, -1, -2}, {1, -2, -1}, {1, -3, 0}, {-1, -6, -3}, {1, -7, -5}},
        // d R6 / dx
        {{-1, 2, 0}, {-1, 1, 1}, {-1, 0, 2}, {-1, 4, -4}, {-2, 3, -3}, {-2, 2, -2}, {1, -1, -4}},
        // d R7 / dx
        {{-1, 5, 4}, {-1, 4, 5}, {-1, 3, 6}, {1, 3, 3}, {1, 2, 4}, {1, 1, 5}, {1, -2, 4}, {-1, -4, 2}},
        // d R8 / dx
        {{-1, 5, -1}, {-1, 4, 0}, {-1, 3, 1}, {1, 2, 1}, {1, 1, 2}, {-1, 4, -4}, {-1, 3, -3}, {-1, 2, -2}, {-1, 1, -1}, {-1, 0, 0}, {-1, -1, 1}},
        // d R9 / dx
        {{-1, 5, 3}, {1, 3, 0}, {1, 2, 1}, {1, 1, 2}, {-1, 2, -2}, {-1, 1, -1}, {-1, 0, 0}, {1, -2, -4}},
        // d R10 / dx
        {{1, 7, 4}, {1, 6, 5}, {1, 5, 6}, {1, 8, 1}, {1, 7, 2}, {1, 6, 3}, {-1, 4, 2}, {-1, 3, 3}, {-1, 2, 4}, {1, 1, 3}, {1, 5, -3}, {1, 4, -2}, {1, 3, -1}},
        // d R11 / dx
        {{1, 6, -2}, {1, 5, -1}, {1, 4, 0}, {-1, 2, 0}, {-1, 1, 1}, {-1, 0, 2}, {-1, 4, -3}, {-1, 3, -2}, {-1, 4, -4}, {-1, 3, -3}, {-1, 2, -2}, {-1, 3, -4}, {-1, 2, -3}, {-1, 1, -2}, {1, 0, -3}},
        // d R12 / dx
        {{-1, 8, 4}, {-1, 7, 5}, {-1, 6, 6}, {1, 6, 5}, {1, 5, 6}, {1, 4, 7}, {1, 5, 4}, {1, 4, 5}, {1, 5, 2}, {1, 4, 3}, {1, 3, 4}, {-1, 2, 3}, {-1, 3, 0}, {-1, 2, 0}, {-1, 1, 1}, {-1, 0, 2}},
        // d R1 / dy
        {{-1, 0, -2}, {1, 2, -5}, {-1, -1, -2}, {-1, -1, -4}},
        // d R2 / dy
        {{1, 2, 4}, {-1, 2, 2}},
        // d R3 / dy
        {{-1, 2, 2}, {-1, 1, 0}, {1, 0, 0}, {-1, 2, -3}, {-1, 0, -2}, {1, -1, -2}},
        // d R4 / dy
        {{1, 1, 6}, {-1, 1, 4}, {1, 0, 4}, {1, -1, 2}, {1, 0, 0}, {-1, -3, 1}},
        // d R5 / dy
        {{-1, -1, 0}, {1, -1, -2}, {-1, -2, -2}, {1, -5, -1}, {-1, -3, -4}, {1, -6, -3}, {-1, -5, -5}, {1, -7, -5}},
        // d R6 / dy
        {{-1, -1, 0}, {-1, 0, -3}, {-1, -2, -2}, {1, -2, -3}, {-1, 0, -6}, {1, -3, -5}},
        // d R7 / dy
        {{-1, 2, 4}, {-1, 1, 2}, {1, 0, 3}, {1, -1, 3}, {-1, 1, 0}, {-1, 0, 0}, {1, -1, 1}, {1, -2, 1}},
        // d R8 / dy
        {{-1, 1, 0}, {1, 0, 0}, {-1, 0, -2}, {-1, -1, -1}, {1, 1, -4}, {-1, -1, -4}, {-1, -2, -3}, {1, -4, -3}},
        // d R9 / dy
        {{-1, 4, 1}, {1, 2, 1}, {-1, 4, -2}, {-1, 3, -3}, {2, 1, -1}, {1, 0, -3}, {-1, -1, -2}, {-1, -1, -4}, {1, -1, -5}, {-1, -2, -4}, {1, -4, -3}},
        // d R10 / dy
        {{1, 4, 4}, {1, 5, 1}, {-1, 4, 2}, {1, 3, 2}, {-1, 5, -1}, {1, 4, -1}, {-1, 1, 2}, {1, 2, 0}, {1, 3, -3}, {-1, 0, 0}, {1, 2, -5}, {-1, -1, -4}},
        // d R11 / dy
        {{1, 2, -1}, {-1, 2, -3}, {-1, -1, 0}, {1, 1, -3}, {-1, -2, -2}, {-1, -3, -1}, {2, 0, -5}, {-2, -3, -4}, {1, -1, -7}, {-1, -4, -6}},
        // d R12 / dy
        {{-1, 4, 5}, {1, 2, 6}, {1, 4, 3}, {-1, 3, 3}, {1, 5, 0}, {1, 1, 4}, {-2, 2, 1}, {1, 4, -2}, {-1, 3, -1}, {1, 0, 2}, {-1, 1, -1}, {-1, -1, -2}, {1, -4, -1}},
        // d R1 / dz
        {{-1, 5, -2}, {1, 4, -1}, {-1, 5, -4}, {-1, 2, -3}, {-1, 2, -5}},
        // d R2 / dz
        {{1, 6, 3}, {-1, 5, 1}, {-1, 1, -1}, {1, 0, 0}},
        // d R3 / dz
        {{-1, 6, 1}, {-1, 4, 1}, {-1, 3, -1}, {-1, 3, -3}, {1, 2, -3}},
        // d R4 / dz
        {{1, 5, 5}, {1, 4, 1}, {2, 1, 2}, {-1, 0, 0}},
        // d R5 / dz
        {{-1, 3, -1}, {1, -3, -4}, {-1, -4, -3}, {1, -5, -5}},
        // d R6 / dz
        {{-1, 3, -1}, {-1, 4, -4}, {-1, 2, -2}, {-1, 1, -3}, {-1, 1, -4}, {1, 0, -3}, {1, 0, -6}},
        // d R7 / dz
        {{-1, 6, 3}, {-1, 3, 4}, {1, 4, 2}, {-1, 2, 2}, {1, 1, 3}, {1, 1, 0}, {1, 0, 0}, {-1, -1, 1}},
        // d R8 / dz
        {{-1, 5, -1}, {1, 3, 0}, {-1, 2, 0}, {-1, 3, -3}, {-1, 0, -2}, {-1, 1, -4}, {1, -1, -4}},
        // d R9 / dz
        {{-1, 6, 2}, {-1, 5, 0}, {1, 4, 1}, {1, 4, -2}, {-1, 0, -2}, {1, -1, -4}},
        // d R10 / dz
        {{1, 8, 3}, {1, 9, 0}, {-1, 5, 1}, {1, 4, 2}, {1, 5, -1}, {1, 6, -4}, {-1, 3, -1}, {1, 3, -3}, {-1, 2, -5}},
        // d R11 / dz
        {{1, 6, -2}, {-1, 3, -1}, {-1, 3, -2}, {1, 1, 0}, {-1, 3, -3}, {-1, 3, -4}, {1, 2, -3}, {1, 1, -3}, {-1, 0, -2}, {-1, 0, -5}, {-1, -1, -7}},
        // d R12 / dz
        {{-1, 8, 4}, {1, 6, 5}, {1, 5, 4}, {1, 6, 2}, {1, 5, 2}, {-1, 4, 3}, {-1, 4, 1}, {-1, 4, -2}, {-1, 0, 0}, {1, -1, -2}},
    }};
    return terms;
}

}  // namespace

LaurentMatrix cartwright_steger_tables(const ContextPtr& ctx) {
    if (ctx->size() != 2 || ctx->free_rank() != 2)
        throw ContextMismatch("table fixtures need a context with two free variables");
    LaurentMatrix m(ctx, 3, 12);
    const auto& terms = table_terms();
    for (std::size_t g = 0; g < 3; ++g)
        for (std::size_t j = 0; j < 12; ++j)
            for (const auto& t : terms[g * 12 + j]) m(g, j).add_term({t.r, t.s}, t.coefficient);
    return m;
}

std::string entry_label(const std::string& generator, std::size_t relation) {
    return "dR" + std::to_string(relation + 1) + "/d" + generator;
}

}  // namespace foxjump
