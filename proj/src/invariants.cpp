#include "foxjump/invariants.hpp"

namespace foxjump {

SurfaceInvariants surface_invariants(std::int64_t q, std::int64_t p_g, std::int64_t c2) {
    if (q < 0 || p_g < 0) throw std::invalid_argument("q and p_g must be nonnegative");
    SurfaceInvariants s;
    s.q = q;
    s.p_g = p_g;
    s.c2 = c2;
    s.chi = 1 - q + p_g;
    s.c1_sq = 12 * s.chi - c2;
    s.h11 = c2 - 2 + 4 * q - 2 * p_g;
    s.ball_quotient = s.c1_sq == 3 * c2;
    if (q == 1) {
        if (c2 < 3 * p_g || c2 > 10 * p_g)
            throw BoundViolation("q = 1 requires 3 p_g <= c2 <= 10 p_g; got p_g = " + std::to_string(p_g) +
                                 ", c2 = " + std::to_string(c2));
        s.lower_bound_equality = c2 == 3 * p_g;
        s.upper_bound_equality = c2 == 10 * p_g;
    }
    return s;
}

SurfaceInvariants cover_invariants(std::int64_t n) {
    if (n <= 0) throw std::invalid_argument("cover degree must be positive, got " + std::to_string(n));
    return surface_invariants(1, n, 3 * n);
}

nlohmann::json to_json(const SurfaceInvariants& s) {
    return {{"q", s.q},
            {"p_g", s.p_g},
            {"c2", s.c2},
            {"chi", s.chi},
            {"c1_sq", s.c1_sq},
            {"h11", s.h11},
            {"ball_quotient", s.ball_quotient},
            {"lower_bound_equality", s.lower_bound_equality},
            {"upper_bound_equality", s.upper_bound_equality}};
}

}  // namespace foxjump
