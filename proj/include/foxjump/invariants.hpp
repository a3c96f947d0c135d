#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace foxjump {

struct SurfaceInvariants {
    std::int64_t q = 0;
    std::int64_t p_g = 0;
    std::int64_t c2 = 0;
    std::int64_t chi = 0;
    std::int64_t c1_sq = 0;
    std::int64_t h11 = 0;
    bool ball_quotient = false;
    /// Only meaningful for q = 1: c2 = 3 p_g and c2 = 10 p_g respectively.
    bool lower_bound_equality = false;
    bool upper_bound_equality = false;

    bool noether_holds() const noexcept { return 12 * chi == c1_sq + c2; }
    bool hodge_holds() const noexcept { return c2 == 2 - 4 * q + 2 * p_g + h11; }
};

/// Raised when q = 1 and c2 lies outside [3 p_g, 10 p_g].
class BoundViolation : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// chi = 1 - q + p_g, c1^2 = 12 chi - c2, h11 from the Hodge decomposition.
SurfaceInvariants surface_invariants(std::int64_t q, std::int64_t p_g, std::int64_t c2);

/// Invariants of the degree-n abelian cover: surface_invariants(1, n, 3n).
SurfaceInvariants cover_invariants(std::int64_t n);

nlohmann::json to_json(const SurfaceInvariants& s);

}  // namespace foxjump
