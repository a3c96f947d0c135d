#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace foxjump {

/// Dense univariate polynomial over Q; coeffs[k] is the coefficient of x^k.
/// The coefficient vector carries no trailing zeros.
class RationalPoly {
   public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<mpq_class> coeffs);
    static RationalPoly monomial(std::size_t degree, const mpq_class& c = 1);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }
    mpq_class coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : mpq_class(0); }
    const mpq_class& leading() const { return coeffs_.back(); }

    RationalPoly& operator+=(const RationalPoly& rhs);
    RationalPoly& operator-=(const RationalPoly& rhs);
    RationalPoly& operator*=(const mpq_class& c);
    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator*(RationalPoly a, const mpq_class& c) { return a *= c; }
    RationalPoly operator-() const;

    bool operator==(const RationalPoly&) const = default;

    RationalPoly monic() const;
    /// Scales to integer coefficients with content 1 and positive leading coefficient.
    RationalPoly primitive() const;

    std::string to_string(const std::string& var = "x") const;

   private:
    void trim();
    std::vector<mpq_class> coeffs_;
};

/// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b);

/// Monic gcd (zero when both inputs are zero).
RationalPoly gcd(RationalPoly a, RationalPoly b);

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) monic.
struct BezoutResult {
    RationalPoly g, s, t;
};
BezoutResult extended_gcd(const RationalPoly& a, const RationalPoly& b);

}  // namespace foxjump
