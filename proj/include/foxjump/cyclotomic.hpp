#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "foxjump/laurent.hpp"
#include "foxjump/upoly.hpp"

namespace foxjump {

/// Phi_m, built as (x^m - 1) divided by Phi_d for every proper divisor d of m.
/// Integer coefficients, returned low degree first.
std::vector<mpz_class> cyclotomic_polynomial(std::int64_t m);

std::int64_t euler_phi(std::int64_t m);

/// Q(zeta_m) represented as Q[x]/Phi_m.
class CyclotomicField {
   public:
    explicit CyclotomicField(std::int64_t m);

    std::int64_t modulus() const noexcept { return m_; }
    std::size_t degree() const noexcept { return degree_; }
    const RationalPoly& minimal_polynomial() const noexcept { return phi_; }

    /// Reduces a vector indexed by exponent mod m (length m) to the
    /// power basis 1, x, ..., x^(phi(m)-1).
    std::vector<mpq_class> reduce_exponent_vector(const std::vector<mpz_class>& by_exponent) const;
    /// Reduces a polynomial in x of arbitrary degree modulo Phi_m.
    std::vector<mpq_class> reduce(const std::vector<mpq_class>& coeffs) const;

   private:
    std::int64_t m_;
    std::size_t degree_;
    RationalPoly phi_;
    // Power-basis images of x^k for k in [0, m).
    std::vector<std::vector<mpq_class>> power_table_;
};

/// Shared, cached field for modulus m (thread-safe).
std::shared_ptr<const CyclotomicField> cyclotomic_field(std::int64_t m);

class CyclotomicNumber {
   public:
    CyclotomicNumber(std::shared_ptr<const CyclotomicField> field, std::vector<mpq_class> coeffs);
    static CyclotomicNumber zero(std::shared_ptr<const CyclotomicField> field);
    static CyclotomicNumber one(std::shared_ptr<const CyclotomicField> field);
    static CyclotomicNumber rational(std::shared_ptr<const CyclotomicField> field, const mpq_class& q);
    /// zeta_m^k.
    static CyclotomicNumber root_of_unity(std::shared_ptr<const CyclotomicField> field, std::int64_t k);

    std::int64_t modulus() const noexcept { return field_->modulus(); }
    const std::shared_ptr<const CyclotomicField>& field() const noexcept { return field_; }
    const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept;

    CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
    CyclotomicNumber operator-() const;

    /// Multiplicative inverse by extended Euclid against Phi_m; throws
    /// std::domain_error for zero.
    CyclotomicNumber inverse() const;

    bool operator==(const CyclotomicNumber& rhs) const;

    std::string to_string() const;

   private:
    void check_field(const CyclotomicNumber& other) const;

    std::shared_ptr<const CyclotomicField> field_;
    std::vector<mpq_class> coeffs_;
};

/// A finite-order character: variable i is sent to zeta_m^exponents[i].
struct FiniteCharacter {
    std::int64_t modulus = 1;
    std::vector<std::int64_t> exponents;

    /// Exponents reduced into [0, modulus).
    static FiniteCharacter make(std::int64_t modulus, std::vector<std::int64_t> exponents);
    static FiniteCharacter trivial(std::size_t variables);

    bool is_trivial() const noexcept;
    bool operator==(const FiniteCharacter&) const = default;

    std::string to_string() const;
};

/// Throws ContextMismatch unless rho has one exponent per variable and each
/// torsion variable is sent to a root of unity whose order divides d_i.
void check_character(const VariableContext& ctx, const FiniteCharacter& rho);

CyclotomicNumber evaluate(const LaurentPoly& p, const FiniteCharacter& rho);

}  // namespace foxjump
