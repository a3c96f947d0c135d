#include "foxjump/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace foxjump {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    const auto r = a % m;
    return r < 0 ? r + m : r;
}

RationalPoly cyclotomic_rational(std::int64_t m) {
    static std::mutex mutex;
    static std::map<std::int64_t, RationalPoly> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(m); it != cache.end()) return it->second;
    }
    // x^m - 1 = prod_{d | m} Phi_d
    std::vector<mpq_class> xm1(static_cast<std::size_t>(m) + 1, 0);
    xm1[0] = -1;
    xm1[static_cast<std::size_t>(m)] = 1;
    RationalPoly num(std::move(xm1));
    for (std::int64_t d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        auto [q, r] = divmod(num, cyclotomic_rational(d));
        if (!r.is_zero()) throw std::logic_error("cyclotomic division left a remainder");
        num = std::move(q);
    }
    std::lock_guard lock(mutex);
    cache.emplace(m, num);
    return num;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: modulus must be positive");
    const auto phi = cyclotomic_rational(m);
    std::vector<mpz_class> out;
    out.reserve(phi.coeffs().size());
    for (const auto& c : phi.coeffs()) out.push_back(c.get_num());
    return out;
}

std::int64_t euler_phi(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("euler_phi: modulus must be positive");
    std::int64_t result = m;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

CyclotomicField::CyclotomicField(std::int64_t m) : m_(m), degree_(0) {
    if (m < 1) throw std::invalid_argument("cyclotomic field modulus must be positive");
    phi_ = cyclotomic_rational(m);
    degree_ = static_cast<std::size_t>(phi_.degree());
    power_table_.reserve(static_cast<std::size_t>(m));
    for (std::int64_t k = 0; k < m; ++k) {
        auto r = divmod(RationalPoly::monomial(static_cast<std::size_t>(k)), phi_).second;
        auto v = r.coeffs();
        v.resize(degree_, 0);
        power_table_.push_back(std::move(v));
    }
}

std::vector<mpq_class> CyclotomicField::reduce_exponent_vector(const std::vector<mpz_class>& by_exponent) const {
    std::vector<mpq_class> out(degree_, 0);
    for (std::size_t k = 0; k < by_exponent.size(); ++k) {
        if (by_exponent[k] == 0) continue;
        const auto& row = power_table_[k];
        for (std::size_t j = 0; j < degree_; ++j)
            if (row[j] != 0) out[j] += row[j] * by_exponent[k];
    }
    return out;
}

std::vector<mpq_class> CyclotomicField::reduce(const std::vector<mpq_class>& coeffs) const {
    std::vector<mpq_class> out(degree_, 0);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        const auto& row = power_table_[k % static_cast<std::size_t>(m_)];
        for (std::size_t j = 0; j < degree_; ++j)
            if (row[j] != 0) out[j] += row[j] * coeffs[k];
    }
    return out;
}

std::shared_ptr<const CyclotomicField> cyclotomic_field(std::int64_t m) {
    static std::mutex mutex;
    static std::map<std::int64_t, std::shared_ptr<const CyclotomicField>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(m); it != cache.end()) return it->second;
    }
    auto field = std::make_shared<const CyclotomicField>(m);
    std::lock_guard lock(mutex);
    return cache.emplace(m, std::move(field)).first->second;
}

CyclotomicNumber::CyclotomicNumber(std::shared_ptr<const CyclotomicField> field, std::vector<mpq_class> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    if (coeffs_.size() != field_->degree()) coeffs_ = field_->reduce(coeffs_);
}

CyclotomicNumber CyclotomicNumber::zero(std::shared_ptr<const CyclotomicField> field) {
    const auto d = field->degree();
    return CyclotomicNumber(std::move(field), std::vector<mpq_class>(d, 0));
}

CyclotomicNumber CyclotomicNumber::one(std::shared_ptr<const CyclotomicField> field) {
    return rational(std::move(field), 1);
}

CyclotomicNumber CyclotomicNumber::rational(std::shared_ptr<const CyclotomicField> field, const mpq_class& q) {
    std::vector<mpq_class> v(field->degree(), 0);
    v[0] = q;
    return CyclotomicNumber(std::move(field), std::move(v));
}

CyclotomicNumber CyclotomicNumber::root_of_unity(std::shared_ptr<const CyclotomicField> field, std::int64_t k) {
    std::vector<mpz_class> by_exp(static_cast<std::size_t>(field->modulus()), 0);
    by_exp[static_cast<std::size_t>(floor_mod(k, field->modulus()))] = 1;
    auto v = field->reduce_exponent_vector(by_exp);
    return CyclotomicNumber(std::move(field), std::move(v));
}

bool CyclotomicNumber::is_zero() const noexcept {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

void CyclotomicNumber::check_field(const CyclotomicNumber& other) const {
    if (field_->modulus() != other.field_->modulus())
        throw ContextMismatch("cyclotomic numbers from different fields");
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
    check_field(rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) {
    check_field(rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    a.check_field(b);
    const auto d = a.coeffs_.size();
    std::vector<mpq_class> prod(2 * d - 1, 0);
    for (std::size_t i = 0; i < d; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
            if (b.coeffs_[j] != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return CyclotomicNumber(a.field_, a.field_->reduce(prod));
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in a cyclotomic field");
    auto bez = extended_gcd(RationalPoly(coeffs_), field_->minimal_polynomial());
    if (bez.g.degree() != 0) throw std::logic_error("cyclotomic polynomial is not coprime to a nonzero residue");
    auto v = divmod(bez.s, field_->minimal_polynomial()).second.coeffs();
    v.resize(field_->degree(), 0);
    return CyclotomicNumber(field_, std::move(v));
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& rhs) const {
    return field_->modulus() == rhs.field_->modulus() && coeffs_ == rhs.coeffs_;
}

std::string CyclotomicNumber::to_string() const {
    return RationalPoly(coeffs_).to_string("z" + std::to_string(field_->modulus()));
}

FiniteCharacter FiniteCharacter::make(std::int64_t modulus, std::vector<std::int64_t> exponents) {
    if (modulus < 1) throw std::invalid_argument("character modulus must be positive");
    for (auto& e : exponents) e = floor_mod(e, modulus);
    return FiniteCharacter{modulus, std::move(exponents)};
}

FiniteCharacter FiniteCharacter::trivial(std::size_t variables) {
    return FiniteCharacter{1, std::vector<std::int64_t>(variables, 0)};
}

bool FiniteCharacter::is_trivial() const noexcept {
    for (auto e : exponents)
        if (floor_mod(e, modulus) != 0) return false;
    return true;
}

std::string FiniteCharacter::to_string() const {
    std::ostringstream os;
    os << "m=" << modulus << " (";
    for (std::size_t k = 0; k < exponents.size(); ++k) os << (k ? "," : "") << exponents[k];
    os << ')';
    return os.str();
}

void check_character(const VariableContext& ctx, const FiniteCharacter& rho) {
    if (rho.modulus < 1) throw std::invalid_argument("character modulus must be positive");
    if (rho.exponents.size() != ctx.size())
        throw ContextMismatch("character has " + std::to_string(rho.exponents.size()) + " exponents, context has " +
                              std::to_string(ctx.size()) + " variables");
    for (std::size_t k = 0; k < ctx.torsion_count(); ++k) {
        const auto d = ctx.torsion_moduli()[k];
        const auto e = rho.exponents[ctx.free_rank() + k];
        if (floor_mod(e * d, rho.modulus) != 0)
            throw ContextMismatch("character does not respect torsion variable " + ctx.names()[ctx.free_rank() + k]);
    }
}

CyclotomicNumber evaluate(const LaurentPoly& p, const FiniteCharacter& rho) {
    const auto& ctx = *p.context();
    check_character(ctx, rho);
    const auto m = rho.modulus;
    auto field = cyclotomic_field(m);
    std::vector<mpz_class> by_exp(static_cast<std::size_t>(m), 0);
    for (const auto& [mono, c] : p.terms()) {
        std::int64_t k = 0;
        for (std::size_t i = 0; i < mono.exps.size(); ++i)
            k = floor_mod(k + floor_mod(mono.exps[i], m) * floor_mod(rho.exponents[i], m), m);
        by_exp[static_cast<std::size_t>(k)] += c;
    }
    auto v = field->reduce_exponent_vector(by_exp);
    return CyclotomicNumber(std::move(field), std::move(v));
}

}  // namespace foxjump
