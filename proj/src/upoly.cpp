#include "foxjump/upoly.hpp"

#include <sstream>
#include <stdexcept>

namespace foxjump {

RationalPoly::RationalPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

RationalPoly RationalPoly::monomial(std::size_t degree, const mpq_class& c) {
    std::vector<mpq_class> v(degree + 1, 0);
    v[degree] = c;
    return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const mpq_class& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::operator-() const {
    RationalPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

RationalPoly RationalPoly::monic() const {
    if (is_zero()) return *this;
    return *this * mpq_class(1 / leading());
}

RationalPoly RationalPoly::primitive() const {
    if (is_zero()) return *this;
    mpz_class den_lcm = 1;
    for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_class content = 0;
    for (const auto& c : coeffs_) {
        mpz_class v = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    }
    mpq_class scale(den_lcm, content);
    scale.canonicalize();
    if (leading() < 0) scale = -scale;
    return *this * scale;
}

std::string RationalPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const auto& c = coeffs_[k];
        if (c == 0) continue;
        const bool negative = c < 0;
        const mpq_class mag = abs(c);
        os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        if (k == 0 || mag != 1) os << mag.get_str();
        if (k > 0) {
            if (mag != 1) os << '*';
            os << var;
            if (k > 1) os << '^' << k;
        }
        first = false;
    }
    return os.str();
}

std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {RationalPoly{}, a};
    std::vector<mpq_class> rem = a.coeffs();
    std::vector<mpq_class> quot(rem.size() - b.coeffs().size() + 1, 0);
    const auto& bc = b.coeffs();
    const mpq_class inv_lead = 1 / b.leading();
    for (std::size_t k = quot.size(); k-- > 0;) {
        const mpq_class q = rem[k + bc.size() - 1] * inv_lead;
        quot[k] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) rem[k + j] -= q * bc[j];
    }
    rem.resize(bc.size() - 1);
    return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

RationalPoly gcd(RationalPoly a, RationalPoly b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

BezoutResult extended_gcd(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly r0 = a, r1 = b;
    RationalPoly s0({mpq_class(1)}), s1;
    RationalPoly t0, t1({mpq_class(1)});
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        auto s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        auto t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const mpq_class inv = 1 / r0.leading();
    return {r0 * inv, s0 * inv, t0 * inv};
}

}  // namespace foxjump
