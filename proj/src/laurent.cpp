#include "foxjump/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace foxjump {

VariableContext::VariableContext(std::vector<std::string> free_names, std::vector<std::string> torsion_names,
                                 std::vector<std::int64_t> torsion_moduli)
    : names_(std::move(free_names)), free_rank_(names_.size()), moduli_(std::move(torsion_moduli)) {
    if (torsion_names.size() != moduli_.size())
        throw std::invalid_argument("torsion variable names and moduli differ in length");
    for (auto d : moduli_)
        if (d < 2) throw std::invalid_argument("torsion modulus must be at least 2");
    names_.insert(names_.end(), std::make_move_iterator(torsion_names.begin()),
                  std::make_move_iterator(torsion_names.end()));
}

std::shared_ptr<const VariableContext> VariableContext::make(std::vector<std::string> free_names,
                                                             std::vector<std::string> torsion_names,
                                                             std::vector<std::int64_t> torsion_moduli) {
    return std::make_shared<const VariableContext>(std::move(free_names), std::move(torsion_names),
                                                   std::move(torsion_moduli));
}

void VariableContext::normalize(Exponents& e) const {
    for (std::size_t k = 0; k < moduli_.size(); ++k) {
        auto& x = e[free_rank_ + k];
        x %= moduli_[k];
        if (x < 0) x += moduli_[k];
    }
}

bool same_context(const ContextPtr& a, const ContextPtr& b) noexcept {
    return a == b || (a && b && *a == *b);
}

bool Monomial::is_identity() const noexcept {
    return std::all_of(exps.begin(), exps.end(), [](auto e) { return e == 0; });
}

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const noexcept {
    const auto f = std::min(free_rank, a.exps.size());
    const auto da = std::accumulate(a.exps.begin(), a.exps.begin() + f, std::int64_t{0});
    const auto db = std::accumulate(b.exps.begin(), b.exps.begin() + f, std::int64_t{0});
    if (da != db) return da > db;
    return std::lexicographical_compare(b.exps.begin(), b.exps.end(), a.exps.begin(), a.exps.end());
}

LaurentPoly::LaurentPoly(ContextPtr ctx) : ctx_(std::move(ctx)), terms_(TermOrder{ctx_ ? ctx_->free_rank() : 0}) {
    if (!ctx_) throw std::invalid_argument("LaurentPoly requires a variable context");
}

LaurentPoly LaurentPoly::constant(ContextPtr ctx, const mpz_class& c) {
    LaurentPoly p(std::move(ctx));
    p.add_term(Exponents(p.ctx_->size(), 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(ContextPtr ctx, Exponents exps, const mpz_class& c) {
    LaurentPoly p(std::move(ctx));
    p.add_term(std::move(exps), c);
    return p;
}

LaurentPoly LaurentPoly::from_terms(ContextPtr ctx, const std::vector<std::pair<mpz_class, Exponents>>& terms) {
    LaurentPoly p(std::move(ctx));
    for (const auto& [c, e] : terms) p.add_term(e, c);
    return p;
}

mpz_class LaurentPoly::coefficient(const Exponents& exps) const {
    Monomial m{exps};
    ctx_->normalize(m.exps);
    auto it = terms_.find(m);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

const Monomial& LaurentPoly::leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
    return terms_.begin()->first;
}

const mpz_class& LaurentPoly::leading_coefficient() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
    return terms_.begin()->second;
}

Exponents LaurentPoly::min_free_exponents() const {
    Exponents lo(ctx_->free_rank(), 0);
    bool first = true;
    for (const auto& [m, c] : terms_) {
        for (std::size_t i = 0; i < lo.size(); ++i) lo[i] = first ? m.exps[i] : std::min(lo[i], m.exps[i]);
        first = false;
    }
    return lo;
}

void LaurentPoly::add_term(Exponents exps, const mpz_class& c) {
    if (exps.size() != ctx_->size()) throw ContextMismatch("monomial has wrong number of exponents");
    if (c == 0) return;
    ctx_->normalize(exps);
    auto [it, inserted] = terms_.try_emplace(Monomial{std::move(exps)}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPoly::check_context(const LaurentPoly& other) const {
    if (!same_context(ctx_, other.ctx_)) throw ContextMismatch("Laurent polynomials live in different contexts");
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    check_context(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m.exps, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    check_context(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m.exps, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    lhs.check_context(rhs);
    LaurentPoly out(lhs.ctx_);
    const auto n = lhs.ctx_->size();
    Exponents e(n);
    for (const auto& [ma, ca] : lhs.terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            for (std::size_t k = 0; k < n; ++k) e[k] = ma.exps[k] + mb.exps[k];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly& LaurentPoly::operator*=(const mpz_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

LaurentPoly LaurentPoly::shifted(const Exponents& exps) const {
    if (exps.size() != ctx_->size()) throw ContextMismatch("shift has wrong number of exponents");
    LaurentPoly out(ctx_);
    Exponents e(exps.size());
    for (const auto& [m, c] : terms_) {
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = m.exps[k] + exps[k];
        out.add_term(e, c);
    }
    return out;
}

bool LaurentPoly::operator==(const LaurentPoly& rhs) const {
    return same_context(ctx_, rhs.ctx_) && terms_ == rhs.terms_;
}

namespace {

// Renders the monomial part ("r^2*s^-1"); empty for the identity.
std::string monomial_string(const VariableContext& ctx, const Exponents& e) {
    std::string out;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!out.empty()) out += '*';
        out += ctx.names()[k];
        if (e[k] != 1) out += '^' + std::to_string(e[k]);
    }
    return out;
}

}  // namespace

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        const mpz_class mag = abs(c);
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        const auto mono = monomial_string(*ctx_, m.exps);
        if (mono.empty())
            os << mag.get_str();
        else if (mag == 1)
            os << mono;
        else
            os << mag.get_str() << '*' << mono;
        first = false;
    }
    return os.str();
}

std::string LaurentPoly::to_paper_string() const {
    if (terms_.empty()) return "0";
    Exponents den(ctx_->size(), 0);
    const auto lo = min_free_exponents();
    for (std::size_t k = 0; k < lo.size(); ++k) den[k] = std::max<std::int64_t>(0, -lo[k]);
    LaurentPoly num = shifted(den);
    const auto den_str = monomial_string(*ctx_, den);
    if (den_str.empty()) return num.to_string();
    const bool negative = num.leading_coefficient() < 0;
    if (negative) num = -num;
    return (negative ? "-(" : "(") + num.to_string() + ")/" + den_str;
}

NotDivisible::NotDivisible(LaurentPoly remainder)
    : std::domain_error("polynomial is not divisible; remainder " + remainder.to_string()),
      remainder_(std::move(remainder)) {}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }
LaurentPoly neg(const LaurentPoly& p) { return -p; }

LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& d) {
    if (!same_context(p.context(), d.context())) throw ContextMismatch("exact_divide: context mismatch");
    if (d.is_zero()) throw DivisionByZeroPoly();
    const auto& ctx = p.context();
    if (ctx->has_torsion()) throw ContextMismatch("exact_divide: torsion contexts are not supported");
    if (p.is_zero()) return p;

    // Clear Laurent units: both operands become polynomials not divisible
    // by any variable, so divisibility in the Laurent ring is equivalent to
    // divisibility in the polynomial ring.
    const auto n = ctx->size();
    auto lp = p.min_free_exponents();
    auto ld = d.min_free_exponents();
    Exponents neg_lp(n), neg_ld(n);
    for (std::size_t k = 0; k < n; ++k) {
        neg_lp[k] = -lp[k];
        neg_ld[k] = -ld[k];
    }
    LaurentPoly rem = p.shifted(neg_lp);
    const LaurentPoly div = d.shifted(neg_ld);
    const auto& lead_m = div.leading_monomial().exps;
    const auto& lead_c = div.leading_coefficient();

    LaurentPoly quot(ctx);
    LaurentPoly leftover(ctx);
    Exponents e(n);
    while (!rem.is_zero()) {
        const auto& m = rem.leading_monomial().exps;
        const mpz_class c = rem.leading_coefficient();
        bool monomial_divides = true;
        for (std::size_t k = 0; k < n; ++k) {
            e[k] = m[k] - lead_m[k];
            if (e[k] < 0) monomial_divides = false;
        }
        if (monomial_divides && mpz_divisible_p(c.get_mpz_t(), lead_c.get_mpz_t())) {
            const mpz_class q = c / lead_c;
            quot.add_term(e, q);
            rem -= div.shifted(e) * q;
        } else {
            leftover.add_term(m, c);
            rem.add_term(m, -c);
        }
    }
    if (!leftover.is_zero()) throw NotDivisible(std::move(leftover));
    for (std::size_t k = 0; k < n; ++k) e[k] = lp[k] - ld[k];
    return quot.shifted(e);
}

LaurentPoly substitute(const LaurentPoly& p, const std::vector<Monomial>& images, const ContextPtr& target) {
    const auto& src = *p.context();
    if (images.size() != src.size()) throw ContextMismatch("substitute: one image per variable required");
    for (const auto& img : images)
        if (img.exps.size() != target->size()) throw ContextMismatch("substitute: image outside target context");
    LaurentPoly out(target);
    Exponents e(target->size());
    for (const auto& [m, c] : p.terms()) {
        std::fill(e.begin(), e.end(), 0);
        for (std::size_t i = 0; i < images.size(); ++i)
            for (std::size_t k = 0; k < e.size(); ++k) e[k] += m.exps[i] * images[i].exps[k];
        out.add_term(e, c);
    }
    return out;
}

Monomial monomial_product(const VariableContext& ctx, const Monomial& a, const Monomial& b) {
    Monomial out{a.exps};
    for (std::size_t k = 0; k < out.exps.size(); ++k) out.exps[k] += b.exps[k];
    ctx.normalize(out.exps);
    return out;
}

Monomial monomial_power(const VariableContext& ctx, const Monomial& a, std::int64_t k) {
    Monomial out{a.exps};
    for (auto& e : out.exps) e *= k;
    ctx.normalize(out.exps);
    return out;
}

LaurentMatrix::LaurentMatrix(ContextPtr ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), entries_(rows * cols, LaurentPoly(ctx_)) {}

bool LaurentMatrix::operator==(const LaurentMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && same_context(ctx_, rhs.ctx_) && entries_ == rhs.entries_;
}

LaurentMatrix substitute(const LaurentMatrix& m, const std::vector<Monomial>& images, const ContextPtr& target) {
    LaurentMatrix out(target, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = substitute(m(i, j), images, target);
    return out;
}

}  // namespace foxjump
