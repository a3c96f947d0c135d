#include "foxjump/strata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "foxjump/upoly.hpp"

namespace foxjump {

std::size_t cyclotomic_rank(std::vector<std::vector<CyclotomicNumber>> rows) {
    if (rows.empty()) return 0;
    const auto cols = rows.front().size();
    std::size_t rank = 0;
    // Division-free elimination: row_i <- p * row_i - a_i * row_p.
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank], rows[p]);
        const auto& pivot_row = rows[rank];
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][c].is_zero()) continue;
            const auto factor = rows[i][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] = pivot_row[c] * rows[i][j] - factor * pivot_row[j];
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_at_character(const LaurentMatrix& a, const FiniteCharacter& rho) {
    check_character(*a.context(), rho);
    if (a.rows() == 0 || a.cols() == 0) return 0;
    std::vector<std::vector<CyclotomicNumber>> rows;
    rows.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::vector<CyclotomicNumber> row;
        row.reserve(a.cols());
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(evaluate(a(i, j), rho));
        rows.push_back(std::move(row));
    }
    return cyclotomic_rank(std::move(rows));
}

FiniteCharacter lowest_terms(const FiniteCharacter& rho) {
    auto reduced = FiniteCharacter::make(rho.modulus, rho.exponents);
    std::int64_t g = reduced.modulus;
    for (auto e : reduced.exponents) g = std::gcd(g, e);
    reduced.modulus /= g;
    for (auto& e : reduced.exponents) e /= g;
    return reduced;
}

std::size_t CharacterRankCache::rank(const FiniteCharacter& rho) {
    auto reduced = lowest_terms(rho);
    auto key = std::make_pair(reduced.modulus, reduced.exponents);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    const auto r = rank_at_character(*a_, reduced);
    cache_.emplace(std::move(key), r);
    return r;
}

bool stratum_membership(const LaurentMatrix& a, const FiniteCharacter& rho, std::size_t i) {
    if (i >= a.rows())
        throw std::invalid_argument("stratum index " + std::to_string(i) + " out of range for " +
                                    std::to_string(a.rows()) + " generators");
    return rank_at_character(a, rho) + i < a.rows();
}

std::size_t stratum_depth(std::size_t rank, std::size_t rows) {
    std::size_t depth = 0;
    for (std::size_t i = 1; i < rows; ++i)
        if (rank + i < rows) ++depth;
    return depth;
}

namespace {

LaurentPoly determinant_of(const LaurentMatrix& a, const std::vector<std::size_t>& rows,
                           const std::vector<std::size_t>& cols) {
    const auto k = rows.size();
    if (k == 0) return LaurentPoly::constant(a.context(), 1);
    if (k == 1) return a(rows[0], cols[0]);
    if (k == 2) return a(rows[0], cols[0]) * a(rows[1], cols[1]) - a(rows[0], cols[1]) * a(rows[1], cols[0]);
    LaurentPoly det(a.context());
    const std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t c = 0; c < k; ++c) {
        const auto& entry = a(rows[0], cols[c]);
        if (entry.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        sub_cols.reserve(k - 1);
        for (std::size_t j = 0; j < k; ++j)
            if (j != c) sub_cols.push_back(cols[j]);
        auto term = entry * determinant_of(a, sub_rows, sub_cols);
        if (c % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

// Calls fn(indices) for every k-subset of [0, n) in lexicographic order.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) return;
    for (;;) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Coefficients of t^(e - shift); requires every exponent e >= shift.
RationalPoly as_polynomial(const LaurentPoly& p, std::int64_t shift) {
    if (p.is_zero()) return {};
    std::int64_t hi = shift;
    for (const auto& [m, c] : p.terms()) hi = std::max(hi, m.exps[0]);
    std::vector<mpq_class> coeffs(static_cast<std::size_t>(hi - shift + 1), 0);
    for (const auto& [m, c] : p.terms()) coeffs[static_cast<std::size_t>(m.exps[0] - shift)] = c;
    return RationalPoly(std::move(coeffs));
}

// Univariate Laurent polynomial with its monomial factor removed.
RationalPoly to_rational(const LaurentPoly& p) {
    return p.is_zero() ? RationalPoly{} : as_polynomial(p, p.min_free_exponents()[0]);
}

LaurentPoly from_integer_poly(const RationalPoly& p, const ContextPtr& ctx) {
    LaurentPoly out(ctx);
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (p.coeffs()[k].get_den() != 1) throw std::logic_error("expected integer coefficients");
        out.add_term({static_cast<std::int64_t>(k)}, p.coeffs()[k].get_num());
    }
    return out;
}

// Rank over Q(t) by fraction-free elimination of polynomial rows.
std::size_t rational_function_rank(std::vector<std::vector<RationalPoly>> rows) {
    if (rows.empty()) return 0;
    const auto cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank], rows[p]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][c].is_zero()) continue;
            const auto factor = rows[i][c];
            const auto pivot = rows[rank][c];
            for (std::size_t j = c; j < cols; ++j) {
                rows[i][j] = pivot * rows[i][j] - factor * rows[rank][j];
            }
            // Scaling an entry would change the row; normalise the whole row instead.
            for (std::size_t j = c; j < cols; ++j)
                if (!rows[i][j].is_zero()) rows[i][j] = rows[i][j].primitive();
        }
        ++rank;
    }
    return rank;
}

}  // namespace

LaurentPoly determinant(const LaurentMatrix& square) {
    if (square.rows() != square.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    std::vector<std::size_t> idx(square.rows());
    std::iota(idx.begin(), idx.end(), 0);
    return determinant_of(square, idx, idx);
}

std::vector<LaurentPoly> minors(const LaurentMatrix& a, std::size_t k) {
    if (k > std::min(a.rows(), a.cols()))
        throw std::invalid_argument("minor size " + std::to_string(k) + " exceeds matrix dimensions");
    std::vector<LaurentPoly> out;
    for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& rows) {
        for_each_subset(a.cols(), k,
                        [&](const std::vector<std::size_t>& cols) { out.push_back(determinant_of(a, rows, cols)); });
    });
    return out;
}

LineAnalysis line_rank_analysis(const LaurentMatrix& a, const std::vector<Monomial>& images, const ContextPtr& line) {
    if (line->free_rank() != 1 || line->has_torsion())
        throw ContextMismatch("line_rank_analysis: substitution must land in one free variable");
    const auto sub = substitute(a, images, line);

    std::vector<std::vector<RationalPoly>> rows;
    for (std::size_t i = 0; i < sub.rows(); ++i) {
        // Shift the whole row by one unit so every entry is a polynomial.
        std::int64_t lo = 0;
        bool any = false;
        for (std::size_t j = 0; j < sub.cols(); ++j) {
            if (sub(i, j).is_zero()) continue;
            const auto e = sub(i, j).min_free_exponents()[0];
            lo = any ? std::min(lo, e) : e;
            any = true;
        }
        std::vector<RationalPoly> row;
        for (std::size_t j = 0; j < sub.cols(); ++j) row.push_back(as_polynomial(sub(i, j), lo));
        rows.push_back(std::move(row));
    }

    LineAnalysis result{rational_function_rank(std::move(rows)), LaurentPoly(line)};
    if (result.generic_rank == 0) {
        result.drop_locus = LaurentPoly::constant(line, 1);
        return result;
    }
    RationalPoly g;
    for (const auto& minor : minors(sub, result.generic_rank)) {
        if (minor.is_zero()) continue;
        g = gcd(g, to_rational(minor));
        if (g.degree() == 0) break;
    }
    result.drop_locus = from_integer_poly(g.primitive(), line);
    return result;
}

nlohmann::json terms_to_json(const LaurentPoly& p) {
    auto out = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        auto term = nlohmann::json::array();
        if (c.fits_slong_p())
            term.push_back(c.get_si());
        else
            term.push_back(c.get_str());
        for (auto e : m.exps) term.push_back(e);
        out.push_back(std::move(term));
    }
    return out;
}

StrataReport certify_cs_strata(const LaurentMatrix& a, const CertifyOptions& options) {
    const auto& ctx = a.context();
    if (ctx->free_rank() != 2 || ctx->has_torsion())
        throw ContextMismatch("certify_cs_strata expects a matrix over Z[r^+-1, s^+-1]");
    if (a.rows() != 3) throw std::invalid_argument("certify_cs_strata expects three generators");
    if (options.modulus_bound < 1) throw std::invalid_argument("modulus bound must be at least 1");
    const std::size_t n = a.rows();

    StrataReport report;
    auto note = [&](const std::string& w) {
        if (report.witness.empty()) report.witness = w;
    };

    // (a) divisibility of every maximal minor by r - s
    const auto r_minus_s = LaurentPoly::monomial(ctx, {1, 0}) - LaurentPoly::monomial(ctx, {0, 1});
    const auto all = minors(a, n);
    report.minors_checked = all.size();
    std::vector<std::vector<std::size_t>> col_sets;
    for_each_subset(a.cols(), n, [&](const std::vector<std::size_t>& c) { col_sets.push_back(c); });
    for (std::size_t k = 0; k < all.size(); ++k) {
        try {
            exact_divide(all[k], r_minus_s);
            ++report.minors_divisible;
        } catch (const NotDivisible& e) {
            report.divisibility_failures.push_back({k, col_sets[k], e.remainder()});
            std::string cols;
            for (auto c : col_sets[k]) cols += (cols.empty() ? "" : ",") + std::to_string(c + 1);
            note("minor on relations {" + cols + "} is not divisible by r - s");
        }
    }

    // (b) the line s = r
    const auto line = VariableContext::make({"r"});
    const auto analysis = line_rank_analysis(a, {Monomial{{1}}, Monomial{{1}}}, line);
    report.line_generic_rank = analysis.generic_rank;
    report.line_drop_locus = analysis.drop_locus;
    {
        // drop locus must be (r - 1)^k with k >= 1
        const auto deg = analysis.drop_locus.is_zero() ? 0 : analysis.drop_locus.leading_monomial().exps[0];
        auto power = LaurentPoly::constant(line, 1);
        const auto r_minus_1 = LaurentPoly::monomial(line, {1}) - LaurentPoly::constant(line, 1);
        for (std::int64_t k = 0; k < deg; ++k) power *= r_minus_1;
        report.line_ok = analysis.generic_rank == n - 1 && deg >= 1 && power == analysis.drop_locus;
    }
    if (!report.line_ok)
        note("line s = r: generic rank " + std::to_string(analysis.generic_rank) + ", drop locus " +
             analysis.drop_locus.to_string());

    report.trivial_rank = rank_at_character(a, FiniteCharacter::trivial(2));
    report.trivial_ok = report.trivial_rank == n - 2;
    if (!report.trivial_ok) note("rank at the trivial character is " + std::to_string(report.trivial_rank));

    // (c) exhaustive sweep
    CharacterRankCache ranks(a);
    auto cached_rank = [&](std::int64_t m, std::int64_t x, std::int64_t y) {
        return ranks.rank(FiniteCharacter::make(m, {x, y}));
    };
    for (std::int64_t m = 1; m <= options.modulus_bound; ++m)
        for (std::int64_t x = 0; x < m; ++x)
            for (std::int64_t y = 0; y < m; ++y) {
                const std::size_t expected = x != y ? n : (x == 0 ? n - 2 : n - 1);
                const auto rank = cached_rank(m, x, y);
                report.torsion_sweep.push_back({m, x, y, rank, expected});
                if (rank != expected) {
                    ++report.sweep_failures;
                    note("character " + FiniteCharacter::make(m, {x, y}).to_string() + " has rank " +
                         std::to_string(rank) + ", expected " + std::to_string(expected));
                }
            }

    // (d) random characters off the line
    report.seed = options.seed;
    report.trials = options.samples;
    report.min_rank_off_line = n;
    std::mt19937_64 rng(options.seed);
    const auto max_m = std::max<std::int64_t>(2, options.sample_modulus_max);
    std::uniform_int_distribution<std::int64_t> pick_m(2, max_m);
    for (std::size_t t = 0; t < options.samples; ++t) {
        const auto m = pick_m(rng);
        std::uniform_int_distribution<std::int64_t> pick_e(0, m - 1);
        const auto x = pick_e(rng);
        auto y = pick_e(rng);
        while (y == x) y = pick_e(rng);
        const auto rank = cached_rank(m, x, y);
        report.min_rank_off_line = std::min(report.min_rank_off_line, rank);
        if (rank != n) {
            ++report.sampling_failures;
            note("sampled character " + FiniteCharacter::make(m, {x, y}).to_string() + " has rank " +
                 std::to_string(rank));
        }
    }

    report.confirmed = report.divisibility_failures.empty() && report.line_ok && report.trivial_ok &&
                       report.sweep_failures == 0 && report.sampling_failures == 0;
    return report;
}

nlohmann::json to_json(const StrataReport& report) {
    using nlohmann::json;
    json failures = json::array();
    for (const auto& f : report.divisibility_failures) {
        json cols = json::array();
        for (auto c : f.columns) cols.push_back(c + 1);
        failures.push_back({{"minor", f.index}, {"relations", cols}, {"remainder_terms", terms_to_json(f.remainder)}});
    }
    json sweep = json::array();
    for (const auto& e : report.torsion_sweep) sweep.push_back({{"m", e.m}, {"a", e.a}, {"b", e.b}, {"rank", e.rank}});
    return json{
        {"divisibility",
         {{"checked", report.minors_checked}, {"passed", report.minors_divisible}, {"failures", failures}}},
        {"line",
         {{"generic_rank", report.line_generic_rank},
          {"drop_locus_terms", report.line_drop_locus ? terms_to_json(*report.line_drop_locus) : json::array()},
          {"ok", report.line_ok}}},
        {"trivial_character", {{"rank", report.trivial_rank}, {"ok", report.trivial_ok}}},
        {"torsion_sweep", sweep},
        {"torsion_sweep_failures", report.sweep_failures},
        {"sampling",
         {{"seed", report.seed},
          {"trials", report.trials},
          {"min_rank_off_line", report.min_rank_off_line},
          {"failures", report.sampling_failures}}},
        {"verdict", report.verdict()},
        {"witness", report.witness},
    };
}

}  // namespace foxjump
