#include "foxjump/covers.hpp"

#include <algorithm>
#include <stdexcept>

#include "foxjump/strata.hpp"

namespace foxjump {

namespace {

std::int64_t to_i64(const mpz_class& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("lattice entry exceeds 64 bits");
    return z.get_si();
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    const auto r = a % m;
    return r < 0 ? r + m : r;
}

std::string join(const std::vector<std::int64_t>& v, const char* sep) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? sep : "") + std::to_string(v[k]);
    return out;
}

// Ordered factorizations of n into `parts` positive factors.
void for_each_diagonal(std::int64_t n, std::size_t parts, std::vector<std::int64_t>& diag,
                       const std::function<void(const std::vector<std::int64_t>&)>& fn) {
    if (diag.size() + 1 == parts) {
        diag.push_back(n);
        fn(diag);
        diag.pop_back();
        return;
    }
    for (std::int64_t d = 1; d <= n; ++d) {
        if (n % d) continue;
        diag.push_back(d);
        for_each_diagonal(n / d, parts, diag, fn);
        diag.pop_back();
    }
}

std::int64_t betti_with(CharacterRankCache& ranks, std::size_t generators, std::int64_t b1,
                        const Sublattice& lattice) {
    std::int64_t b = b1;
    for (const auto& rho : characters_of_quotient(lattice)) {
        if (rho.is_trivial()) continue;
        b += static_cast<std::int64_t>(stratum_depth(ranks.rank(rho), generators));
    }
    return b;
}

void check_lattice_context(const LaurentMatrix& a, const Sublattice& lattice) {
    const auto& ctx = *a.context();
    if (ctx.has_torsion() || ctx.free_rank() != lattice.dim())
        throw ContextMismatch("sublattice of Z^" + std::to_string(lattice.dim()) +
                              " does not match a context with free rank " + std::to_string(ctx.free_rank()) +
                              (ctx.has_torsion() ? " and torsion" : ""));
}

}  // namespace

Sublattice::Sublattice(const IntMatrix& basis) {
    if (basis.cols() == 0) throw std::invalid_argument("sublattice of Z^0");
    basis_ = hermite_normal_form(basis);
    if (basis_.rows() != basis.cols())
        throw std::invalid_argument("basis does not span a finite-index sublattice");
}

std::int64_t Sublattice::index() const {
    std::int64_t n = 1;
    for (std::size_t i = 0; i < dim(); ++i) n *= to_i64(basis_(i, i));
    return n;
}

std::vector<std::int64_t> Sublattice::upper_triangle() const {
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i; j < dim(); ++j) out.push_back(to_i64(basis_(i, j)));
    return out;
}

bool Sublattice::contains(const std::vector<std::int64_t>& v) const {
    if (v.size() != dim()) throw std::invalid_argument("vector length does not match lattice dimension");
    std::vector<mpz_class> rest(v.begin(), v.end());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (rest[i] % basis_(i, i) != 0) return false;
        const mpz_class c = rest[i] / basis_(i, i);
        for (std::size_t j = i; j < dim(); ++j) rest[j] -= c * basis_(i, j);
    }
    return true;
}

std::int64_t divisor_sum(std::int64_t n) {
    if (n <= 0) throw std::invalid_argument("divisor_sum requires n >= 1");
    std::int64_t s = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        s += d;
        if (d * d != n) s += n / d;
    }
    return s;
}

std::vector<Sublattice> sublattices(std::int64_t n, std::size_t dim) {
    if (n <= 0) throw std::invalid_argument("sublattice index must be positive, got " + std::to_string(n));
    if (dim == 0) throw std::invalid_argument("sublattice dimension must be positive");
    std::vector<Sublattice> out;
    std::vector<std::int64_t> diag;
    for_each_diagonal(n, dim, diag, [&](const std::vector<std::int64_t>& d) {
        IntMatrix h(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) h(i, i) = d[i];
        // Odometer over the entries above the diagonal; column j ranges over [0, d_j).
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t i = 0; i < j; ++i) slots.emplace_back(i, j);
        for (;;) {
            out.emplace_back(h);
            std::size_t k = 0;
            for (; k < slots.size(); ++k) {
                auto& e = h(slots[k].first, slots[k].second);
                if (e + 1 < d[slots[k].second]) {
                    ++e;
                    break;
                }
                e = 0;
            }
            if (k == slots.size()) break;
        }
    });
    std::sort(out.begin(), out.end(),
              [](const Sublattice& x, const Sublattice& y) { return x.upper_triangle() < y.upper_triangle(); });
    return out;
}

std::int64_t CoverSpec::order() const {
    std::int64_t n = 1;
    for (auto d : invariant_factors) n *= d;
    return n;
}

CoverSpec cover_spec(const Sublattice& lattice) {
    const auto snf = smith_normal_form(lattice.basis());
    const auto f = lattice.dim();
    CoverSpec spec{lattice, {}, {}};
    for (std::size_t k = 0; k < f; ++k) spec.invariant_factors.push_back(to_i64(abs(snf.D(k, k))));
    // L V = span(D), so x -> x V carries Z^f / L onto the product of Z/d_k.
    spec.generator_images.assign(f, std::vector<std::int64_t>(f, 0));
    for (std::size_t j = 0; j < f; ++j)
        for (std::size_t k = 0; k < f; ++k) {
            const mpz_class r = snf.V(j, k) % spec.invariant_factors[k];
            spec.generator_images[j][k] = floor_mod(to_i64(r), spec.invariant_factors[k]);
        }
    return spec;
}

std::vector<FiniteCharacter> characters_of_quotient(const Sublattice& lattice) {
    const auto spec = cover_spec(lattice);
    const auto f = lattice.dim();
    const auto m = spec.exponent();
    std::vector<FiniteCharacter> out;
    std::vector<std::int64_t> c(f, 0);
    for (;;) {
        std::vector<std::int64_t> exps(f, 0);
        for (std::size_t j = 0; j < f; ++j) {
            std::int64_t e = 0;
            for (std::size_t k = 0; k < f; ++k)
                e = floor_mod(e + spec.generator_images[j][k] * c[k] % m * (m / spec.invariant_factors[k]) % m, m);
            exps[j] = e;
        }
        out.push_back(FiniteCharacter::make(m, std::move(exps)));
        std::size_t k = f;
        for (; k > 0; --k) {
            if (++c[k - 1] < spec.invariant_factors[k - 1]) break;
            c[k - 1] = 0;
        }
        if (k == 0) return out;
    }
}

std::int64_t betti_of_cover(const LaurentMatrix& a, std::int64_t b1, const Sublattice& lattice) {
    check_lattice_context(a, lattice);
    CharacterRankCache ranks(a);
    return betti_with(ranks, a.rows(), b1, lattice);
}

bool CensusSummary::counts_match() const {
    return std::all_of(per_n.begin(), per_n.end(), [](const CensusTotals& t) { return t.rows == t.sigma; });
}

bool CensusSummary::all_b1_equal(std::int64_t value) const {
    return std::all_of(per_n.begin(), per_n.end(),
                       [&](const CensusTotals& t) { return t.min_b1 == value && t.max_b1 == value; });
}

namespace {

// Number of index-n sublattices of Z^f: a_f(n) = sum_{d | n} d^(f-1) a_{f-1}(n / d).
std::int64_t sublattice_count(std::int64_t n, std::size_t f) {
    if (f == 0) return n == 1 ? 1 : 0;
    std::int64_t total = 0;
    for (std::int64_t d = 1; d <= n; ++d) {
        if (n % d) continue;
        std::int64_t w = 1;
        for (std::size_t k = 1; k < f; ++k) w *= d;
        total += w * sublattice_count(n / d, f - 1);
    }
    return total;
}

}  // namespace

CensusSummary betti_census(const Presentation& p, const AbelianizationMap& map, std::int64_t n_max,
                           const std::function<void(const CensusRow&)>& sink) {
    if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
    const auto ab = abelianization(p);
    if (!ab.torsion.empty() || map.context->has_torsion())
        throw std::invalid_argument("cover census requires torsion-free H1; this presentation has torsion (" +
                                    join(ab.torsion, ", ") + ")");
    if (ab.free_rank == 0) throw std::invalid_argument("cover census requires H1 of positive rank");
    if (map.context->free_rank() != ab.free_rank)
        throw ContextMismatch("assignment context rank does not match H1");

    const auto alexander = alexander_matrix(p, map);
    CharacterRankCache ranks(alexander.entries);
    CensusSummary summary;
    summary.base_b1 = static_cast<std::int64_t>(ab.free_rank);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        CensusTotals totals{n, 0, sublattice_count(n, ab.free_rank), 0, 0};
        for (const auto& lattice : sublattices(n, ab.free_rank)) {
            const auto spec = cover_spec(lattice);
            CensusRow row{n, lattice.upper_triangle(), spec.invariant_factors,
                          betti_with(ranks, alexander.generators(), summary.base_b1, lattice)};
            totals.min_b1 = totals.rows ? std::min(totals.min_b1, row.b1) : row.b1;
            totals.max_b1 = totals.rows ? std::max(totals.max_b1, row.b1) : row.b1;
            ++totals.rows;
            if (sink) sink(row);
        }
        summary.total_rows += totals.rows;
        summary.per_n.push_back(totals);
    }
    summary.character_evaluations = ranks.evaluations();
    return summary;
}

nlohmann::json to_json(const CensusRow& row) {
    return {{"n", row.n}, {"hnf", row.hnf}, {"invariant_factors", row.invariant_factors}, {"b1", row.b1}};
}

nlohmann::json to_json(const CensusSummary& summary) {
    auto per_n = nlohmann::json::array();
    for (const auto& t : summary.per_n)
        per_n.push_back(
            {{"n", t.n}, {"rows", t.rows}, {"sigma", t.sigma}, {"min_b1", t.min_b1}, {"max_b1", t.max_b1}});
    return {{"b1", summary.base_b1},
            {"per_n", per_n},
            {"total_rows", summary.total_rows},
            {"counts_match", summary.counts_match()},
            {"character_evaluations", summary.character_evaluations}};
}

void write_csv_header(std::ostream& os) { os << "n,hnf,invariant_factors,b1\n"; }

void write_csv_row(std::ostream& os, const CensusRow& row) {
    os << row.n << ',' << join(row.hnf, " ") << ',' << join(row.invariant_factors, " ") << ',' << row.b1 << '\n';
}

}  // namespace foxjump
