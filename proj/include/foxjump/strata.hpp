#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "foxjump/cyclotomic.hpp"
#include "foxjump/fox.hpp"
#include "foxjump/laurent.hpp"

namespace foxjump {

/// Exact rank of a matrix over Q(zeta_m); all entries must share one field.
std::size_t cyclotomic_rank(std::vector<std::vector<CyclotomicNumber>> rows);

/// Exact rank of the matrix evaluated at rho.
std::size_t rank_at_character(const LaurentMatrix& a, const FiniteCharacter& rho);
inline std::size_t rank_at_character(const AlexanderMatrix& a, const FiniteCharacter& rho) {
    return rank_at_character(a.entries, rho);
}

/// Memoizes rank_at_character on characters brought to lowest terms
/// (zeta_m^e with gcd(m, e) = g is zeta_{m/g}^{e/g}).
class CharacterRankCache {
   public:
    explicit CharacterRankCache(const LaurentMatrix& a) : a_(&a) {}
    std::size_t rank(const FiniteCharacter& rho);
    std::size_t evaluations() const noexcept { return cache_.size(); }

   private:
    const LaurentMatrix* a_;
    std::map<std::pair<std::int64_t, std::vector<std::int64_t>>, std::size_t> cache_;
};

/// Character with the smallest modulus representing the same values.
FiniteCharacter lowest_terms(const FiniteCharacter& rho);

/// rho lies in V_i iff rank(A_rho) < n - i, for 0 <= i < n (n = rows).
bool stratum_membership(const LaurentMatrix& a, const FiniteCharacter& rho, std::size_t i);
inline bool stratum_membership(const AlexanderMatrix& a, const FiniteCharacter& rho, std::size_t i) {
    return stratum_membership(a.entries, rho, i);
}

/// Number of strata V_1 ... V_{n-1} containing a character of the given rank.
std::size_t stratum_depth(std::size_t rank, std::size_t rows);

/// Determinant by cofactor expansion along the first row.
LaurentPoly determinant(const LaurentMatrix& square);

/// All k x k minors, ordered lexicographically by row index set, then by
/// column index set. Throws std::invalid_argument when k > min(rows, cols).
std::vector<LaurentPoly> minors(const LaurentMatrix& a, std::size_t k);

struct LineAnalysis {
    std::size_t generic_rank = 0;
    /// Primitive generator (positive leading coefficient, no monomial
    /// factor) of the gcd of all generic_rank-sized minors.
    LaurentPoly drop_locus;
};

/// Substitutes variable i -> images[i] in the univariate context `line`
/// and analyses the rank over Q(t).
LineAnalysis line_rank_analysis(const LaurentMatrix& a, const std::vector<Monomial>& images, const ContextPtr& line);

struct CertifyOptions {
    std::int64_t modulus_bound = 12;
    std::size_t samples = 200;
    std::uint64_t seed = 20170601;
    /// Sampled characters use moduli in [2, sample_modulus_max].
    std::int64_t sample_modulus_max = 36;
};

struct MinorFailure {
    std::size_t index;
    std::vector<std::size_t> columns;
    LaurentPoly remainder;
};

struct SweepEntry {
    std::int64_t m, a, b;
    std::size_t rank;
    std::size_t expected;
};

struct StrataReport {
    std::size_t minors_checked = 0;
    std::size_t minors_divisible = 0;
    std::vector<MinorFailure> divisibility_failures;

    std::size_t line_generic_rank = 0;
    std::optional<LaurentPoly> line_drop_locus;
    bool line_ok = false;
    std::size_t trivial_rank = 0;
    bool trivial_ok = false;

    std::vector<SweepEntry> torsion_sweep;
    std::size_t sweep_failures = 0;

    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t min_rank_off_line = 0;
    std::size_t sampling_failures = 0;

    bool confirmed = false;
    std::string witness;

    std::string verdict() const { return confirmed ? "confirmed" : "refuted"; }
};

/// Checks the stratification V_0 = {r = s} > V_1 = {1} > V_2 = {} for a
/// 3 x m matrix over Z[r^+-1, s^+-1]: every 3 x 3 minor divisible by r - s,
/// generic rank 2 on the line s = r with drop locus supported at r = 1,
/// rank 1 at the trivial character, an exhaustive sweep of all characters
/// of modulus <= modulus_bound, and randomized characters off the line.
/// Failures are recorded in the report, not thrown.
StrataReport certify_cs_strata(const LaurentMatrix& a, const CertifyOptions& options = {});

nlohmann::json to_json(const StrataReport& report);
/// Terms as [coef, e_1, ..., e_n]; coefficients beyond 64 bits are strings.
nlohmann::json terms_to_json(const LaurentPoly& p);

}  // namespace foxjump
