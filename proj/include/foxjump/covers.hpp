#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "foxjump/abelian.hpp"
#include "foxjump/cyclotomic.hpp"
#include "foxjump/fox.hpp"
#include "foxjump/presentation.hpp"

namespace foxjump {

/// Finite-index sublattice of Z^f spanned by the rows of an upper-triangular
/// Hermite basis: positive diagonal, entries above each pivot in [0, pivot).
class Sublattice {
   public:
    /// Normalizes any full-rank integer basis (rows) to Hermite form.
    explicit Sublattice(const IntMatrix& basis);

    std::size_t dim() const noexcept { return basis_.rows(); }
    std::int64_t index() const;
    const IntMatrix& basis() const noexcept { return basis_; }
    /// Upper triangle row by row: [a, b, d] for [[a, b], [0, d]].
    std::vector<std::int64_t> upper_triangle() const;
    /// Whether v lies in the lattice.
    bool contains(const std::vector<std::int64_t>& v) const;

    bool operator==(const Sublattice& other) const { return basis_ == other.basis_; }

   private:
    IntMatrix basis_;
};

/// Divisor sum sigma(n); throws std::invalid_argument for n <= 0.
std::int64_t divisor_sum(std::int64_t n);

/// All sublattices of Z^dim of index n, in lexicographic order of their
/// upper triangles. For dim = 2 there are sigma(n) of them.
std::vector<Sublattice> sublattices(std::int64_t n, std::size_t dim = 2);

/// The quotient G = Z^f / L with its Smith coordinates.
struct CoverSpec {
    Sublattice lattice;
    /// d_1 | d_2 | ... | d_f, including factors equal to 1.
    std::vector<std::int64_t> invariant_factors;
    /// generator_images[j][k]: coordinate k in Z/d_k of the image of e_j.
    std::vector<std::vector<std::int64_t>> generator_images;

    std::int64_t order() const;
    std::int64_t exponent() const { return invariant_factors.empty() ? 1 : invariant_factors.back(); }
};

CoverSpec cover_spec(const Sublattice& lattice);

/// The |G| characters of G, as characters of Z^f with modulus exp(G); the
/// trivial character comes first.
std::vector<FiniteCharacter> characters_of_quotient(const Sublattice& lattice);

/// b_1 of the cover given by the kernel of Z^f -> Z^f / L: b1 plus, for each
/// nontrivial character, the number of strata V_1 ... V_{n-1} containing it.
std::int64_t betti_of_cover(const LaurentMatrix& a, std::int64_t b1, const Sublattice& lattice);
inline std::int64_t betti_of_cover(const AlexanderMatrix& a, std::int64_t b1, const Sublattice& lattice) {
    return betti_of_cover(a.entries, b1, lattice);
}

struct CensusRow {
    std::int64_t n;
    std::vector<std::int64_t> hnf;
    std::vector<std::int64_t> invariant_factors;
    std::int64_t b1;
};

struct CensusTotals {
    std::int64_t n;
    std::int64_t rows;
    std::int64_t sigma;
    std::int64_t min_b1;
    std::int64_t max_b1;
};

struct CensusSummary {
    std::int64_t base_b1 = 0;
    std::vector<CensusTotals> per_n;
    std::int64_t total_rows = 0;
    std::size_t character_evaluations = 0;

    /// Every per-n row count agrees with the divisor sum (free rank 2 only).
    bool counts_match() const;
    bool all_b1_equal(std::int64_t value) const;
};

/// Streams one row per sublattice of index n <= n_max, in order of n then
/// Hermite basis. Rejects presentations whose H_1 has torsion.
CensusSummary betti_census(const Presentation& p, const AbelianizationMap& map, std::int64_t n_max,
                           const std::function<void(const CensusRow&)>& sink = {});

nlohmann::json to_json(const CensusRow& row);
nlohmann::json to_json(const CensusSummary& summary);
void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const CensusRow& row);

}  // namespace foxjump
