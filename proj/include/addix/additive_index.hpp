#pragma once

// Codimension-k representability of partial maps F: D -> F_q, i.e. witnesses
// F(x) = M(x) + a_{label(x)} with M linearised and U a subspace of codim k,
// and the least such k.

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "addix/linalg.hpp"
#include "addix/linearised.hpp"
#include "addix/maps.hpp"

namespace addix {

struct AffineWitness {
    Subspace U;
    LinearisedPoly M;
    std::vector<Elem> constants;  // indexed by coset label, p^k entries

    unsigned k() const noexcept { return U.codim(); }
    Elem eval(const FieldCtx& ctx, Elem x) const;
};

/// Cheap feasibility test for a fixed U. Eliminates the unknowns
/// M(u_1), ..., M(u_r) over F_p using the differences of points sharing a
/// coset; equivalent to consistency of the full witness system.
class FeasibilityTester {
public:
    explicit FeasibilityTester(const PartialMap& F);
    bool operator()(const Subspace& U);
    /// Same test on the sub-map without the positions flagged in `skip`.
    bool operator()(const Subspace& U, const std::vector<bool>& skip);

private:
    bool run(const Subspace& U, const std::vector<bool>* skip);
    bool insert(std::vector<std::uint32_t>& coeff, Elem rhs);

    const PartialMap* F_;
    std::vector<std::uint32_t> inv_p_;
    std::vector<std::uint32_t> anchor_;  // rep code -> anchor position
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
    std::vector<std::uint32_t> coords_;  // position * n + i
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<Elem> rhs_;
    std::vector<unsigned> piv_;
};

bool is_feasible(const PartialMap& F, const Subspace& U);

/// The witness system in matrix form: n^2 entries of M, then n digits per
/// occupied coset. Returns the lexicographically least solution, M of full
/// degree, empty cosets 0.
std::optional<AffineWitness> solve_witness_system(const PartialMap& F, const Subspace& U);

/// Replaces M by the unique M' with a_j = 0 for j >= dim U agreeing with M on
/// U, and shifts every constant so that the total map on F_q is unchanged.
AffineWitness degree_reduce(const FieldCtx& ctx, const AffineWitness& w);

/// Canonical witness: solve_witness_system, degree_reduce, empty cosets 0.
std::optional<AffineWitness> fit_witness(const PartialMap& F, const Subspace& U);

/// Witness equation at every domain point, a_j = 0 for j >= n - k, and the
/// constant table has p^k entries.
bool verify_witness(const PartialMap& F, const AffineWitness& w);

struct CodimRecord {
    unsigned k = 0;
    std::uint64_t subspaces_total = 0;
    std::uint64_t subspaces_tested = 0;  // as counted by a sequential scan
    bool feasible = false;
    bool complete = true;
};

struct IndexResult {
    /// k* when complete; otherwise every k below this value is certified infeasible.
    unsigned least_codim = 0;
    bool complete = true;
    std::optional<AffineWitness> witness;
    std::vector<CodimRecord> per_k;
    std::vector<std::size_t> dropped;  // positions removed by the outlier search
};

struct SearchOptions {
    std::optional<unsigned> k_max;
    unsigned threads = 1;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    bool suppress_trivial_witness = false;
};

/// Options with the deadline taken from ADDIX_BUDGET_MS when set.
SearchOptions default_search_options();

IndexResult least_codimension(const PartialMap& F, const SearchOptions& opts = {});

/// Limits for the exact outlier search.
inline constexpr std::size_t kOutlierMaxDomain = 64;
inline constexpr std::uint64_t kOutlierMaxSubsets = 50000;

/// Minimum of least_codimension over all sub-maps with min(m, |D|) positions
/// removed. Throws BudgetExceeded beyond the limits above.
IndexResult least_codimension_with_outliers(const PartialMap& F, std::uint64_t m, const SearchOptions& opts = {});

}  // namespace addix
