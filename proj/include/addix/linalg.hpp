#pragma once

// Dense linear algebra over a prime field F_p: elimination, solution spaces,
// canonical subspaces and their enumeration, coset labels.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "addix/field.hpp"

namespace addix {

class MatrixFp {
public:
    MatrixFp() = default;
    MatrixFp(std::size_t rows, std::size_t cols, std::uint32_t p);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::uint32_t p() const noexcept { return p_; }

    std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const std::uint32_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void append_row(std::span<const std::uint32_t> values);
    Digits apply(std::span<const std::uint32_t> v) const;

    /// In-place reduced row echelon form, pivots leftmost. Zero rows are
    /// dropped. Returns the pivot column of each remaining row.
    std::vector<std::size_t> rref();

    friend bool operator==(const MatrixFp&, const MatrixFp&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::uint32_t p_ = 2;
    std::vector<std::uint32_t> data_;
};

struct SolveResult {
    bool consistent = false;
    std::optional<Digits> particular;  // free variables set to zero
    std::vector<Digits> kernel_basis;  // rref basis of the homogeneous solutions
};

/// Solves A x = b over F_p.
SolveResult solve(const MatrixFp& A, std::span<const std::uint32_t> b);

/// The lexicographically least element (index 0 most significant) of the
/// affine space v + span(kernel_basis).
Digits lex_min_in_coset(std::span<const std::uint32_t> v, const std::vector<Digits>& kernel_basis,
                        std::uint32_t p);

/// Number of r-dimensional subspaces of F_p^n.
std::uint64_t gaussian_binomial(unsigned n, unsigned r, std::uint32_t p);

/// F_p-linear subspace of F_q in canonical form.
///
/// Rows are digit vectors in the working basis. The echelon form is taken
/// with respect to the most significant digit: each row's pivot is its highest
/// nonzero digit, equal to 1, and every other row vanishes at that column.
/// Reducing an element by this basis therefore yields the least code in its
/// coset. Rows are kept sorted by ascending pivot.
class Subspace {
public:
    Subspace() = default;
    /// Canonicalizes the span of the given digit vectors.
    Subspace(std::uint32_t p, unsigned n, const std::vector<Digits>& spanning);

    std::uint32_t p() const noexcept { return p_; }
    unsigned n() const noexcept { return n_; }
    unsigned dim() const noexcept { return static_cast<unsigned>(pivots_.size()); }
    unsigned codim() const noexcept { return n_ - dim(); }
    const std::vector<Digits>& basis() const noexcept { return rows_; }
    const std::vector<unsigned>& pivots() const noexcept { return pivots_; }

    /// Coset label in [0, p^codim): the non-pivot digits of the reduced
    /// representative packed base p (ascending columns). Label 0 is U.
    std::uint64_t coset_label(const FieldCtx& ctx, Elem x) const;
    /// Least-code element of the coset x + U.
    Elem representative(const FieldCtx& ctx, Elem x) const;
    /// Least-code element of the coset with the given label.
    Elem representative_of_label(const FieldCtx& ctx, std::uint64_t label) const;
    /// Coordinates of the U-part of x along the basis rows: x = rep + sum c_i u_i.
    Digits coordinates(const FieldCtx& ctx, Elem x) const;
    bool contains(const FieldCtx& ctx, Elem x) const { return coset_label(ctx, x) == 0; }
    std::vector<Elem> basis_elements(const FieldCtx& ctx) const;
    /// All p^dim elements of U.
    std::vector<Elem> elements(const FieldCtx& ctx) const;
    std::uint64_t num_cosets() const;

    /// Row-major digits of the canonical basis, preceded by (n, r, p).
    std::vector<std::uint32_t> serialize() const;
    static Subspace deserialize(std::span<const std::uint32_t> data);

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.p_ == b.p_ && a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    friend class SubspaceEnumeration;
    std::uint32_t p_ = 2;
    unsigned n_ = 0;
    std::vector<Digits> rows_;
    std::vector<unsigned> pivots_;
    std::vector<unsigned> free_cols_;  // non-pivot columns, ascending
};

/// Random-access view of all r-dimensional subspaces of F_p^n in canonical
/// order: pivot sets as ascending column lists in lexicographic order, then
/// the free entries (row-major, rows by ascending pivot) as a base-p counter
/// with the first free entry most significant.
class SubspaceEnumeration {
public:
    SubspaceEnumeration(std::uint32_t p, unsigned n, unsigned r);

    std::uint64_t size() const noexcept { return total_; }
    Subspace at(std::uint64_t index) const;
    void for_each(const std::function<bool(const Subspace&)>& visit) const;

private:
    struct Block {
        std::vector<unsigned> pivots;  // ascending; row i has pivot pivots[i]
        std::vector<std::pair<unsigned, unsigned>> free_entries;  // (row, col)
        std::uint64_t count = 0;
        std::uint64_t offset = 0;
    };

    std::uint32_t p_;
    unsigned n_, r_;
    std::vector<Block> blocks_;
    std::uint64_t total_ = 0;
};

/// Convenience wrapper around SubspaceEnumeration.
std::vector<Subspace> enumerate_subspaces(const FieldCtx& ctx, unsigned r);

std::uint64_t coset_label(const Subspace& U, const FieldCtx& ctx, Elem x);

}  // namespace addix
