#pragma once

// Linearised polynomials M(X) = sum_{j<n} a_j X^{p^j} over F_q and their
// correspondence with F_p-linear maps.

#include <span>
#include <vector>

#include "addix/field.hpp"
#include "addix/linalg.hpp"

namespace addix {

struct LinearisedPoly {
    std::vector<Elem> coeffs;  // a_0 .. a_{n-1}

    static LinearisedPoly zero(const FieldCtx& ctx) { return {std::vector<Elem>(ctx.n(), Elem{0})}; }
    static LinearisedPoly identity(const FieldCtx& ctx);

    /// Largest j with a_j != 0, or -1 for the zero polynomial. The degree is p^j.
    int degree_index() const;

    friend bool operator==(const LinearisedPoly&, const LinearisedPoly&) = default;
};

Elem lp_eval(const FieldCtx& ctx, const LinearisedPoly& M, Elem x);

/// n x n matrix over F_p whose column i holds the digits of M(a^i), so that
/// digits(M(x)) = A * digits(x).
MatrixFp lp_to_matrix(const FieldCtx& ctx, const LinearisedPoly& M);
LinearisedPoly lp_from_matrix(const FieldCtx& ctx, const MatrixFp& A);

/// Matrix (n rows, n columns) of y -> c*y over F_p.
MatrixFp multiplication_matrix(const FieldCtx& ctx, Elem c);

/// Solution space of the fitting system in the digits of a_0..a_{r-1}.
/// Variables are ordered a_0 first; within a coefficient the most significant
/// digit comes first, so lexicographic order on the solution vector is the
/// canonical coefficient order.
SolveResult lp_fit_system(const FieldCtx& ctx, const Subspace& U, std::span<const Elem> targets);

/// Linearised polynomial with a_j = 0 for j >= dim U that sends the i-th
/// basis element of U to targets[i]. Unique by the root-count argument.
LinearisedPoly lp_fit_on_subspace(const FieldCtx& ctx, const Subspace& U, std::span<const Elem> targets);

/// Appends the n equations digits(sum_{j<terms} a_j x^{p^j}) = digits(y) in
/// the variable layout of lp_fit_system.
void append_lp_equations(const FieldCtx& ctx, unsigned terms, Elem x, Elem y, MatrixFp& A, Digits& rhs);

/// Decodes a solution vector of lp_fit_system (or any system using the same
/// variable layout with `terms` coefficients) into a polynomial.
LinearisedPoly lp_from_solution(const FieldCtx& ctx, std::span<const std::uint32_t> sol, unsigned terms);

}  // namespace addix
