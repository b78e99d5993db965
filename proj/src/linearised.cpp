#include "addix/linearised.hpp"

#include "addix/error.hpp"

namespace addix {

LinearisedPoly LinearisedPoly::identity(const FieldCtx& ctx) {
    auto M = zero(ctx);
    M.coeffs[0] = ctx.one();
    return M;
}

int LinearisedPoly::degree_index() const {
    for (std::size_t j = coeffs.size(); j-- > 0;)
        if (coeffs[j].code != 0) return static_cast<int>(j);
    return -1;
}

Elem lp_eval(const FieldCtx& ctx, const LinearisedPoly& M, Elem x) {
    Elem acc = ctx.zero();
    Elem power = x;  // x^{p^j}
    const int top = M.degree_index();
    for (int j = 0; j <= top; ++j) {
        if (j > 0) power = ctx.frobenius(power);
        acc = ctx.add(acc, ctx.mul(M.coeffs[j], power));
    }
    return acc;
}

MatrixFp lp_to_matrix(const FieldCtx& ctx, const LinearisedPoly& M) {
    const unsigned n = ctx.n();
    MatrixFp A(n, n, ctx.p());
    for (unsigned i = 0; i < n; ++i) {
        const Digits col = ctx.digits(lp_eval(ctx, M, Elem{ctx.pow_p(i)}));
        for (unsigned r = 0; r < n; ++r) A(r, i) = col[r];
    }
    return A;
}

MatrixFp multiplication_matrix(const FieldCtx& ctx, Elem c) {
    const unsigned n = ctx.n();
    MatrixFp A(n, n, ctx.p());
    for (unsigned l = 0; l < n; ++l) {
        const Digits col = ctx.digits(ctx.mul(c, Elem{ctx.pow_p(l)}));
        for (unsigned r = 0; r < n; ++r) A(r, l) = col[r];
    }
    return A;
}

namespace {

// Variable index of digit d of coefficient a_j.
inline std::size_t var_index(unsigned n, unsigned j, unsigned d) { return std::size_t{j} * n + (n - 1 - d); }

}  // namespace

void append_lp_equations(const FieldCtx& ctx, unsigned terms, Elem x, Elem y, MatrixFp& A, Digits& rhs) {
    const unsigned n = ctx.n();
    std::vector<MatrixFp> blocks;
    Elem power = x;
    for (unsigned j = 0; j < terms; ++j) {
        if (j > 0) power = ctx.frobenius(power);
        blocks.push_back(multiplication_matrix(ctx, power));
    }
    const Digits yd = ctx.digits(y);
    Digits row(std::size_t{terms} * n);
    for (unsigned r = 0; r < n; ++r) {
        for (unsigned j = 0; j < terms; ++j)
            for (unsigned d = 0; d < n; ++d) row[var_index(n, j, d)] = blocks[j](r, d);
        A.append_row(row);
        rhs.push_back(yd[r]);
    }
}

LinearisedPoly lp_from_solution(const FieldCtx& ctx, std::span<const std::uint32_t> sol, unsigned terms) {
    const unsigned n = ctx.n();
    auto M = LinearisedPoly::zero(ctx);
    Digits d(n);
    for (unsigned j = 0; j < terms; ++j) {
        for (unsigned k = 0; k < n; ++k) d[k] = sol[var_index(n, j, k)];
        M.coeffs[j] = ctx.from_digits(d);
    }
    return M;
}

LinearisedPoly lp_from_matrix(const FieldCtx& ctx, const MatrixFp& A) {
    const unsigned n = ctx.n();
    if (A.rows() != n || A.cols() != n) throw Error(ErrorKind::DimensionMismatch, "matrix must be n x n");
    MatrixFp sys(0, std::size_t{n} * n, ctx.p());
    Digits rhs;
    Digits col(n);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned r = 0; r < n; ++r) col[r] = A(r, i);
        append_lp_equations(ctx, n, Elem{ctx.pow_p(i)}, ctx.from_digits(col), sys, rhs);
    }
    const SolveResult res = solve(sys, rhs);
    if (!res.consistent || !res.kernel_basis.empty())
        throw Error(ErrorKind::SingularBasis, "linearised polynomial system is not uniquely solvable");
    return lp_from_solution(ctx, *res.particular, n);
}

SolveResult lp_fit_system(const FieldCtx& ctx, const Subspace& U, std::span<const Elem> targets) {
    if (targets.size() != U.dim()) throw Error(ErrorKind::DimensionMismatch, "one target per basis vector");
    const unsigned n = ctx.n(), r = U.dim();
    MatrixFp sys(0, std::size_t{r} * n, ctx.p());
    Digits rhs;
    const auto basis = U.basis_elements(ctx);
    for (unsigned i = 0; i < r; ++i) append_lp_equations(ctx, r, basis[i], targets[i], sys, rhs);
    return solve(sys, rhs);
}

LinearisedPoly lp_fit_on_subspace(const FieldCtx& ctx, const Subspace& U, std::span<const Elem> targets) {
    if (U.dim() == 0) {
        if (!targets.empty()) throw Error(ErrorKind::DimensionMismatch, "one target per basis vector");
        return LinearisedPoly::zero(ctx);
    }
    const SolveResult res = lp_fit_system(ctx, U, targets);
    if (!res.consistent) throw Error(ErrorKind::DimensionMismatch, "fitting system inconsistent");
    const Digits best = lex_min_in_coset(*res.particular, res.kernel_basis, ctx.p());
    return lp_from_solution(ctx, best, U.dim());
}

}  // namespace addix
