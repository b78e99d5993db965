#include "addix/linalg.hpp"

#include "addix/arith.hpp"
#include "addix/error.hpp"

#include <algorithm>

namespace addix {

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t r = 1, b = a % p;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<std::uint32_t>(r);
}

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

}  // namespace

MatrixFp::MatrixFp(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

void MatrixFp::append_row(std::span<const std::uint32_t> values) {
    if (values.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "row length differs from cols");
    for (auto v : values) data_.push_back(v % p_);
    ++rows_;
}

Digits MatrixFp::apply(std::span<const std::uint32_t> v) const {
    if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "vector length differs from cols");
    Digits out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) acc = (acc + static_cast<std::uint64_t>((*this)(r, c)) * v[c]) % p_;
        out[r] = static_cast<std::uint32_t>(acc);
    }
    return out;
}

std::vector<std::size_t> MatrixFp::rref() {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
        std::size_t sel = lead;
        while (sel < rows_ && (*this)(sel, c) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != lead)
            for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(sel, j), (*this)(lead, j));
        const std::uint32_t iv = inv_mod((*this)(lead, c), p_);
        for (std::size_t j = c; j < cols_; ++j) (*this)(lead, j) = mul_mod((*this)(lead, j), iv, p_);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == lead) continue;
            const std::uint32_t f = (*this)(r, c);
            if (f == 0) continue;
            for (std::size_t j = c; j < cols_; ++j)
                (*this)(r, j) = sub_mod((*this)(r, j), mul_mod(f, (*this)(lead, j), p_), p_);
        }
        pivots.push_back(c);
        ++lead;
    }
    rows_ = lead;
    data_.resize(rows_ * cols_);
    return pivots;
}

SolveResult solve(const MatrixFp& A, std::span<const std::uint32_t> b) {
    if (b.size() != A.rows()) throw Error(ErrorKind::DimensionMismatch, "rhs length differs from rows");
    const std::uint32_t p = A.p();
    const std::size_t n = A.cols();
    MatrixFp aug(0, n + 1, p);
    Digits row(n + 1);
    for (std::size_t r = 0; r < A.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) row[c] = A(r, c);
        row[n] = b[r] % p;
        aug.append_row(row);
    }
    const auto pivots = aug.rref();
    SolveResult res;
    if (!pivots.empty() && pivots.back() == n) return res;  // 0 = nonzero
    res.consistent = true;
    Digits x(n, 0);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        x[pivots[i]] = aug(i, n);
        is_pivot[pivots[i]] = true;
    }
    res.particular = std::move(x);
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Digits k(n, 0);
        k[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) k[pivots[i]] = (p - aug(i, f)) % p;
        res.kernel_basis.push_back(std::move(k));
    }
    if (!res.kernel_basis.empty()) {
        MatrixFp K(0, n, p);
        for (const auto& k : res.kernel_basis) K.append_row(k);
        K.rref();
        res.kernel_basis.clear();
        for (std::size_t i = 0; i < K.rows(); ++i) res.kernel_basis.emplace_back(K.row(i).begin(), K.row(i).end());
    }
    return res;
}

Digits lex_min_in_coset(std::span<const std::uint32_t> v, const std::vector<Digits>& kernel_basis,
                        std::uint32_t p) {
    Digits out(v.begin(), v.end());
    if (kernel_basis.empty()) return out;
    MatrixFp K(0, out.size(), p);
    for (const auto& k : kernel_basis) K.append_row(k);
    const auto pivots = K.rref();
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const std::uint32_t c = out[pivots[i]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = sub_mod(out[j], mul_mod(c, K(i, j), p), p);
    }
    return out;
}

std::uint64_t gaussian_binomial(unsigned n, unsigned r, std::uint32_t p) {
    if (r > n) return 0;
    // Every partial product is itself a Gaussian binomial, so each division is exact.
    unsigned __int128 acc = 1;
    for (unsigned i = 0; i < r; ++i) {
        const unsigned __int128 num = static_cast<unsigned __int128>(ipow_sat(p, n - i)) - 1;
        const unsigned __int128 den = static_cast<unsigned __int128>(ipow_sat(p, i + 1)) - 1;
        acc = acc * num / den;
    }
    return static_cast<std::uint64_t>(acc);
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::uint32_t p, unsigned n, const std::vector<Digits>& spanning) : p_(p), n_(n) {
    // Echelon form on reversed columns puts each pivot at the highest digit.
    MatrixFp m(0, n, p);
    Digits rev(n);
    for (const auto& v : spanning) {
        if (v.size() != n) throw Error(ErrorKind::DimensionMismatch, "spanning vector needs n digits");
        for (unsigned j = 0; j < n; ++j) rev[j] = v[n - 1 - j] % p;
        m.append_row(rev);
    }
    const auto piv = m.rref();
    for (std::size_t i = piv.size(); i-- > 0;) {
        Digits row(n);
        for (unsigned j = 0; j < n; ++j) row[j] = m(i, n - 1 - j);
        rows_.push_back(std::move(row));
        pivots_.push_back(static_cast<unsigned>(n - 1 - piv[i]));
    }
    for (unsigned c = 0; c < n; ++c)
        if (std::find(pivots_.begin(), pivots_.end(), c) == pivots_.end()) free_cols_.push_back(c);
}

std::uint64_t Subspace::num_cosets() const { return ipow_sat(p_, codim()); }

std::uint64_t Subspace::coset_label(const FieldCtx& ctx, Elem x) const {
    Digits d = ctx.digits(x);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::uint32_t c = d[pivots_[i]];
        if (c == 0) continue;
        for (unsigned j = 0; j <= pivots_[i]; ++j) d[j] = sub_mod(d[j], mul_mod(c, rows_[i][j], p_), p_);
    }
    std::uint64_t label = 0;
    for (std::size_t i = free_cols_.size(); i-- > 0;) label = label * p_ + d[free_cols_[i]];
    return label;
}

Elem Subspace::representative(const FieldCtx& ctx, Elem x) const {
    return representative_of_label(ctx, coset_label(ctx, x));
}

Elem Subspace::representative_of_label(const FieldCtx& ctx, std::uint64_t label) const {
    Digits d(n_, 0);
    for (unsigned c : free_cols_) {
        d[c] = static_cast<std::uint32_t>(label % p_);
        label /= p_;
    }
    return ctx.from_digits(d);
}

Digits Subspace::coordinates(const FieldCtx& ctx, Elem x) const {
    Digits c(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = ctx.digit(x, pivots_[i]);
    return c;
}

std::vector<Elem> Subspace::basis_elements(const FieldCtx& ctx) const {
    std::vector<Elem> out;
    for (const auto& r : rows_) out.push_back(ctx.from_digits(r));
    return out;
}

std::vector<Elem> Subspace::elements(const FieldCtx& ctx) const {
    std::vector<Elem> out{ctx.zero()};
    for (const Elem b : basis_elements(ctx)) {
        const std::size_t cur = out.size();
        for (std::uint32_t c = 1; c < p_; ++c)
            for (std::size_t i = 0; i < cur; ++i) out.push_back(ctx.add(out[i], ctx.scale(c, b)));
    }
    return out;
}

std::vector<std::uint32_t> Subspace::serialize() const {
    std::vector<std::uint32_t> out{n_, dim(), p_};
    for (const auto& r : rows_) out.insert(out.end(), r.begin(), r.end());
    return out;
}

Subspace Subspace::deserialize(std::span<const std::uint32_t> data) {
    if (data.size() < 3) throw Error(ErrorKind::DimensionMismatch, "subspace header missing");
    const unsigned n = data[0], r = data[1];
    const std::uint32_t p = data[2];
    if (data.size() != 3 + std::size_t{n} * r) throw Error(ErrorKind::DimensionMismatch, "subspace body size");
    std::vector<Digits> rows;
    for (unsigned i = 0; i < r; ++i) rows.emplace_back(data.begin() + 3 + i * n, data.begin() + 3 + (i + 1) * n);
    Subspace s(p, n, rows);
    if (s.dim() != r) throw Error(ErrorKind::SingularBasis, "subspace rows are dependent");
    return s;
}

std::uint64_t coset_label(const Subspace& U, const FieldCtx& ctx, Elem x) { return U.coset_label(ctx, x); }

// ---------------------------------------------------------------------------
// Enumeration

SubspaceEnumeration::SubspaceEnumeration(std::uint32_t p, unsigned n, unsigned r) : p_(p), n_(n), r_(r) {
    if (r > n) throw Error(ErrorKind::DimensionMismatch, "dimension exceeds n");
    std::vector<unsigned> comb(r);
    for (unsigned i = 0; i < r; ++i) comb[i] = i;
    while (true) {
        Block b;
        b.pivots = comb;
        for (unsigned i = 0; i < r; ++i)
            for (unsigned c = 0; c < comb[i]; ++c)
                if (std::find(comb.begin(), comb.end(), c) == comb.end()) b.free_entries.emplace_back(i, c);
        b.count = ipow_sat(p, static_cast<unsigned>(b.free_entries.size()));
        b.offset = total_;
        total_ += b.count;
        blocks_.push_back(std::move(b));
        // next combination in lexicographic order
        int i = static_cast<int>(r) - 1;
        while (i >= 0 && comb[i] == n - r + static_cast<unsigned>(i)) --i;
        if (i < 0) break;
        ++comb[i];
        for (unsigned j = static_cast<unsigned>(i) + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
    }
}

Subspace SubspaceEnumeration::at(std::uint64_t index) const {
    if (index >= total_) throw Error(ErrorKind::IndexOutOfRange, "subspace index out of range");
    auto it = std::upper_bound(blocks_.begin(), blocks_.end(), index,
                               [](std::uint64_t v, const Block& b) { return v < b.offset; });
    const Block& b = *(it - 1);
    std::uint64_t local = index - b.offset;
    Subspace s;
    s.p_ = p_;
    s.n_ = n_;
    s.pivots_ = b.pivots;
    s.rows_.assign(r_, Digits(n_, 0));
    for (unsigned i = 0; i < r_; ++i) s.rows_[i][b.pivots[i]] = 1;
    for (std::size_t e = b.free_entries.size(); e-- > 0;) {
        const auto [row, col] = b.free_entries[e];
        s.rows_[row][col] = static_cast<std::uint32_t>(local % p_);
        local /= p_;
    }
    for (unsigned c = 0; c < n_; ++c)
        if (std::find(b.pivots.begin(), b.pivots.end(), c) == b.pivots.end()) s.free_cols_.push_back(c);
    return s;
}

void SubspaceEnumeration::for_each(const std::function<bool(const Subspace&)>& visit) const {
    for (std::uint64_t i = 0; i < total_; ++i)
        if (!visit(at(i))) return;
}

std::vector<Subspace> enumerate_subspaces(const FieldCtx& ctx, unsigned r) {
    SubspaceEnumeration e(ctx.p(), ctx.n(), r);
    std::vector<Subspace> out;
    out.reserve(e.size());
    e.for_each([&](const Subspace& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

}  // namespace addix
