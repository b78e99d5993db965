#include "addix/field.hpp"

#include "addix/arith.hpp"
#include "addix/error.hpp"

#include <numeric>
#include <string>

namespace addix {

namespace {

constexpr std::uint32_t kAddTableMaxQ = 1024;

using Poly = std::vector<std::uint32_t>;  // little-endian, arbitrary length

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // p prime, a != 0
    std::uint64_t r = 1, b = a % p;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo a nonzero polynomial m.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t lead_inv = inv_mod(m.back(), p);
    while (a.size() > dm && !a.empty()) {
        const std::size_t shift = a.size() - 1 - dm;
        const std::uint64_t c = a.back() * lead_inv % p;
        for (std::size_t i = 0; i <= dm; ++i) {
            const std::uint64_t sub = c * m[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

class PolyArith {
public:
    PolyArith(std::uint32_t p, unsigned n, const Poly& modulus) : p_(p), n_(n), mod_(modulus) {}

    Poly to_poly(std::uint32_t code) const {
        Poly d(n_);
        for (unsigned i = 0; i < n_; ++i) {
            d[i] = code % p_;
            code /= p_;
        }
        return d;
    }

    std::uint32_t to_code(const Poly& d) const {
        std::uint32_t code = 0;
        for (std::size_t i = d.size(); i-- > 0;) code = code * p_ + d[i];
        return code;
    }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        const Poly x = to_poly(a), y = to_poly(b);
        Poly prod(2 * n_, 0);
        for (unsigned i = 0; i < n_; ++i) {
            if (x[i] == 0) continue;
            for (unsigned j = 0; j < n_; ++j)
                prod[i + j] = static_cast<std::uint32_t>(
                    (prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p_);
        }
        Poly r = poly_mod(std::move(prod), mod_, p_);
        r.resize(n_, 0);
        return to_code(r);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

private:
    std::uint32_t p_;
    unsigned n_;
    Poly mod_;
};

}  // namespace

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
    Poly f(poly.begin(), poly.end());
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    // Any factorization has a monic factor of degree <= deg/2.
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        Poly g(d + 1, 0);
        g[d] = 1;
        while (true) {
            if (poly_mod(f, g, p).empty()) return false;
            std::size_t i = 0;
            while (i < d && ++g[i] == p) g[i++] = 0;
            if (i == d) break;
        }
    }
    return true;
}

Digits least_irreducible(std::uint32_t p, unsigned n) {
    // Lexicographic on (c_0, ..., c_{n-1}) with c_0 most significant, so
    // c_{n-1} is the fastest-moving digit.
    Digits c(n + 1, 0);
    c[n] = 1;
    while (true) {
        if (is_irreducible(c, p)) return c;
        unsigned i = n;
        while (i > 0) {
            --i;
            if (++c[i] < p) break;
            c[i] = 0;
            if (i == 0) throw Error(ErrorKind::InvalidArgument, "no irreducible polynomial found");
        }
    }
}

FieldPtr build_field(std::uint32_t p, unsigned n) {
    FieldSpec spec;
    spec.p = p;
    spec.n = n;
    return build_field(spec);
}

FieldPtr build_field(const FieldSpec& spec) {
    const std::uint32_t p = spec.p;
    const unsigned n = spec.n;
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
    const std::uint64_t q64 = ipow_sat(p, n);
    if (q64 > spec.max_q || q64 > (std::uint64_t{1} << 31))
        throw Error(ErrorKind::FieldTooLarge,
                    "q = " + std::to_string(p) + "^" + std::to_string(n) + " exceeds the cap");

    std::shared_ptr<FieldCtx> ctx(new FieldCtx());
    FieldCtx& f = *ctx;
    f.p_ = p;
    f.n_ = n;
    f.q_ = static_cast<std::uint32_t>(q64);
    const std::uint32_t q = f.q_;

    if (spec.modulus) {
        const Digits& m = *spec.modulus;
        if (m.size() != n + 1 || m.back() != 1)
            throw Error(ErrorKind::InvalidArgument, "modulus must be monic of degree n");
        for (auto c : m)
            if (c >= p) throw Error(ErrorKind::InvalidArgument, "modulus coefficient out of range");
        if (!is_irreducible(m, p)) throw Error(ErrorKind::ReducibleModulus, "modulus is reducible");
        f.modulus_ = m;
    } else {
        f.modulus_ = least_irreducible(p, n);
    }

    f.pow_p_.resize(n + 1);
    f.pow_p_[0] = 1;
    for (unsigned i = 1; i <= n; ++i) f.pow_p_[i] = f.pow_p_[i - 1] * p;

    f.neg_.resize(q);
    for (std::uint32_t c = 0; c < q; ++c) {
        std::uint32_t r = 0, x = c;
        for (unsigned i = 0; i < n; ++i) {
            const std::uint32_t d = x % p;
            x /= p;
            r += ((p - d) % p) * f.pow_p_[i];
        }
        f.neg_[c] = r;
    }
    if (q <= kAddTableMaxQ && p != 2) {
        f.add_table_.resize(std::size_t{q} * q);
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b) {
                std::uint32_t r = 0, x = a, y = b;
                for (unsigned i = 0; i < n; ++i) {
                    r += ((x % p + y % p) % p) * f.pow_p_[i];
                    x /= p;
                    y /= p;
                }
                f.add_table_[std::size_t{a} * q + b] = r;
            }
    }

    // Ordered basis and the index <-> element tables.
    if (spec.basis) {
        const auto& rows = *spec.basis;
        if (rows.size() != n) throw Error(ErrorKind::DimensionMismatch, "basis must have n rows");
        for (const auto& row : rows) {
            if (row.size() != n) throw Error(ErrorKind::DimensionMismatch, "basis rows must have n digits");
            for (auto d : row)
                if (d >= p) throw Error(ErrorKind::InvalidArgument, "basis digit out of range");
            f.basis_.push_back(f.from_digits(row));
        }
    } else {
        for (unsigned i = 0; i < n; ++i) f.basis_.push_back(Elem{f.pow_p_[i]});
    }
    f.xi_.assign(q, 0);
    f.xi_inv_.assign(q, q);  // q marks "not hit"
    f.xi_inv_[0] = 0;
    for (std::uint32_t x = 1; x < q; ++x) {
        unsigned j = n - 1;
        while (x < f.pow_p_[j]) --j;
        const Elem prev{f.xi_[x - f.pow_p_[j]]};
        const Elem cur = f.add(prev, f.basis_[j]);
        f.xi_[x] = cur.code;
        if (f.xi_inv_[cur.code] != q) throw Error(ErrorKind::SingularBasis, "basis rows are dependent");
        f.xi_inv_[cur.code] = x;
    }

    // Multiplicative structure.
    const PolyArith pa(p, n, f.modulus_);
    const auto qm1_primes = prime_divisors(q - 1);
    auto full_order = [&](std::uint32_t code) {
        if (code == 0) return false;
        if (pa.pow(code, q - 1) != 1) return false;
        for (auto r : qm1_primes)
            if (pa.pow(code, (q - 1) / r) == 1) return false;
        return true;
    };
    if (spec.generator) {
        if (spec.generator->size() != n) throw Error(ErrorKind::DimensionMismatch, "generator needs n digits");
        const Elem gen = f.from_digits(*spec.generator);
        if (!full_order(gen.code))
            throw Error(ErrorKind::NotPrimitive, "generator does not have order q-1");
        f.generator_ = gen;
    } else {
        bool found = false;
        for (std::uint64_t x = 1; x < q && !found; ++x) {
            const Elem cand = f.element_of_index(x);
            if (full_order(cand.code)) {
                f.generator_ = cand;
                found = true;
            }
        }
        if (!found) throw Error(ErrorKind::InvalidArgument, "no primitive element found");
    }

    f.exp_.resize(q - 1);
    f.log_.assign(q, 0);
    std::uint32_t cur = 1;
    for (std::uint32_t i = 0; i + 1 < q; ++i) {
        f.exp_[i] = cur;
        f.log_[cur] = i;
        cur = pa.mul(cur, f.generator_.code);
    }
    return ctx;
}

Elem FieldCtx::add(Elem a, Elem b) const noexcept {
    if (p_ == 2) return Elem{a.code ^ b.code};
    if (!add_table_.empty()) return Elem{add_table_[std::size_t{a.code} * q_ + b.code]};
    std::uint32_t r = 0, x = a.code, y = b.code;
    for (unsigned i = 0; i < n_; ++i) {
        std::uint32_t d = x % p_ + y % p_;
        if (d >= p_) d -= p_;
        r += d * pow_p_[i];
        x /= p_;
        y /= p_;
    }
    return Elem{r};
}

Elem FieldCtx::mul(Elem a, Elem b) const noexcept {
    if (a.code == 0 || b.code == 0) return zero();
    std::uint32_t s = log_[a.code] + log_[b.code];
    if (s >= q_ - 1) s -= q_ - 1;
    return Elem{exp_[s]};
}

Elem FieldCtx::inv(Elem a) const {
    if (a.code == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    const std::uint32_t l = log_[a.code];
    return Elem{exp_[l == 0 ? 0 : q_ - 1 - l]};
}

Elem FieldCtx::pow(Elem a, std::int64_t e) const {
    if (a.code == 0) {
        if (e < 0) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
        return e == 0 ? one() : zero();
    }
    const std::int64_t m = q_ - 1;
    std::int64_t r = (static_cast<std::int64_t>(log_[a.code]) * (((e % m) + m) % m)) % m;
    return Elem{exp_[static_cast<std::size_t>(r)]};
}

Elem FieldCtx::frobenius(Elem a) const noexcept { return frobenius(a, 1); }

Elem FieldCtx::frobenius(Elem a, unsigned j) const noexcept {
    if (a.code == 0 || q_ == 2) return a;
    // p^j acts on the log as multiplication mod q-1
    std::uint64_t e = 1;
    for (unsigned i = 0; i < j; ++i) e = e * p_ % (q_ - 1);
    return Elem{exp_[log_[a.code] * e % (q_ - 1)]};
}

Digits FieldCtx::digits(Elem a) const {
    Digits d(n_);
    std::uint32_t x = a.code;
    for (unsigned i = 0; i < n_; ++i) {
        d[i] = x % p_;
        x /= p_;
    }
    return d;
}

Elem FieldCtx::from_digits(std::span<const std::uint32_t> d) const {
    if (d.size() != n_) throw Error(ErrorKind::DimensionMismatch, "element needs exactly n digits");
    std::uint32_t code = 0;
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] >= p_) throw Error(ErrorKind::InvalidArgument, "digit out of range");
        code = code * p_ + d[i];
    }
    return Elem{code};
}

Elem FieldCtx::element_of_index(std::uint64_t x) const {
    if (x >= q_) throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(x) + " >= q");
    return Elem{xi_[x]};
}

std::uint64_t FieldCtx::index_of_element(Elem a) const {
    if (a.code >= q_) throw Error(ErrorKind::IndexOutOfRange, "element code out of range");
    return xi_inv_[a.code];
}

Digits FieldCtx::coordinates(Elem a) const {
    std::uint64_t x = index_of_element(a);
    Digits d(n_);
    for (unsigned i = 0; i < n_; ++i) {
        d[i] = static_cast<std::uint32_t>(x % p_);
        x /= p_;
    }
    return d;
}

std::uint32_t FieldCtx::log(Elem a) const {
    if (a.code == 0) throw Error(ErrorKind::DivisionByZero, "log of zero");
    return log_[a.code];
}

std::uint64_t FieldCtx::order(Elem a) const {
    if (a.code == 0) throw Error(ErrorKind::DivisionByZero, "order of zero");
    const std::uint64_t m = q_ - 1;
    return m / std::gcd<std::uint64_t, std::uint64_t>(log_[a.code], m);
}

Elem arith(const FieldCtx& ctx, ArithOp op, Elem a, std::optional<Elem> b, std::int64_t exponent) {
    auto need_b = [&] {
        if (!b) throw Error(ErrorKind::InvalidArgument, "second operand required");
        return *b;
    };
    switch (op) {
    case ArithOp::Add: return ctx.add(a, need_b());
    case ArithOp::Mul: return ctx.mul(a, need_b());
    case ArithOp::Inv: return ctx.inv(a);
    case ArithOp::Pow: return ctx.pow(a, exponent);
    case ArithOp::Frobenius: return ctx.frobenius(a);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown op");
}

SubgroupDescriptor subgroup(const FieldCtx& ctx, std::uint64_t T) {
    const std::uint64_t qm1 = ctx.q() - 1;
    if (T == 0 || qm1 % T != 0)
        throw Error(ErrorKind::NotADivisor, std::to_string(T) + " does not divide q-1");
    SubgroupDescriptor g;
    g.T = T;
    g.gamma = ctx.exp(qm1 / T);
    g.elements.reserve(T);
    Elem cur = ctx.one();
    for (std::uint64_t i = 0; i < T; ++i) {
        g.elements.push_back(cur);
        cur = ctx.mul(cur, g.gamma);
    }
    g.t = std::gcd<std::uint64_t, std::uint64_t>(T, ctx.p() - 1);
    g.g = ctx.pow(g.gamma, static_cast<std::int64_t>(T / g.t));
    return g;
}

}  // namespace addix
