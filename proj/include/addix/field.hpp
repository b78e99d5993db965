#pragma once

// Small finite fields F_{p^n}, fully materialized.
//
// Elements are stored as their coordinate code in the polynomial basis
// 1, a, ..., a^{n-1} (a a root of the modulus): code = d_0 + d_1 p + ... +
// d_{n-1} p^{n-1}, digits least-significant first. Every table is built once
// at construction; a FieldCtx is immutable afterwards and is shared through
// FieldPtr.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace addix {

struct Elem {
    std::uint32_t code = 0;

    friend constexpr auto operator<=>(Elem, Elem) = default;
};

using Digits = std::vector<std::uint32_t>;

inline constexpr std::uint64_t kDefaultFieldCap = std::uint64_t{1} << 20;

struct FieldSpec {
    std::uint32_t p = 2;
    unsigned n = 1;
    std::optional<Digits> modulus;             // c_0..c_n, c_n == 1
    std::optional<std::vector<Digits>> basis;  // n rows, working-basis digits
    std::optional<Digits> generator;           // digits of a primitive element
    std::uint64_t max_q = kDefaultFieldCap;
};

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

/// Builds a field. Without a modulus the lexicographically least monic
/// irreducible (compared on (c_0, ..., c_{n-1})) is used; without a generator
/// the primitive element of least index (see element_of_index) is used.
FieldPtr build_field(const FieldSpec& spec);
FieldPtr build_field(std::uint32_t p, unsigned n);

/// Irreducibility over F_p by trial division; coefficients little-endian.
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);

/// Lexicographically least monic irreducible polynomial of degree n.
Digits least_irreducible(std::uint32_t p, unsigned n);

class FieldCtx {
public:
    std::uint32_t p() const noexcept { return p_; }
    unsigned n() const noexcept { return n_; }
    std::uint32_t q() const noexcept { return q_; }
    const Digits& modulus() const noexcept { return modulus_; }
    std::span<const Elem> ordered_basis() const noexcept { return basis_; }
    Elem generator() const noexcept { return generator_; }

    static constexpr Elem zero() noexcept { return Elem{0}; }
    static constexpr Elem one() noexcept { return Elem{1}; }
    /// The element c of the prime field.
    Elem scalar(std::uint32_t c) const noexcept { return Elem{c % p_}; }

    Elem add(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept { return Elem{neg_[a.code]}; }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const noexcept;
    /// c * a for c in F_p.
    Elem scale(std::uint32_t c, Elem a) const noexcept { return mul(scalar(c), a); }
    Elem inv(Elem a) const;
    /// a^e; negative exponents need a != 0. 0^0 == 1.
    Elem pow(Elem a, std::int64_t e) const;
    Elem frobenius(Elem a) const noexcept;
    /// a^{p^j}
    Elem frobenius(Elem a, unsigned j) const noexcept;

    std::uint32_t digit(Elem a, unsigned i) const noexcept { return (a.code / pow_p_[i]) % p_; }
    Digits digits(Elem a) const;
    Elem from_digits(std::span<const std::uint32_t> d) const;
    bool valid(Elem a) const noexcept { return a.code < q_; }

    /// xi_x = x_1 beta_1 + ... + x_n beta_n for the base-p digits of x.
    Elem element_of_index(std::uint64_t x) const;
    std::uint64_t index_of_element(Elem a) const;
    /// Coordinates of a in the ordered basis (= base-p digits of its index).
    Digits coordinates(Elem a) const;

    /// Discrete log to the full-order generator; a != 0.
    std::uint32_t log(Elem a) const;
    Elem exp(std::uint64_t i) const noexcept { return Elem{exp_[i % (q_ - 1)]}; }
    std::uint64_t order(Elem a) const;
    /// a lies in the subfield F_{p^d} (d | n).
    bool in_subfield(Elem a, unsigned d) const noexcept { return frobenius(a, d) == a; }

    std::uint32_t pow_p(unsigned i) const noexcept { return pow_p_[i]; }

private:
    friend FieldPtr build_field(const FieldSpec& spec);
    FieldCtx() = default;

    std::uint32_t p_ = 0;
    unsigned n_ = 0;
    std::uint32_t q_ = 0;
    Digits modulus_;
    std::vector<Elem> basis_;
    Elem generator_;
    std::vector<std::uint32_t> pow_p_;     // p^0 .. p^n
    std::vector<std::uint32_t> exp_;       // gamma^i, 0 <= i < q-1
    std::vector<std::uint32_t> log_;       // inverse of exp_, log_[0] unused
    std::vector<std::uint32_t> neg_;
    std::vector<std::uint32_t> add_table_; // q*q, only for small q
    std::vector<std::uint32_t> xi_;        // index -> element
    std::vector<std::uint32_t> xi_inv_;    // element -> index
};

enum class ArithOp { Add, Mul, Inv, Pow, Frobenius };

/// Single entry point used by the CLI and bindings. b is the second operand
/// (Add, Mul) and exponent is used by Pow.
Elem arith(const FieldCtx& ctx, ArithOp op, Elem a, std::optional<Elem> b = std::nullopt,
           std::int64_t exponent = 0);

struct SubgroupDescriptor {
    Elem gamma;
    std::uint64_t T = 1;
    std::vector<Elem> elements;  // gamma^0 .. gamma^{T-1}
    std::uint64_t t = 1;         // gcd(T, p - 1)
    Elem g;                      // gamma^{T/t}, lies in F_p
};

SubgroupDescriptor subgroup(const FieldCtx& ctx, std::uint64_t T);

}  // namespace addix
