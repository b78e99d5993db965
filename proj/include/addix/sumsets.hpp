#pragma once

// Sets of field elements, Minkowski sums and products, the sets
// A = {x + 1/x} and B = {x - 1/x} over a subgroup, subfield tests,
// multiplicative characters and sum representations.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "addix/field.hpp"

namespace addix {

/// Subset of F_q as a membership bitmap over element codes.
class ElementSet {
public:
    explicit ElementSet(FieldPtr ctx);
    ElementSet(FieldPtr ctx, std::span<const Elem> elems);
    static ElementSet nonzero(FieldPtr ctx);
    static ElementSet full(FieldPtr ctx);

    const FieldPtr& ctx() const noexcept { return ctx_; }
    void insert(Elem e);
    bool contains(Elem e) const { return bits_[e.code] != 0; }
    std::size_t size() const noexcept { return size_; }
    /// Members in ascending code order.
    std::vector<Elem> elements() const;
    bool includes(const ElementSet& other) const;
    ElementSet negated() const;
    /// a in A implies -a in A.
    bool symmetric() const;
    /// a in A implies -a not in A.
    bool antisymmetric() const;
    /// All members lie in F_{p^d}.
    bool in_subfield(unsigned d) const;
    /// Least proper divisor d of n with the set inside F_{p^d}, if any.
    std::optional<unsigned> proper_subfield() const;

    friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.bits_ == b.bits_; }

private:
    FieldPtr ctx_;
    std::vector<std::uint8_t> bits_;
    std::size_t size_ = 0;
};

ElementSet sumset(const ElementSet& X, const ElementSet& Y);
ElementSet product_set(const ElementSet& X, const ElementSet& Y);
/// h-fold sumset X + ... + X (h >= 1).
ElementSet iterated_sum(const ElementSet& X, unsigned h);
/// X^h = {x_1 ... x_h}.
ElementSet iterated_product(const ElementSet& X, unsigned h);

ElementSet subgroup_set(const FieldPtr& ctx, const SubgroupDescriptor& G);

/// Least r with F_q^* inside rG; nullopt when no k <= q works.
std::optional<unsigned> sum_closure_r(const FieldPtr& ctx, const SubgroupDescriptor& G);

/// Least h <= h_max with target inside hX.
std::optional<unsigned> least_cover(const ElementSet& X, const ElementSet& target, unsigned h_max);

struct ABSets {
    ElementSet A, B;
    bool B_symmetric = false, B_antisymmetric = false;
    bool G_symmetric = false, G_antisymmetric = false;
};

ABSets ab_sets(const FieldPtr& ctx, const SubgroupDescriptor& G);

struct Degeneracy {
    bool G_in_subfield = false;  // T | p^d - 1 for a proper d | n
    bool A_in_subfield = false;  // T | p^d - 1 or T | p^d + 1
    bool G_in_subfield_direct = false;
    bool A_in_subfield_direct = false;
};

Degeneracy degenerate(const FieldPtr& ctx, const SubgroupDescriptor& G);

/// #{x in G : x - 1/x in G}.
std::uint64_t invers_count(const FieldCtx& ctx, const SubgroupDescriptor& G);

/// chi_c(g^i) = exp(2 pi i c i / (q-1)) for the field generator g, chi(0) = 0.
class CharacterTable {
public:
    CharacterTable(const FieldPtr& ctx, std::uint64_t c);
    std::uint64_t c() const noexcept { return c_; }
    std::uint64_t order() const noexcept { return order_; }
    bool trivial() const noexcept { return order_ == 1; }
    std::complex<double> operator()(Elem x) const { return values_[x.code]; }

private:
    std::uint64_t c_, order_;
    std::vector<std::complex<double>> values_;  // by code
};

/// Exponents c of the non-trivial characters whose order divides (q-1)/T.
std::vector<std::uint64_t> characters_trivial_on(const FieldCtx& ctx, std::uint64_t T);

/// |sum_{x in G} chi(x - 1/x)|. Throws TrivialCharacter.
double weil_check(const FieldCtx& ctx, const SubgroupDescriptor& G, const CharacterTable& chi);

struct SumRepresentation {
    unsigned r = 0;
    std::vector<std::uint64_t> exponents;  // target = sum gamma^{y_i}
};

/// For each r in 1..r_max with target in rG, one representation, found by
/// growing the layers kG with back pointers.
std::vector<SumRepresentation> sum_representations(const FieldCtx& ctx, const SubgroupDescriptor& G, Elem target,
                                                   unsigned r_max);

/// Recomputes the sum; true iff it equals the target.
bool check_representation(const FieldCtx& ctx, const SubgroupDescriptor& G, Elem target,
                          const SumRepresentation& rep);

}  // namespace addix
