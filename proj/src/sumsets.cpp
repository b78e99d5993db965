#include "addix/sumsets.hpp"

#include "addix/arith.hpp"
#include "addix/error.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace addix {

ElementSet::ElementSet(FieldPtr ctx) : ctx_(std::move(ctx)), bits_(ctx_->q(), 0) {}

ElementSet::ElementSet(FieldPtr ctx, std::span<const Elem> elems) : ElementSet(std::move(ctx)) {
    for (Elem e : elems) insert(e);
}

ElementSet ElementSet::nonzero(FieldPtr ctx) {
    ElementSet s(std::move(ctx));
    for (std::uint32_t x = 1; x < s.ctx_->q(); ++x) s.insert(Elem{x});
    return s;
}

ElementSet ElementSet::full(FieldPtr ctx) {
    ElementSet s = nonzero(std::move(ctx));
    s.insert(Elem{0});
    return s;
}

void ElementSet::insert(Elem e) {
    if (!ctx_->valid(e)) throw Error(ErrorKind::IndexOutOfRange, "element out of range");
    if (!bits_[e.code]) {
        bits_[e.code] = 1;
        ++size_;
    }
}

std::vector<Elem> ElementSet::elements() const {
    std::vector<Elem> out;
    out.reserve(size_);
    for (std::uint32_t x = 0; x < bits_.size(); ++x)
        if (bits_[x]) out.push_back(Elem{x});
    return out;
}

bool ElementSet::includes(const ElementSet& other) const {
    for (std::size_t x = 0; x < bits_.size(); ++x)
        if (other.bits_[x] && !bits_[x]) return false;
    return true;
}

ElementSet ElementSet::negated() const {
    ElementSet out(ctx_);
    for (Elem e : elements()) out.insert(ctx_->neg(e));
    return out;
}

bool ElementSet::symmetric() const {
    for (Elem e : elements())
        if (!contains(ctx_->neg(e))) return false;
    return true;
}

bool ElementSet::antisymmetric() const {
    for (Elem e : elements())
        if (contains(ctx_->neg(e))) return false;
    return true;
}

bool ElementSet::in_subfield(unsigned d) const {
    for (Elem e : elements())
        if (!ctx_->in_subfield(e, d)) return false;
    return true;
}

std::optional<unsigned> ElementSet::proper_subfield() const {
    const unsigned n = ctx_->n();
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0 && in_subfield(d)) return d;
    return std::nullopt;
}

ElementSet sumset(const ElementSet& X, const ElementSet& Y) {
    const FieldCtx& F = *X.ctx();
    ElementSet out(X.ctx());
    const auto ys = Y.elements();
    for (Elem x : X.elements())
        for (Elem y : ys) out.insert(F.add(x, y));
    return out;
}

ElementSet product_set(const ElementSet& X, const ElementSet& Y) {
    const FieldCtx& F = *X.ctx();
    ElementSet out(X.ctx());
    const auto ys = Y.elements();
    for (Elem x : X.elements())
        for (Elem y : ys) out.insert(F.mul(x, y));
    return out;
}

ElementSet iterated_sum(const ElementSet& X, unsigned h) {
    if (h == 0) throw Error(ErrorKind::InvalidArgument, "h must be positive");
    ElementSet acc = X;
    for (unsigned i = 1; i < h; ++i) acc = sumset(acc, X);
    return acc;
}

ElementSet iterated_product(const ElementSet& X, unsigned h) {
    if (h == 0) throw Error(ErrorKind::InvalidArgument, "h must be positive");
    ElementSet acc = X;
    for (unsigned i = 1; i < h; ++i) acc = product_set(acc, X);
    return acc;
}

ElementSet subgroup_set(const FieldPtr& ctx, const SubgroupDescriptor& G) { return ElementSet(ctx, G.elements); }

std::optional<unsigned> least_cover(const ElementSet& X, const ElementSet& target, unsigned h_max) {
    if (X.size() == 0) return std::nullopt;
    ElementSet acc = X;
    for (unsigned h = 1; h <= h_max; ++h) {
        if (h > 1) acc = sumset(acc, X);
        if (acc.includes(target)) return h;
    }
    return std::nullopt;
}

std::optional<unsigned> sum_closure_r(const FieldPtr& ctx, const SubgroupDescriptor& G) {
    return least_cover(subgroup_set(ctx, G), ElementSet::nonzero(ctx), ctx->q());
}

ABSets ab_sets(const FieldPtr& ctx, const SubgroupDescriptor& G) {
    const FieldCtx& F = *ctx;
    ABSets s{ElementSet(ctx), ElementSet(ctx)};
    for (Elem x : G.elements) {
        const Elem xi = F.inv(x);
        s.A.insert(F.add(x, xi));
        s.B.insert(F.sub(x, xi));
    }
    s.B_symmetric = s.B.symmetric();
    s.B_antisymmetric = s.B.antisymmetric();
    const ElementSet g = subgroup_set(ctx, G);
    s.G_symmetric = g.symmetric();
    s.G_antisymmetric = g.antisymmetric();
    return s;
}

Degeneracy degenerate(const FieldPtr& ctx, const SubgroupDescriptor& G) {
    const FieldCtx& F = *ctx;
    Degeneracy d;
    for (unsigned e = 1; e < F.n(); ++e) {
        if (F.n() % e != 0) continue;
        const std::uint64_t pd = ipow_sat(F.p(), e);
        if ((pd - 1) % G.T == 0) d.G_in_subfield = d.A_in_subfield = true;
        if ((pd + 1) % G.T == 0) d.A_in_subfield = true;
    }
    d.G_in_subfield_direct = subgroup_set(ctx, G).proper_subfield().has_value();
    d.A_in_subfield_direct = ab_sets(ctx, G).A.proper_subfield().has_value();
    return d;
}

std::uint64_t invers_count(const FieldCtx& ctx, const SubgroupDescriptor& G) {
    std::vector<std::uint8_t> in(ctx.q(), 0);
    for (Elem x : G.elements) in[x.code] = 1;
    std::uint64_t c = 0;
    for (Elem x : G.elements) c += in[ctx.sub(x, ctx.inv(x)).code];
    return c;
}

CharacterTable::CharacterTable(const FieldPtr& ctx, std::uint64_t c) {
    const std::uint64_t m = ctx->q() - 1;
    c_ = c % m;
    order_ = m / std::gcd(c_, m);
    values_.assign(ctx->q(), {0.0, 0.0});
    for (std::uint32_t x = 1; x < ctx->q(); ++x) {
        const std::uint64_t e = static_cast<std::uint64_t>(static_cast<unsigned __int128>(ctx->log(Elem{x})) * c_ % m);
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(m);
        values_[x] = {std::cos(theta), std::sin(theta)};
    }
}

std::vector<std::uint64_t> characters_trivial_on(const FieldCtx& ctx, std::uint64_t T) {
    const std::uint64_t m = ctx.q() - 1;
    if (T == 0 || m % T != 0) throw Error(ErrorKind::NotADivisor, "T must divide q-1");
    std::vector<std::uint64_t> out;
    for (std::uint64_t c = T; c < m; c += T) out.push_back(c);
    return out;
}

double weil_check(const FieldCtx& ctx, const SubgroupDescriptor& G, const CharacterTable& chi) {
    if (chi.trivial()) throw Error(ErrorKind::TrivialCharacter, "character must be non-trivial");
    std::complex<double> s{0.0, 0.0};
    for (Elem x : G.elements) s += chi(ctx.sub(x, ctx.inv(x)));
    return std::abs(s);
}

std::vector<SumRepresentation> sum_representations(const FieldCtx& ctx, const SubgroupDescriptor& G, Elem target,
                                                   unsigned r_max) {
    const std::uint32_t q = ctx.q();
    constexpr std::uint32_t kNone = UINT32_MAX;
    // layer k: for each reachable s, the exponent of the last summand and the
    // predecessor sum in layer k-1
    std::vector<std::vector<std::uint32_t>> last(r_max + 1), prev(r_max + 1);
    std::vector<SumRepresentation> out;
    std::vector<Elem> frontier;
    for (unsigned k = 1; k <= r_max; ++k) {
        last[k].assign(q, kNone);
        prev[k].assign(q, kNone);
        if (k == 1) {
            for (std::uint64_t y = 0; y < G.T; ++y)
                if (last[1][G.elements[y].code] == kNone) {
                    last[1][G.elements[y].code] = static_cast<std::uint32_t>(y);
                    frontier.push_back(G.elements[y]);
                }
        } else {
            std::vector<Elem> next;
            for (Elem s : frontier)
                for (std::uint64_t y = 0; y < G.T; ++y) {
                    const Elem t = ctx.add(s, G.elements[y]);
                    if (last[k][t.code] != kNone) continue;
                    last[k][t.code] = static_cast<std::uint32_t>(y);
                    prev[k][t.code] = s.code;
                    next.push_back(t);
                }
            frontier = std::move(next);
        }
        if (last[k][target.code] == kNone) continue;
        SumRepresentation rep;
        rep.r = k;
        std::uint32_t cur = target.code;
        for (unsigned j = k; j >= 1; --j) {
            rep.exponents.push_back(last[j][cur]);
            cur = prev[j][cur];
        }
        out.push_back(std::move(rep));
    }
    return out;
}

bool check_representation(const FieldCtx& ctx, const SubgroupDescriptor& G, Elem target,
                          const SumRepresentation& rep) {
    if (rep.exponents.size() != rep.r) return false;
    Elem s = ctx.zero();
    for (auto y : rep.exponents) s = ctx.add(s, ctx.pow(G.gamma, static_cast<std::int64_t>(y)));
    return s == target;
}

}  // namespace addix
