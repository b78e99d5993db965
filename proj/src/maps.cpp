#include "addix/maps.hpp"

#include "addix/error.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_set>

namespace addix {

namespace {

// Unbiased draw from [0, bound) on top of mt19937_64, whose output sequence
// is fixed by the standard (unlike the distributions).
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

std::string digits_field(const FieldCtx& ctx, Elem e) {
    std::string s;
    const Digits d = ctx.digits(e);
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(d[i]);
    }
    return s;
}

Elem parse_digits(const FieldCtx& ctx, const std::string& field) {
    Digits d;
    std::stringstream ss(field);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        if (tok.empty()) throw Error(ErrorKind::InvalidArgument, "empty digit in '" + field + "'");
        d.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    }
    return ctx.from_digits(d);
}

}  // namespace

std::string to_string(Provenance p) {
    switch (p) {
    case Provenance::DiffieHellman: return "dh";
    case Provenance::DiscreteLog: return "disclog";
    case Provenance::Table: return "table";
    case Provenance::Perturbed: return "perturbed";
    }
    return "unknown";
}

void PartialMap::validate() const {
    if (domain.size() != values.size()) throw Error(ErrorKind::DimensionMismatch, "domain and values differ in length");
    std::vector<bool> seen(ctx->q(), false);
    for (Elem e : domain) {
        if (!ctx->valid(e)) throw Error(ErrorKind::IndexOutOfRange, "domain element out of range");
        if (seen[e.code]) throw Error(ErrorKind::InvalidArgument, "domain elements must be distinct");
        seen[e.code] = true;
    }
    for (Elem e : values)
        if (!ctx->valid(e)) throw Error(ErrorKind::IndexOutOfRange, "value out of range");
}

PartialMap dh_map(const FieldPtr& ctx, const SubgroupDescriptor& G) {
    PartialMap F;
    F.ctx = ctx;
    F.provenance = Provenance::DiffieHellman;
    F.domain = G.elements;
    F.values.reserve(G.T);
    for (std::uint64_t x = 0; x < G.T; ++x) {
        const auto e = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * x) % G.T);
        F.values.push_back(G.elements[e]);
    }
    return F;
}

PartialMap disclog_map(const FieldPtr& ctx, const SubgroupDescriptor& G) {
    PartialMap F;
    F.ctx = ctx;
    F.provenance = Provenance::DiscreteLog;
    F.domain = G.elements;
    F.values.reserve(G.T);
    for (std::uint64_t x = 0; x < G.T; ++x) F.values.push_back(ctx->element_of_index(x));
    return F;
}

PartialMap table_map(const FieldPtr& ctx, const std::vector<Elem>& values_by_index) {
    if (values_by_index.size() != ctx->q()) throw Error(ErrorKind::DimensionMismatch, "table map needs q values");
    PartialMap F;
    F.ctx = ctx;
    F.provenance = Provenance::Table;
    for (std::uint64_t x = 0; x < ctx->q(); ++x) F.domain.push_back(ctx->element_of_index(x));
    F.values = values_by_index;
    F.validate();
    return F;
}

PartialMap perturb(const PartialMap& F, std::uint64_t m, std::uint64_t seed) {
    if (m > F.size()) throw Error(ErrorKind::MTooLarge, "m exceeds the domain size");
    PartialMap out = F;
    out.provenance = Provenance::Perturbed;
    out.perturbed_m = m;
    out.seed = seed;
    if (m == 0) return out;
    if (F.ctx->q() < 2) throw Error(ErrorKind::InvalidArgument, "field too small to perturb");
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> pos(F.size());
    std::iota(pos.begin(), pos.end(), std::size_t{0});
    // partial Fisher-Yates: the first m entries are the chosen positions
    for (std::uint64_t i = 0; i < m; ++i) {
        const std::uint64_t j = i + draw(rng, pos.size() - i);
        std::swap(pos[i], pos[j]);
    }
    const std::uint32_t q = F.ctx->q();
    for (std::uint64_t i = 0; i < m; ++i) {
        const std::size_t at = pos[i];
        const std::uint32_t old = out.values[at].code;
        std::uint32_t v = static_cast<std::uint32_t>(draw(rng, q - 1));
        if (v >= old) ++v;
        out.values[at] = Elem{v};
    }
    return out;
}

PartialMap restrict_without(const PartialMap& F, const std::vector<std::size_t>& dropped) {
    std::vector<bool> drop(F.size(), false);
    for (auto i : dropped) {
        if (i >= F.size()) throw Error(ErrorKind::IndexOutOfRange, "dropped position out of range");
        drop[i] = true;
    }
    PartialMap out;
    out.ctx = F.ctx;
    out.provenance = F.provenance;
    out.perturbed_m = F.perturbed_m;
    out.seed = F.seed;
    for (std::size_t i = 0; i < F.size(); ++i) {
        if (drop[i]) continue;
        out.domain.push_back(F.domain[i]);
        out.values.push_back(F.values[i]);
    }
    return out;
}

std::size_t distinct_values(const PartialMap& F) {
    std::unordered_set<std::uint32_t> seen;
    for (Elem v : F.values) seen.insert(v.code);
    return seen.size();
}

void write_map_csv(std::ostream& os, const PartialMap& F) {
    os << "x,domain_element_digits,value_digits\n";
    for (std::size_t i = 0; i < F.size(); ++i)
        os << i << ',' << digits_field(*F.ctx, F.domain[i]) << ',' << digits_field(*F.ctx, F.values[i]) << '\n';
}

PartialMap read_map_csv(std::istream& is, const FieldPtr& ctx) {
    PartialMap F;
    F.ctx = ctx;
    F.provenance = Provenance::Table;
    std::string line;
    bool header = true;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (header) {
            header = false;
            if (line.rfind("x,", 0) == 0) continue;
        }
        std::stringstream ss(line);
        std::string x, dom, val;
        if (!std::getline(ss, x, ',') || !std::getline(ss, dom, ',') || !std::getline(ss, val, ','))
            throw Error(ErrorKind::InvalidArgument, "malformed map row: " + line);
        F.domain.push_back(parse_digits(*ctx, dom));
        F.values.push_back(parse_digits(*ctx, val));
    }
    F.validate();
    return F;
}

}  // namespace addix
