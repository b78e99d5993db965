#pragma once

// Partial self-maps of F_q: the Diffie-Hellman map d, the digit-encoded
// discrete logarithm P, table maps and seeded m-point perturbations.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "addix/field.hpp"

namespace addix {

enum class Provenance { DiffieHellman, DiscreteLog, Table, Perturbed };

std::string to_string(Provenance p);

struct PartialMap {
    FieldPtr ctx;
    std::vector<Elem> domain;  // pairwise distinct
    std::vector<Elem> values;  // same length as domain
    Provenance provenance = Provenance::Table;
    std::uint64_t perturbed_m = 0;
    std::uint64_t seed = 0;

    std::size_t size() const noexcept { return domain.size(); }
    /// Checks the length and distinctness invariants; throws on violation.
    void validate() const;
};

/// d(gamma^x) = gamma^{x^2 mod T}, domain in exponent order.
PartialMap dh_map(const FieldPtr& ctx, const SubgroupDescriptor& G);
/// P(gamma^x) = xi_x, domain in exponent order.
PartialMap disclog_map(const FieldPtr& ctx, const SubgroupDescriptor& G);
/// Total map given by its values on the elements of index 0..q-1.
PartialMap table_map(const FieldPtr& ctx, const std::vector<Elem>& values_by_index);

/// Copy of F differing in exactly m positions, each new value != old value.
/// Deterministic in (F, m, seed).
PartialMap perturb(const PartialMap& F, std::uint64_t m, std::uint64_t seed);

/// Copy of F without the listed positions.
PartialMap restrict_without(const PartialMap& F, const std::vector<std::size_t>& dropped);

std::size_t distinct_values(const PartialMap& F);

/// CSV with header "x,domain_element_digits,value_digits"; digits are
/// ';'-separated, least significant first.
void write_map_csv(std::ostream& os, const PartialMap& F);
PartialMap read_map_csv(std::istream& is, const FieldPtr& ctx);

}  // namespace addix
