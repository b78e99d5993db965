#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

#include "addix/harness.hpp"
#include "addix/maps.hpp"

namespace addix::detail {

enum class MapKind { DiffieHellman, DiscreteLog };

/// Least codimension of a map, or of the worst map within m changes of it.
struct Truth {
    unsigned codim = 0;
    bool complete = true;
    std::optional<AffineWitness> witness;
    std::vector<std::size_t> dropped;
    /// "exact", "exact over all m-point changes" or "sampled"
    std::string mode = "exact";
    // sampled mode: one search per seed
    std::vector<std::uint64_t> seeds;
    std::vector<IndexResult> samples;
};

}  // namespace addix::detail

namespace addix {

struct TruthCache::Impl {
    std::mutex mu;
    std::unordered_map<std::string, FieldPtr> fields;
    std::unordered_map<std::string, std::shared_ptr<const detail::Truth>> truths;
};

}  // namespace addix

namespace addix::detail {

FieldPtr field_for(const CheckParams& p, TruthCache* cache);
/// The given T (validated) or every divisor of q - 1.
std::vector<std::uint64_t> subgroup_orders(const FieldCtx& ctx, const CheckParams& p);
SearchOptions search_options(const CheckParams& p);
std::shared_ptr<const Truth> truth_for(const FieldPtr& ctx, const SubgroupDescriptor& G, MapKind kind,
                                       const CheckParams& p, TruthCache* cache);
PartialMap make_map(const FieldPtr& ctx, const SubgroupDescriptor& G, MapKind kind);

bool is_property_check(const std::string& id);
void run_property_check(const std::string& id, const CheckParams& p, TruthCache* cache, CheckReport& out);

}  // namespace addix::detail
