#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "transit/chain.hpp"
#include "transit/hierarchy.hpp"

namespace transit {

enum class UnknownStopPolicy { Skip, Error };

/// The zone set and the stop->zone assignment used to split chains into
/// origin-destination zone pairs.
class ZonePartition {
 public:
  // The zone set is the distinct mapped zones plus any extra (stopless)
  // zones given explicitly.
  ZonePartition(std::unordered_map<std::string, std::int64_t> stop_to_zone,
                UnknownStopPolicy policy = UnknownStopPolicy::Skip,
                std::vector<std::int64_t> extra_zones = {});

  const std::vector<std::int64_t>& zones() const { return zones_; }
  int zone_count() const { return static_cast<int>(zones_.size()); }
  std::optional<std::int64_t> zone_of(const std::string& stop) const;
  // Position of a zone id inside zones(); -1 if absent.
  int zone_index(std::int64_t zone) const;
  UnknownStopPolicy policy() const { return policy_; }

 private:
  std::unordered_map<std::string, std::int64_t> stop_to_zone_;
  std::vector<std::int64_t> zones_;  // sorted distinct
  UnknownStopPolicy policy_;
};

/// Origin zone of the first boarding stop and destination zone of the last
/// alighting stop. Unknown stops yield nullopt under Skip and throw
/// UnknownStopError under Error.
std::optional<std::pair<std::int64_t, std::int64_t>> assign_zone_pair(
    const TripChain& chain, const ZonePartition& partition);

struct ZonePairResult {
  std::int64_t chain_count = 0;  // N^pq
  HierarchyResult result;
};

struct ZonalResults {
  std::vector<std::int64_t> zones;
  std::map<std::pair<std::int64_t, std::int64_t>, ZonePairResult> pairs;
  std::int64_t skipped_unknown = 0;
  std::int64_t total_chains = 0;  // assigned + skipped
};

/// Routes each chain to exactly one ordered zone pair and runs the
/// hierarchy pipeline per pair. Every pair over the zone set is present in
/// the result, zero-chain pairs included.
ZonalResults zonal_analyze(std::span<const TripChain> chains,
                           const ZonePartition& partition,
                           const ModeRegistry& registry,
                           const HierarchyConfig& config = {});

}  // namespace transit
