#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "transit/errors.hpp"
#include "transit/modes.hpp"

namespace transit {

/// One in-vehicle segment. Walking is never an explicit leg; it is implied
/// at the chain boundaries.
struct Leg {
  int mode = 0;
  std::string board_stop;
  std::string alight_stop;
  double board_time = 0;   // seconds since service start
  double alight_time = 0;  // seconds since service start
  double distance = 0;     // meters, strictly positive

  bool operator==(const Leg&) const = default;
};

/// One passenger journey: ordered non-walking legs plus the derived total
/// travel distance from first boarding to last alighting.
struct TripChain {
  std::string id;
  std::vector<Leg> legs;
  double total_distance = 0;

  bool operator==(const TripChain&) const = default;
};

enum class Phase { Ascending, Descending };

/// A mode-to-mode transition, including the implicit walking boundaries.
/// position is the cumulative recorded distance at the transfer point.
struct Transfer {
  int from_mode = 0;
  int to_mode = 0;
  double position = 0;
  Phase phase = Phase::Ascending;
};

// First structural or semantic fault of the legs, if any, in leg order.
std::optional<ChainReject> chain_fault(std::span<const Leg> legs,
                                       const ModeRegistry& registry) noexcept;

// Builds a TripChain with total_distance = sum of leg distances.
// Throws ChainError on any fault reported by chain_fault.
TripChain validate_chain(std::string id, std::vector<Leg> legs,
                         const ModeRegistry& registry);

/// Phase-labels every transfer of a valid chain: the walk->first boundary
/// at position 0, one internal transfer per consecutive leg pair at the
/// cumulative distance of the legs before it, and the last->walk boundary
/// at the total distance. A transfer is Ascending iff its position is
/// strictly below half the total distance; the midpoint itself is
/// Descending. Emits exactly legs + 1 transfers.
void classify_transfers(const TripChain& chain, const ModeRegistry& registry,
                        std::vector<Transfer>& out);
std::vector<Transfer> classify_transfers(const TripChain& chain,
                                         const ModeRegistry& registry);

}  // namespace transit
