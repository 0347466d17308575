#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "transit/chain.hpp"
#include "transit/modes.hpp"

namespace transit {

/// Optional zonal layout for generated corpora: zones 1..zone_count with a
/// fixed stop pool each, a fraction of chains crossing zones, and modes
/// restricted to interzonal chains.
struct ZoneSetup {
  int zone_count = 2;
  int stops_per_zone = 100;
  double interzonal_fraction = 0.2;
  std::vector<int> interzonal_only_modes;
};

/// Recipe for a synthetic corpus with a planted modal hierarchy. Chains
/// follow a low -> high -> low template over planted_order; each adjacency
/// independently violates the planted direction with probability noise.
struct SynthSpec {
  ModeRegistry registry;
  // Non-walking mode ids, lowest planted rank first. Modes left out are
  // never generated.
  std::vector<int> planted_order;
  // Probability weights for chain lengths 1..4; must sum to 1.
  std::array<double, 4> length_weights{0.35, 0.35, 0.20, 0.10};
  double noise = 0.1;                // in [0, 0.5)
  double mean_leg_distance = 3000;   // meters, for lowest-rank legs
  std::optional<ZoneSetup> zones;
  std::uint64_t seed = 0;
};

// Throws SpecError on any violated SynthSpec invariant.
void validate_spec(const SynthSpec& spec);

/// Deterministic chain source: chain i depends only on (seed, i), so any
/// emission order or parallel split reproduces the same corpus.
class SynthStream {
 public:
  SynthStream(SynthSpec spec, std::int64_t count);  // validates the spec

  bool next(TripChain& out);
  std::int64_t remaining() const { return count_ - index_; }
  const SynthSpec& spec() const { return spec_; }

 private:
  SynthSpec spec_;
  std::int64_t count_ = 0;
  std::int64_t index_ = 0;
};

// Chain at a given index; the unit SynthStream iterates.
TripChain generate_chain(const SynthSpec& spec, std::int64_t index);

std::vector<TripChain> generate(const SynthSpec& spec, std::int64_t count);

// Stop->zone map covering every pool stop of the spec's zone setup.
std::unordered_map<std::string, std::int64_t> synth_zone_map(
    const SynthSpec& spec);

}  // namespace transit
