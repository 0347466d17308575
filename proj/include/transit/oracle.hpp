#pragma once

#include <vector>

#include "transit/chain.hpp"
#include "transit/hierarchy.hpp"
#include "transit/modes.hpp"

namespace transit {

/// Ground-truth reference for equivalence testing: recomputes every pipeline
/// quantity (classification included) by direct in-memory enumeration with
/// plain loops. Shares result types with the pipeline but no computation
/// paths. Intended for small corpora.
HierarchyResult oracle_analyze(const std::vector<TripChain>& chains,
                               const ModeRegistry& registry,
                               const HierarchyConfig& config = {});

}  // namespace transit
