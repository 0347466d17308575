#pragma once

#include <cstdint>
#include <vector>

#include "transit/counts.hpp"
#include "transit/ingest.hpp"
#include "transit/zonal.hpp"

namespace transit {

struct StreamAnalysis {
  PhaseCounts counts;
  IngestReport report;
  std::uint64_t chains_digest = 0;
};

/// Drains a ChainReader, classifying and accumulating as it goes. With
/// threads > 1 the reader feeds a worker pool holding private PhaseCounts
/// that are merged at the end; integer merges commute, so the result is
/// identical for any thread count.
StreamAnalysis accumulate_stream(ChainReader& reader,
                                 const ModeRegistry& registry,
                                 unsigned threads = 1);

struct ZonalStreamAnalysis {
  std::vector<std::int64_t> zones;
  // Z*Z accumulators, row-major over sorted zone indices (p, q).
  std::vector<PhaseCounts> per_pair;
  std::int64_t skipped_unknown = 0;
  IngestReport report;
  std::uint64_t chains_digest = 0;

  const PhaseCounts& pair_counts(int p_index, int q_index) const {
    return per_pair[static_cast<size_t>(p_index) * zones.size() +
                    static_cast<size_t>(q_index)];
  }
};

ZonalStreamAnalysis accumulate_zonal_stream(ChainReader& reader,
                                            const ZonePartition& partition,
                                            const ModeRegistry& registry,
                                            unsigned threads = 1);

}  // namespace transit
