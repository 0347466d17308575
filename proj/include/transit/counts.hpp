#pragma once

#include <cstdint>
#include <span>

#include <Eigen/Core>

#include "transit/chain.hpp"
#include "transit/modes.hpp"

namespace transit {

using CountMatrix =
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Per-phase transfer count matrices. Entry (i-1, j-1) of `ascending` is the
/// total number of ascending-phase transfers from mode i to mode j over all
/// counted chains, and likewise for `descending`. Exact integer arithmetic.
struct PhaseCounts {
  CountMatrix ascending;
  CountMatrix descending;
  std::int64_t chains_counted = 0;

  explicit PhaseCounts(int mode_count)
      : ascending(CountMatrix::Zero(mode_count, mode_count)),
        descending(CountMatrix::Zero(mode_count, mode_count)) {}

  int mode_count() const { return static_cast<int>(ascending.rows()); }

  // Throws ModeOutOfRange if a mode id falls outside 1..M.
  void add(const Transfer& transfer);

  // All transfers of one chain; bumps chains_counted.
  void add_chain(std::span<const Transfer> transfers);

  std::int64_t total_transfers() const {
    return ascending.sum() + descending.sum();
  }

  bool operator==(const PhaseCounts& other) const {
    return chains_counted == other.chains_counted &&
           ascending == other.ascending && descending == other.descending;
  }
};

// Elementwise sum; commutative and associative. Throws DimensionMismatch.
PhaseCounts merge(const PhaseCounts& a, const PhaseCounts& b);

// Classifies and accumulates a whole corpus in one pass.
PhaseCounts accumulate(std::span<const TripChain> chains,
                       const ModeRegistry& registry);

}  // namespace transit
