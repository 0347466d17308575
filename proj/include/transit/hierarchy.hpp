#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "transit/counts.hpp"
#include "transit/modes.hpp"

namespace transit {

/// Sign convention for the ascending hierarchy distance. Flipped (default)
/// makes a positive value mean mode i *receives* ascending transfers, so
/// both phases agree that higher values mark superior modes. Literal keeps
/// the raw rate difference.
enum class AscendingSign { Flipped, Literal };

/// Treatment of mode pairs with no observed transfers when averaging
/// distances into per-mode scores. Exclude (default) averages over defined
/// pairs only; Zero counts them as 0 over a fixed M-1 denominator.
enum class UndefinedPairs { Exclude, Zero };

struct HierarchyConfig {
  AscendingSign ascending_sign = AscendingSign::Flipped;
  UndefinedPairs undefined_pairs = UndefinedPairs::Exclude;

  bool operator==(const HierarchyConfig&) const = default;
};

/// M x M matrix of directional transfer rates (or hierarchy distances).
/// NaN marks entries whose mode pair has no observed transfers.
using RateMatrix = Eigen::MatrixXd;

inline bool is_defined(double entry) { return !std::isnan(entry); }
inline double undefined_entry() {
  return std::numeric_limits<double>::quiet_NaN();
}

/// Directional transfer rate matrices (ascending, descending).
/// Entry (i,j) = count(i->j) / (count(i->j) + count(j->i)) where the
/// denominator is positive, NaN otherwise. Defined entries of a pair sum
/// to 1 exactly.
std::pair<RateMatrix, RateMatrix> transfer_rates(const PhaseCounts& counts);

/// Hierarchy distance matrices (ascending, descending) in [-1, 1].
/// Descending is always the literal rate difference; ascending honors the
/// configured sign convention. NaN propagates. Antisymmetric where defined.
std::pair<RateMatrix, RateMatrix> hierarchy_distances(
    const RateMatrix& ascending_rates, const RateMatrix& descending_rates,
    const HierarchyConfig& config);

struct PhaseScores {
  Eigen::VectorXd score;         // per mode, in [0, 1]
  Eigen::VectorXi defined_pairs; // off-diagonal defined entries per mode
};

/// Averages each mode's off-diagonal distances and rescales from [-1, 1]
/// to [0, 1]. A mode with no defined pairs scores the neutral 0.5.
PhaseScores phase_scores(const RateMatrix& distances,
                         const HierarchyConfig& config);

struct ModeScore {
  int mode_id = 0;
  double ascending = 0.5;
  double descending = 0.5;
  double overall = 0.5;  // exact midpoint of the two phase scores
  int defined_pairs_ascending = 0;
  int defined_pairs_descending = 0;

  bool observed() const {
    return defined_pairs_ascending + defined_pairs_descending > 0;
  }
};

// Throws DimensionMismatch if the two phases disagree on M.
std::vector<ModeScore> overall_hierarchy(const PhaseScores& ascending,
                                         const PhaseScores& descending);

struct RankEntry {
  int mode_id = 0;
  std::string name;
  double overall = 0;
  bool tied = false;  // equal overall score with a neighbor in the ranking
};

struct Ranking {
  std::vector<RankEntry> entries;  // observed modes, best first
  std::vector<int> unobserved;     // mode ids with no defined pairs at all
};

/// Sorts observed modes by overall score descending, ties broken by
/// ascending mode id and flagged. Modes without a single defined pair in
/// either phase are reported unobserved instead of ranked.
Ranking rank_modes(const std::vector<ModeScore>& scores,
                   const ModeRegistry& registry);

struct HierarchyResult {
  PhaseCounts counts;
  RateMatrix ascending_rates, descending_rates;
  RateMatrix ascending_distances, descending_distances;
  std::vector<ModeScore> scores;
  Ranking ranking;
  HierarchyConfig config;
};

/// Runs the full matrix pipeline on accumulated counts.
HierarchyResult compute_hierarchy(PhaseCounts counts,
                                  const ModeRegistry& registry,
                                  const HierarchyConfig& config = {});

}  // namespace transit
