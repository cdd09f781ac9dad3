#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fastk/certify.hpp"
#include "fastk/tournament.hpp"

namespace fastk {

/// Interval partition whose between-interval backward arcs are certified by a
/// family using only between-interval arcs. All arcs are in positions of the
/// backward weighted tournament the partition was computed for.
struct SafePartition {
  IntervalPartition partition;
  /// Backward arcs with endpoints in different intervals, sorted by (head, tail).
  std::vector<Arc> between_backward;
  CertificateFamily family;
};

/// Total weight of sp.between_backward in tw.
int between_weight(const BackwardWeightedTournament& tw, const SafePartition& sp);

/// Computes a safe partition with at least one between-interval backward arc.
/// With no dense interval the singleton partition is certified directly;
/// otherwise the smallest (then leftmost) dense interval is contracted, the
/// smaller instance is solved with budget p - |I|/2 and the answer expanded.
///
/// Requirements (std::invalid_argument otherwise): at least one backward arc,
/// total weight <= p <= (n-1)/2, and every position lies in the span of some
/// backward arc. `p` defaults to the total weight.
SafePartition find_safe_partition(const BackwardWeightedTournament& tw,
                                  std::optional<int> p = std::nullopt);

/// Independent check of every SafePartition invariant against tw.
bool validate_safe_partition(const BackwardWeightedTournament& tw, const SafePartition& sp);

struct Rule3Result {
  Tournament tournament;
  int k = 0;
  /// Reversed arcs in local indices of the input tournament.
  std::vector<Arc> reversed;
  bool no_instance = false;
};

/// Rule 3: reverses the between-interval backward arcs of a safe partition
/// computed on the unit-weight ordering `ordering` of t, and lowers k by their
/// number. Throws std::invalid_argument if sp is not a valid safe partition
/// for (t, ordering) or has no between-interval arc. When k would drop below
/// zero nothing is reversed and no_instance is set.
Rule3Result apply_rule3(const Tournament& t, std::span<const Vertex> ordering,
                        const SafePartition& sp, int k);

}  // namespace fastk
