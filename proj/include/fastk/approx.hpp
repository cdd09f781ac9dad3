#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fastk/exact.hpp"
#include "fastk/tournament.hpp"

namespace fastk {

/// An ordering together with its backward-arc count; its backward arcs form
/// the feedback arc set S handed to the linear kernel.
struct HeuristicOrdering {
  std::vector<Vertex> ordering;
  int backward_count = 0;
  std::string method;
  std::uint64_t seed = 0;
};

enum class Heuristic { indegree, kwiksort, exact };

struct HeuristicConfig {
  Heuristic method = Heuristic::kwiksort;
  int restarts = 32;
  std::uint64_t seed = 1;
  bool local_search = true;
  /// `exact` falls back to kwiksort above this many vertices.
  int exact_limit = kExactDefaultLimit;
};

Heuristic parse_heuristic(const std::string& name);
std::string to_string(Heuristic h);

/// Per-run seed for restart `run` of master seed `master` (splitmix64 of the
/// counter), so restarts are reproducible and independent of evaluation order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t run);

/// Ascending in-degree, ties by index.
HeuristicOrdering order_by_indegree(const Tournament& t);

/// Randomised pivot partition: vertices beating the pivot go left, the rest
/// right, recursively.
HeuristicOrdering kwiksort(const Tournament& t, std::uint64_t seed);

/// Single-vertex relocation until no move lowers the backward count.
HeuristicOrdering local_search_improve(HeuristicOrdering ho, const Tournament& t);

/// Ordering selected by `config`: best of `restarts` kwiksort runs (ties to the
/// lowest seed), each optionally polished by local search.
HeuristicOrdering heuristic_ordering(const Tournament& t, const HeuristicConfig& config);

}  // namespace fastk
