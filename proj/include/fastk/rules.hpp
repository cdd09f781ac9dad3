#pragma once

#include <vector>

#include "fastk/tournament.hpp"

namespace fastk {

/// One logged rule firing. Vertices and arcs are original ids; reversed arcs
/// are given in their orientation before the reversal.
struct RuleApplication {
  int rule = 0;
  std::vector<int> deleted;
  std::vector<Arc> reversed;
  int k_delta = 0;
  /// Rule 3 only: the ordering (ids) and the cut positions of the partition.
  std::vector<int> order;
  std::vector<int> cuts;

  friend bool operator==(const RuleApplication&, const RuleApplication&) = default;
};

struct Rule1Result {
  Tournament tournament;
  std::vector<int> deleted;
  std::vector<RuleApplication> applications;
};

/// Outcome of a reversal rule. `no_instance` is set, and the firing that would
/// push k below zero is not applied, when the parameter runs out.
struct ReversalResult {
  Tournament tournament;
  int k = 0;
  std::vector<Arc> reversed;
  std::vector<RuleApplication> applications;
  bool no_instance = false;
};

/// Rule 1: delete vertices lying in no triangle, to fixpoint.
Rule1Result apply_rule1(Tournament t);

/// Rule 2: while some arc lies in more than k' triangles (k' the current,
/// already decremented parameter), reverse it and decrement k'. Arcs are
/// scanned by (tail, head) index.
ReversalResult apply_rule2(Tournament t, int k);

/// Inclusion-maximal vertex sets that are modules and induce an acyclic
/// subtournament. They partition V; each set is sorted, and the list is
/// ordered by smallest member.
std::vector<std::vector<Vertex>> find_maximal_transitive_modules(const Tournament& t);

/// True iff every vertex outside m sees all of m the same way.
bool is_module(const Tournament& t, const std::vector<Vertex>& m);

/// Rule 4: for a maximal transitive module of size p with in-neighbours I and
/// out-neighbours O, reverse the arcs Z from O to I when 0 < |Z| < p and
/// decrease k by |Z|; rescan to fixpoint.
ReversalResult apply_rule4(Tournament t, int k);

}  // namespace fastk
