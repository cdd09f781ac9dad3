#pragma once

#include <span>
#include <vector>

#include "fastk/tournament.hpp"

namespace fastk {

/// Default vertex limit of the subset DP (2^n table entries).
inline constexpr int kExactDefaultLimit = 20;
inline constexpr int kExactHardLimit = 26;

struct ExactResult {
  int fas_size = 0;
  std::vector<Vertex> optimal_ordering;
  /// Backward arcs of optimal_ordering, in local indices.
  std::vector<Arc> minimal_fas;
};

/// Minimum feedback arc set by dynamic programming over vertex subsets.
/// dp[S] = min over v in S of dp[S \ v] + |arcs v -> S \ v|, where v is the
/// vertex placed last. Ties go to the lowest index. Throws std::length_error
/// when t has more than `limit` vertices.
ExactResult fas_exact(const Tournament& t, int limit = kExactDefaultLimit);

/// Same DP on an arbitrary simple digraph with vertices 0..n-1 (used for the
/// arc-induced subdigraphs T[A_I], T[A_B]).
ExactResult fas_exact(int n, std::span<const Arc> arcs, int limit = kExactDefaultLimit);

/// True iff reversing every arc of f in t leaves an acyclic tournament.
/// Throws std::invalid_argument if some arc of f is not in t.
bool verify_reversal_acyclic(const Tournament& t, std::span<const Arc> f);

/// fas(t) <= k.
bool fas_at_most(const Tournament& t, int k, int limit = kExactDefaultLimit);

}  // namespace fastk
