#pragma once

// Brute-force reference implementations. Deliberately naive: every function
// here recomputes from the adjacency predicate only.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "fastk/certify.hpp"
#include "fastk/tournament.hpp"

namespace oracle {

using fastk::Arc;
using fastk::BackwardWeightedTournament;
using fastk::Tournament;

inline Tournament random_tournament(std::mt19937_64& rng, int n) {
  std::bernoulli_distribution coin(0.5);
  return Tournament::from_predicate(n, [&](int, int) { return coin(rng); });
}

/// Transitive tournament on a random order with `j` random distinct arcs reversed.
inline Tournament planted_tournament(std::mt19937_64& rng, int n, int j) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  Tournament t = Tournament::transitive(order);
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(order[a], order[b]);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  for (int r = 0; r < j && r < static_cast<int>(pairs.size()); ++r)
    t.reverse_arc(pairs[r].first, pairs[r].second);
  return t;
}

inline int backward_count(const Tournament& t, const std::vector<int>& order) {
  int c = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (t.has_arc(order[j], order[i])) ++c;
  return c;
}

/// Minimum backward arcs over all n! orderings.
inline int fas_by_permutations(const Tournament& t) {
  std::vector<int> p(t.size());
  std::iota(p.begin(), p.end(), 0);
  int best = t.size() * t.size();
  do best = std::min(best, backward_count(t, p));
  while (std::next_permutation(p.begin(), p.end()));
  return best;
}

/// Same for a digraph given by arcs on vertices 0..n-1.
inline int fas_by_permutations(int n, const std::vector<Arc>& arcs) {
  std::vector<int> p(n), pos(n);
  std::iota(p.begin(), p.end(), 0);
  int best = static_cast<int>(arcs.size());
  do {
    for (int i = 0; i < n; ++i) pos[p[i]] = i;
    int c = 0;
    for (const Arc& a : arcs) c += pos[a.tail] > pos[a.head];
    best = std::min(best, c);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

/// Acyclicity by repeated removal of a source.
inline bool acyclic_by_peeling(const Tournament& t) {
  std::vector<bool> gone(t.size(), false);
  for (int step = 0; step < t.size(); ++step) {
    int src = -1;
    for (int v = 0; v < t.size() && src < 0; ++v) {
      if (gone[v]) continue;
      bool has_in = false;
      for (int u = 0; u < t.size(); ++u)
        if (!gone[u] && u != v && t.has_arc(u, v)) has_in = true;
      if (!has_in) src = v;
    }
    if (src < 0) return false;
    gone[src] = true;
  }
  return true;
}

inline bool acyclic_after_reversing(Tournament t, const std::vector<Arc>& f) {
  for (const Arc& a : f) t.reverse_arc(a.tail, a.head);
  return acyclic_by_peeling(t);
}

inline int triangles_through(const Tournament& t, int u, int v) {
  int c = 0;
  for (int w = 0; w < t.size(); ++w)
    if (w != u && w != v && t.has_arc(v, w) && t.has_arc(w, u)) ++c;
  return c;
}

inline bool in_triangle(const Tournament& t, int v) {
  for (int a = 0; a < t.size(); ++a)
    for (int b = 0; b < t.size(); ++b)
      if (a != v && b != v && a != b && t.has_arc(v, a) && t.has_arc(a, b) && t.has_arc(b, v))
        return true;
  return false;
}

/// Every outside vertex beats all of m or loses to all of m.
inline bool is_module(const Tournament& t, const std::vector<int>& m) {
  std::set<int> in(m.begin(), m.end());
  for (int x = 0; x < t.size(); ++x) {
    if (in.count(x)) continue;
    int beats = 0;
    for (int v : m) beats += t.has_arc(x, v);
    if (beats != 0 && beats != static_cast<int>(m.size())) return false;
  }
  return true;
}

inline int interval_weight(const BackwardWeightedTournament& tw, int first, int last) {
  int w = 0;
  for (int a = first; a <= last; ++a)
    for (int b = first; b < a; ++b) w += tw.weight(a, b);
  return w;
}

/// Every interval I satisfies 2 w(I) <= |I| - 1.
inline bool closure_holds(const BackwardWeightedTournament& tw) {
  for (int a = 0; a < tw.size(); ++a)
    for (int b = a; b < tw.size(); ++b)
      if (2 * interval_weight(tw, a, b) > b - a) return false;
  return true;
}

inline BackwardWeightedTournament random_weighted(std::mt19937_64& rng, int n, double density,
                                                  int max_weight) {
  BackwardWeightedTournament tw(n);
  std::bernoulli_distribution pick(density);
  std::uniform_int_distribution<int> wd(1, max_weight);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < a; ++b)
      if (pick(rng)) tw.set_weight(a, b, wd(rng));
  return tw;
}

/// Does some interval partition of tw admit a certificate family for all its
/// between-interval backward arcs (at least one) built from between-interval
/// forward arcs only? Exhaustive; keep n small.
inline bool safe_partition_exists(const BackwardWeightedTournament& tw) {
  const int n = tw.size();
  for (unsigned mask = 0; mask < (1U << std::max(0, n - 1)); ++mask) {
    std::vector<int> block(n, 0);
    for (int i = 1; i < n; ++i) block[i] = block[i - 1] + ((mask >> (i - 1)) & 1U);
    std::vector<Arc> units;  // one entry per unit of weight
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < a; ++b)
        if (block[a] != block[b])
          for (int w = 0; w < tw.weight(a, b); ++w) units.push_back({a, b});
    if (units.empty()) continue;
    std::set<std::pair<int, int>> used;
    std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
      if (i == units.size()) return true;
      const Arc f = units[i];
      std::function<bool(int)> walk = [&](int at) -> bool {
        if (at == f.tail) return place(i + 1);
        for (int nx = at + 1; nx <= f.tail; ++nx) {
          if (block[nx] == block[at] || tw.weight(nx, at) != 0 || used.count({at, nx})) continue;
          used.insert({at, nx});
          if (walk(nx)) return true;
          used.erase({at, nx});
        }
        return false;
      };
      return walk(f.head);
    };
    if (place(0)) return true;
  }
  return false;
}

/// Certificate family check written from the definition: every backward arc
/// of tw gets exactly weight-many forward paths from its head to its tail
/// inside its span, and no forward arc appears twice in the whole family.
/// With `block` (position -> interval index), targets are the backward arcs
/// crossing blocks and every path arc must cross blocks too.
inline bool family_valid(const BackwardWeightedTournament& tw, const fastk::CertificateFamily& fam,
                         const std::vector<int>* block = nullptr) {
  std::map<std::pair<int, int>, int> want;
  for (int a = 0; a < tw.size(); ++a)
    for (int b = 0; b < a; ++b)
      if (tw.weight(a, b) > 0 && (!block || (*block)[a] != (*block)[b]))
        want[{a, b}] = tw.weight(a, b);
  std::map<std::pair<int, int>, int> got;
  std::set<std::pair<int, int>> used;
  for (const auto& cert : fam.certificates)
    for (const auto& path : cert.paths) {
      const Arc f = cert.target;
      if (path.size() < 2 || path.front() != f.head || path.back() != f.tail) return false;
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const int x = path[i], y = path[i + 1];
        if (!(x < y) || x < f.head || y > f.tail) return false;
        if (tw.weight(y, x) != 0) return false;
        if (block && (*block)[x] == (*block)[y]) return false;
        if (!used.insert({x, y}).second) return false;
      }
      ++got[{f.tail, f.head}];
    }
  return got == want;
}

}  // namespace oracle
