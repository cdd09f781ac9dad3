#include "fastk/approx.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace fastk {

Heuristic parse_heuristic(const std::string& name) {
  if (name == "indegree") return Heuristic::indegree;
  if (name == "kwiksort") return Heuristic::kwiksort;
  if (name == "exact") return Heuristic::exact;
  throw std::invalid_argument("unknown heuristic '" + name + "'");
}

std::string to_string(Heuristic h) {
  switch (h) {
    case Heuristic::indegree: return "indegree";
    case Heuristic::kwiksort: return "kwiksort";
    case Heuristic::exact: return "exact";
  }
  return "?";
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t run) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (run + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

HeuristicOrdering order_by_indegree(const Tournament& t) {
  HeuristicOrdering ho;
  ho.ordering.resize(t.size());
  std::iota(ho.ordering.begin(), ho.ordering.end(), 0);
  std::vector<int> indeg(t.size());
  for (Vertex v = 0; v < t.size(); ++v) indeg[v] = t.in_degree(v);
  std::stable_sort(ho.ordering.begin(), ho.ordering.end(),
                   [&](Vertex a, Vertex b) { return indeg[a] < indeg[b]; });
  ho.backward_count = count_backward(t, ho.ordering);
  ho.method = "indegree";
  return ho;
}

namespace {

void kwiksort_rec(const Tournament& t, std::vector<Vertex>& vs, std::mt19937_64& rng,
                  std::vector<Vertex>& out) {
  if (vs.empty()) return;
  if (vs.size() == 1) {
    out.push_back(vs.front());
    return;
  }
  // Raw modulo keeps the draw identical across standard libraries.
  const Vertex pivot = vs[rng() % vs.size()];
  std::vector<Vertex> left, right;
  for (Vertex v : vs) {
    if (v == pivot) continue;
    (t.has_arc(v, pivot) ? left : right).push_back(v);
  }
  kwiksort_rec(t, left, rng, out);
  out.push_back(pivot);
  kwiksort_rec(t, right, rng, out);
}

}  // namespace

HeuristicOrdering kwiksort(const Tournament& t, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vertex> vs(t.size());
  std::iota(vs.begin(), vs.end(), 0);
  HeuristicOrdering ho;
  ho.ordering.reserve(t.size());
  kwiksort_rec(t, vs, rng, ho.ordering);
  ho.backward_count = count_backward(t, ho.ordering);
  ho.method = "kwiksort seed=" + std::to_string(seed);
  ho.seed = seed;
  return ho;
}

HeuristicOrdering local_search_improve(HeuristicOrdering ho, const Tournament& t) {
  auto& order = ho.ordering;
  const int n = static_cast<int>(order.size());
  bool improved = true;
  while (improved) {
    improved = false;
    for (int i = 0; i < n && !improved; ++i) {
      const Vertex v = order[i];
      // delta[j]: change in backward count when v moves to position j.
      int best_delta = 0;
      int best_pos = i;
      int delta = 0;
      for (int j = i - 1; j >= 0; --j) {
        // v jumps over order[j]: arc v->order[j] stops being backward,
        // order[j]->v becomes backward.
        delta += t.has_arc(v, order[j]) ? -1 : 1;
        if (delta < best_delta) {
          best_delta = delta;
          best_pos = j;
        }
      }
      delta = 0;
      for (int j = i + 1; j < n; ++j) {
        delta += t.has_arc(order[j], v) ? -1 : 1;
        if (delta < best_delta) {
          best_delta = delta;
          best_pos = j;
        }
      }
      if (best_delta < 0) {
        order.erase(order.begin() + i);
        order.insert(order.begin() + best_pos, v);
        ho.backward_count += best_delta;
        improved = true;
      }
    }
  }
  if (ho.method.find("+ls") == std::string::npos) ho.method += "+ls";
  return ho;
}

HeuristicOrdering heuristic_ordering(const Tournament& t, const HeuristicConfig& config) {
  auto polish = [&](HeuristicOrdering ho) {
    return config.local_search ? local_search_improve(std::move(ho), t) : ho;
  };
  if (config.method == Heuristic::exact && t.size() <= config.exact_limit) {
    ExactResult ex = fas_exact(t, config.exact_limit);
    return {std::move(ex.optimal_ordering), ex.fas_size, "exact", 0};
  }
  if (config.method == Heuristic::indegree) return polish(order_by_indegree(t));

  const int runs = std::max(1, config.restarts);
  HeuristicOrdering best;
  for (int r = 0; r < runs; ++r) {
    HeuristicOrdering ho = polish(kwiksort(t, derive_seed(config.seed, r)));
    if (r == 0 || ho.backward_count < best.backward_count ||
        (ho.backward_count == best.backward_count && ho.seed < best.seed))
      best = std::move(ho);
  }
  return best;
}

}  // namespace fastk
