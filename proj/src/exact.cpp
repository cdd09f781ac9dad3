#include "fastk/exact.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace fastk {

namespace {

void check_limit(int n, int limit) {
  if (limit > kExactHardLimit) limit = kExactHardLimit;
  if (n > limit)
    throw std::length_error("exact solver: " + std::to_string(n) +
                            " vertices exceeds limit " + std::to_string(limit));
}

// out[v] is the bit mask of out-neighbours of v.
ExactResult solve_masks(std::span<const std::uint32_t> out) {
  const int n = static_cast<int>(out.size());
  const std::uint32_t full = n == 0 ? 0 : (n == 32 ? ~0U : ((1U << n) - 1));
  const std::size_t states = std::size_t{1} << n;
  std::vector<int> dp(states, 0);
  std::vector<std::int8_t> last(states, -1);
  for (std::size_t s = 1; s < states; ++s) {
    const auto set = static_cast<std::uint32_t>(s);
    int best = std::numeric_limits<int>::max();
    std::int8_t arg = -1;
    for (std::uint32_t rest = set; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const std::uint32_t without = set & ~(1U << v);
      const int cost = dp[without] + std::popcount(out[v] & without);
      if (cost < best) {
        best = cost;
        arg = static_cast<std::int8_t>(v);
      }
    }
    dp[s] = best;
    last[s] = arg;
  }

  ExactResult r;
  r.fas_size = dp[full];
  r.optimal_ordering.resize(n);
  std::uint32_t set = full;
  for (int i = n - 1; i >= 0; --i) {
    const int v = last[set];
    r.optimal_ordering[i] = v;
    set &= ~(1U << v);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      const int a = r.optimal_ordering[i];
      const int b = r.optimal_ordering[j];
      if (out[a] >> b & 1U) r.minimal_fas.push_back({a, b});
    }
  return r;
}

}  // namespace

ExactResult fas_exact(const Tournament& t, int limit) {
  check_limit(t.size(), limit);
  std::vector<std::uint32_t> out(t.size(), 0);
  for (Vertex u = 0; u < t.size(); ++u)
    for (Vertex v = 0; v < t.size(); ++v)
      if (u != v && t.has_arc(u, v)) out[u] |= 1U << v;
  return solve_masks(out);
}

ExactResult fas_exact(int n, std::span<const Arc> arcs, int limit) {
  check_limit(n, limit);
  std::vector<std::uint32_t> out(n, 0);
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.head < 0 || a.tail >= n || a.head >= n || a.tail == a.head)
      throw std::invalid_argument("fas_exact: arc endpoint out of range");
    out[a.tail] |= 1U << a.head;
  }
  return solve_masks(out);
}

bool verify_reversal_acyclic(const Tournament& t, std::span<const Arc> f) {
  Tournament r = t;
  for (const Arc& a : f) {
    if (a.tail < 0 || a.head < 0 || a.tail >= t.size() || a.head >= t.size() ||
        a.tail == a.head || !t.has_arc(a.tail, a.head))
      throw std::invalid_argument("verify_reversal_acyclic: arc not in tournament");
    if (!r.has_arc(a.tail, a.head))
      throw std::invalid_argument("verify_reversal_acyclic: arc listed twice");
    r.reverse_arc(a.tail, a.head);
  }
  return is_acyclic(r);
}

bool fas_at_most(const Tournament& t, int k, int limit) {
  return fas_exact(t, limit).fas_size <= k;
}

}  // namespace fastk
