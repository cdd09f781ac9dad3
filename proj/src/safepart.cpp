#include "fastk/safepart.hpp"

#include <set>
#include <string>

namespace fastk {

namespace {

struct Found {
  std::vector<int> cuts;
  std::vector<CertificatePath> paths;
};

// two_p is twice the budget p so that p - |I|/2 stays integral.
Found solve(const BackwardWeightedTournament& tw, int two_p) {
  const int n = tw.size();
  IntervalWeights iw(tw);
  for (int len = 2; len <= n; ++len)
    for (int s = 0; s + len <= n; ++s) {
      const Interval iv{s, s + len - 1};
      if (2 * iw(iv) <= len - 1) continue;
      Found inner = solve(contract_interval(tw, iv), two_p - len);
      const int grow = len - 1;
      for (int& c : inner.cuts)
        if (c > s) c += grow;
      inner.paths = detail::lift_contracted(tw, iv, inner.paths);
      return inner;
    }
  if (tw.total_weight() == 0)
    throw std::logic_error("find_safe_partition: contraction left no backward arc");
  Found f;
  for (int i = 1; i < n; ++i) f.cuts.push_back(i);
  f.paths = detail::certify_paths(tw);
  return f;
}

std::vector<Arc> between_arcs(const BackwardWeightedTournament& tw, const IntervalPartition& p) {
  std::vector<Arc> r;
  for (const Arc& a : tw.backward_arcs())
    if (!p.same_interval(a.tail, a.head)) r.push_back(a);
  return r;
}

}  // namespace

int between_weight(const BackwardWeightedTournament& tw, const SafePartition& sp) {
  int w = 0;
  for (const Arc& a : sp.between_backward) w += tw.weight(a.tail, a.head);
  return w;
}

SafePartition find_safe_partition(const BackwardWeightedTournament& tw, std::optional<int> p) {
  const int n = tw.size();
  const int total = tw.total_weight();
  const int budget = p.value_or(total);
  if (total < 1) throw std::invalid_argument("find_safe_partition: no backward arc");
  if (total > budget)
    throw std::invalid_argument("find_safe_partition: total weight " + std::to_string(total) +
                                " exceeds p = " + std::to_string(budget));
  if (n < 2 * budget + 1)
    throw std::invalid_argument("find_safe_partition: need at least 2p+1 = " +
                                std::to_string(2 * budget + 1) + " vertices, have " +
                                std::to_string(n));
  std::vector<int> cover(n + 1, 0);
  for (const Arc& a : tw.backward_arcs()) {
    ++cover[a.head];
    --cover[a.tail + 1];
  }
  for (int pos = 0, depth = 0; pos < n; ++pos) {
    depth += cover[pos];
    if (depth == 0)
      throw std::invalid_argument("find_safe_partition: position " + std::to_string(pos) +
                                  " lies under no backward arc");
  }

  Found f = solve(tw, 2 * budget);
  SafePartition sp;
  sp.partition = IntervalPartition(n, std::move(f.cuts));
  sp.between_backward = between_arcs(tw, sp.partition);
  sp.family = CertificateFamily::from_paths(std::move(f.paths));
  return sp;
}

bool validate_safe_partition(const BackwardWeightedTournament& tw, const SafePartition& sp) {
  if (sp.partition.length() != tw.size() || sp.between_backward.empty()) return false;
  const auto expected = between_arcs(tw, sp.partition);
  if (std::set<Arc>(expected.begin(), expected.end()) !=
      std::set<Arc>(sp.between_backward.begin(), sp.between_backward.end()))
    return false;
  if (!validate_family(tw, sp.family, expected)) return false;
  for (const auto& cert : sp.family.certificates)
    for (const auto& path : cert.paths)
      for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (sp.partition.same_interval(path[i], path[i + 1])) return false;
  return true;
}

Rule3Result apply_rule3(const Tournament& t, std::span<const Vertex> ordering,
                        const SafePartition& sp, int k) {
  const OrderedTournament ot(t, {ordering.begin(), ordering.end()});
  const auto tw = BackwardWeightedTournament::from_ordered(ot);
  if (!validate_safe_partition(tw, sp))
    throw std::invalid_argument("apply_rule3: not a safe partition with a between-interval arc");
  Rule3Result r;
  r.tournament = t;
  r.k = k;
  const int w = between_weight(tw, sp);
  if (w > k) {
    r.no_instance = true;
    return r;
  }
  for (const Arc& a : sp.between_backward) {
    const Arc arc{ot.at(a.tail), ot.at(a.head)};
    r.tournament.reverse_arc(arc.tail, arc.head);
    r.reversed.push_back(arc);
  }
  r.k = k - w;
  return r;
}

}  // namespace fastk
