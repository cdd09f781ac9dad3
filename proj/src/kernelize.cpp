#include "fastk/kernelize.hpp"

#include <algorithm>
#include <set>

#include "fastk/exact.hpp"
#include "fastk/safepart.hpp"

namespace fastk {

int ReductionTrace::total_k_delta() const {
  int s = 0;
  for (const auto& e : entries) s += e.k_delta;
  return s;
}

std::string to_string(Verdict v) { return v == Verdict::no ? "NO" : "KERNEL"; }

std::string to_string(KernelMode m) {
  return m == KernelMode::linear ? "linear" : "subquadratic";
}

KernelMode parse_kernel_mode(const std::string& name) {
  if (name == "linear") return KernelMode::linear;
  if (name == "subquadratic") return KernelMode::subquadratic;
  throw std::invalid_argument("unknown kernel mode '" + name + "'");
}

namespace {

class Driver {
 public:
  Driver(const Tournament& t, int k) : cur_(t) {
    r_.trace.n = t.size();
    r_.trace.k = k;
    r_.k_remaining = k;
    r_.stats.vertices_before = t.size();
    r_.stats.k_before = k;
  }

  Tournament& current() { return cur_; }
  int k() const { return r_.k_remaining; }
  KernelResult& result() { return r_; }

  void log(std::vector<RuleApplication> apps) {
    for (auto& a : apps) {
      ++r_.stats.firings[a.rule];
      r_.trace.entries.push_back(std::move(a));
    }
  }

  bool rule1() {
    auto r1 = apply_rule1(std::move(cur_));
    cur_ = std::move(r1.tournament);
    const bool fired = !r1.applications.empty();
    log(std::move(r1.applications));
    return fired;
  }

  // Returns true if it fired; sets NO on parameter exhaustion.
  template <class Rule>
  bool reversal_rule(Rule rule) {
    ReversalResult rr = rule(cur_, r_.k_remaining);
    const bool fired = !rr.applications.empty();
    cur_ = std::move(rr.tournament);
    r_.k_remaining = rr.k;
    log(std::move(rr.applications));
    if (rr.no_instance) r_.verdict = Verdict::no;
    return fired;
  }

  bool rule2() { return reversal_rule([](const Tournament& t, int k) { return apply_rule2(t, k); }); }
  bool rule4() { return reversal_rule([](const Tournament& t, int k) { return apply_rule4(t, k); }); }

  bool is_no() const { return r_.verdict == Verdict::no; }

  KernelResult finish(const HeuristicOrdering* last, const HeuristicConfig& hc) {
    if (!is_no() && r_.k_remaining == 0 && !is_acyclic(cur_)) r_.verdict = Verdict::no;
    HeuristicOrdering ho = last ? *last : heuristic_ordering(cur_, hc);
    r_.stats.achieved_s = ho.backward_count;
    r_.stats.certified_bound = 2 * ho.backward_count;
    const OrderedTournament ot(cur_, ho.ordering);
    for (const Arc& a : ot.backward_arcs())
      r_.stats.max_backward_length = std::max(r_.stats.max_backward_length, ot.span_length(a));
    for (const auto& m : find_maximal_transitive_modules(cur_))
      r_.stats.module_sizes.push_back(static_cast<int>(m.size()));
    r_.stats.vertices_after = cur_.size();
    r_.stats.k_after = r_.k_remaining;
    r_.kernel = std::move(cur_);
    return std::move(r_);
  }

 private:
  Tournament cur_;
  KernelResult r_;
};

}  // namespace

KernelResult kernel_subquadratic(const Tournament& t, int k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  Driver d(t, k);
  for (;;) {
    ++d.result().stats.rounds;
    bool fired = d.rule2();
    if (d.is_no()) break;
    fired = d.rule1() || fired;
    fired = d.rule4() || fired;
    if (d.is_no() || !fired) break;
  }
  return d.finish(nullptr, HeuristicConfig{});
}

KernelResult kernel_linear(const Tournament& t, int k, double epsilon,
                           const HeuristicConfig& heuristic, bool extra_rules) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  Driver d(t, k);
  d.rule1();
  std::optional<HeuristicOrdering> last;
  while (!d.is_no()) {
    ++d.result().stats.rounds;
    if (extra_rules) {
      d.rule2();
      if (d.is_no()) break;
      d.rule4();
      if (d.is_no()) break;
      // Reversals can leave triangle-free vertices; the safe partition search
      // needs every vertex under some backward arc.
      d.rule1();
    }
    Tournament& cur = d.current();
    last = heuristic_ordering(cur, heuristic);
    const int s = last->backward_count;
    auto& stats = d.result().stats;
    if (stats.initial_s < 0) {
      stats.initial_s = s;
      stats.approx_ratio_met = s <= (1.0 + epsilon / 2.0) * d.k();
    }
    if (s == 0 || cur.size() < 2 * s + 1) break;
    if (d.k() == 0) break;  // cyclic with k = 0; finish() declares NO

    const OrderedTournament ot(cur, last->ordering);
    const auto tw = BackwardWeightedTournament::from_ordered(ot);
    const SafePartition sp = find_safe_partition(tw, s);
    Rule3Result r3 = apply_rule3(cur, last->ordering, sp, d.k());
    if (r3.no_instance) {
      d.result().verdict = Verdict::no;
      break;
    }
    RuleApplication app;
    app.rule = 3;
    app.k_delta = d.k() - r3.k;
    for (const Arc& a : r3.reversed) app.reversed.push_back({cur.id(a.tail), cur.id(a.head)});
    for (Vertex v : last->ordering) app.order.push_back(cur.id(v));
    app.cuts.assign(sp.partition.cuts().begin(), sp.partition.cuts().end());
    std::vector<CertificatePath> id_paths;
    for (auto cp : sp.family.flatten()) {
      cp.target = {cur.id(ot.at(cp.target.tail)), cur.id(ot.at(cp.target.head))};
      for (int& v : cp.vertices) v = cur.id(ot.at(v));
      id_paths.push_back(std::move(cp));
    }
    d.result().certificates.push_back(CertificateFamily::from_paths(std::move(id_paths)));

    cur = std::move(r3.tournament);
    d.result().k_remaining = r3.k;
    d.log({std::move(app)});
    last.reset();
    d.rule1();
  }
  const HeuristicOrdering* valid = last ? &*last : nullptr;
  return d.finish(valid, heuristic);
}

KernelResult kernelize(const Tournament& t, int k, const KernelConfig& config) {
  if (config.mode == KernelMode::subquadratic) return kernel_subquadratic(t, k);
  return kernel_linear(t, k, config.epsilon, config.heuristic, config.linear_extra_rules);
}

std::vector<Arc> lift_solution(const Tournament& original, const ReductionTrace& trace,
                               const std::vector<Arc>& kernel_fas) {
  // Removal semantics: if F removes all cycles after reversing u->v, then
  // (F - {v->u}) + {u->v} removes all cycles before it; deletions of
  // triangle-free vertices need nothing.
  std::set<Arc> f(kernel_fas.begin(), kernel_fas.end());
  for (auto e = trace.entries.rbegin(); e != trace.entries.rend(); ++e)
    for (auto a = e->reversed.rbegin(); a != e->reversed.rend(); ++a) {
      f.erase({a->head, a->tail});
      f.insert(*a);
    }

  const int n = original.size();
  std::vector<std::vector<char>> removed(n, std::vector<char>(n, 0));
  for (const Arc& a : f) {
    const auto u = original.index_of(a.tail);
    const auto v = original.index_of(a.head);
    if (!u || !v || !original.has_arc(*u, *v))
      throw TraceMismatch("lift_solution: lifted arc missing from the input");
    removed[*u][*v] = 1;
  }
  // Topological order of the input minus f; its backward arcs lie inside f.
  std::vector<int> indeg(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && original.has_arc(u, v) && !removed[u][v]) ++indeg[v];
  std::vector<Vertex> order;
  std::vector<char> done(n, 0);
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!done[v] && indeg[v] == 0) {
        pick = v;
        break;
      }
    if (pick < 0) throw std::logic_error("lift_solution: lifted set leaves a cycle");
    done[pick] = 1;
    order.push_back(pick);
    for (Vertex v = 0; v < n; ++v)
      if (v != pick && original.has_arc(pick, v) && !removed[pick][v]) --indeg[v];
  }
  std::vector<Arc> out;
  for (const Arc& a : OrderedTournament(original, order).backward_arcs())
    out.push_back({original.id(a.tail), original.id(a.head)});
  return out;
}

Decision decide(const Tournament& t, int k, const KernelConfig& config) {
  Decision d;
  d.kernel = kernelize(t, k, config);
  if (d.kernel.verdict == Verdict::no) return d;
  const Tournament& kern = d.kernel.kernel;
  const ExactResult ex = fas_exact(kern, config.exact_limit);
  d.kernel_fas = ex.fas_size;
  if (ex.fas_size > d.kernel.k_remaining) return d;
  std::vector<Arc> kf;
  for (const Arc& a : ex.minimal_fas) kf.push_back({kern.id(a.tail), kern.id(a.head)});
  d.fas = lift_solution(t, d.kernel.trace, kf);
  d.yes = true;
  return d;
}

void apply_trace_entry(Tournament& t, const RuleApplication& entry) {
  auto locate = [&](int id) {
    auto v = t.index_of(id);
    if (!v) throw TraceMismatch("trace: vertex " + std::to_string(id) + " not present");
    return *v;
  };
  if (entry.rule < 1 || entry.rule > 4)
    throw TraceMismatch("trace: unknown rule " + std::to_string(entry.rule));
  for (const Arc& a : entry.reversed) {
    const Vertex u = locate(a.tail), v = locate(a.head);
    if (!t.has_arc(u, v))
      throw TraceMismatch("trace: arc " + std::to_string(a.tail) + "->" + std::to_string(a.head) +
                          " not present");
    t.reverse_arc(u, v);
  }
  for (int id : entry.deleted) {
    const Vertex v = locate(id);
    if (vertex_in_triangle(t, v))
      throw TraceMismatch("trace: deleted vertex " + std::to_string(id) + " lies in a triangle");
    t.remove_vertex(v);
  }
}

Tournament replay_trace(const Tournament& t, const ReductionTrace& trace) {
  if (trace.n != t.size())
    throw TraceMismatch("trace: recorded for " + std::to_string(trace.n) + " vertices, instance has " +
                        std::to_string(t.size()));
  Tournament cur = t;
  for (const auto& e : trace.entries) apply_trace_entry(cur, e);
  return cur;
}

}  // namespace fastk
