#include "fastk/rules.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>

namespace fastk {

namespace {

using Bits = std::vector<std::uint64_t>;

bool test(const Bits& b, int i) { return (b[i >> 6] >> (i & 63)) & 1U; }
void set(Bits& b, int i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

int count_in(std::span<const std::uint64_t> row, const Bits& b) {
  int c = 0;
  for (std::size_t i = 0; i < b.size(); ++i) c += std::popcount(row[i] & b[i]);
  return c;
}

// Smallest module containing `x`: keep absorbing vertices that see x
// non-uniformly.
Bits module_closure(const Tournament& t, Bits x) {
  const int n = t.size();
  int size = 0;
  for (auto w : x) size += std::popcount(w);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Vertex> splitters;
    for (Vertex w = 0; w < n; ++w) {
      if (test(x, w)) continue;
      const int c = count_in(t.out_row(w), x);
      if (c != 0 && c != size) splitters.push_back(w);
    }
    for (Vertex w : splitters) set(x, w);
    size += static_cast<int>(splitters.size());
    grew = !splitters.empty();
  }
  return x;
}

bool induces_acyclic(const Tournament& t, const Bits& x) {
  std::vector<char> seen(t.size(), 0);
  for (Vertex v = 0; v < t.size(); ++v) {
    if (!test(x, v)) continue;
    const int d = count_in(t.out_row(v), x);
    if (seen[d]) return false;
    seen[d] = 1;
  }
  return true;
}

}  // namespace

Rule1Result apply_rule1(Tournament t) {
  Rule1Result r;
  for (;;) {
    // Deleting a triangle-free vertex destroys no triangle, so every vertex
    // found in one sweep can go at once.
    std::vector<Vertex> doomed;
    for (Vertex v = 0; v < t.size(); ++v)
      if (!vertex_in_triangle(t, v)) doomed.push_back(v);
    if (doomed.empty()) break;
    std::vector<Vertex> keep;
    for (Vertex v = 0, j = 0; v < t.size(); ++v) {
      if (j < static_cast<int>(doomed.size()) && doomed[j] == v) {
        ++j;
        r.deleted.push_back(t.id(v));
        RuleApplication app;
        app.rule = 1;
        app.deleted = {t.id(v)};
        r.applications.push_back(std::move(app));
      } else {
        keep.push_back(v);
      }
    }
    t = t.induced(keep);
  }
  r.tournament = std::move(t);
  return r;
}

ReversalResult apply_rule2(Tournament t, int k) {
  ReversalResult r;
  r.k = k;
  for (;;) {
    std::optional<Arc> hit;
    for (Vertex u = 0; u < t.size() && !hit; ++u)
      for (Vertex v = 0; v < t.size(); ++v)
        if (u != v && t.has_arc(u, v) && triangles_through_arc(t, u, v) > r.k) {
          hit = Arc{u, v};
          break;
        }
    if (!hit) break;
    if (r.k == 0) {
      r.no_instance = true;
      break;
    }
    const Arc ids{t.id(hit->tail), t.id(hit->head)};
    t.reverse_arc(hit->tail, hit->head);
    --r.k;
    r.reversed.push_back(ids);
    RuleApplication app;
    app.rule = 2;
    app.reversed = {ids};
    app.k_delta = 1;
    r.applications.push_back(std::move(app));
  }
  r.tournament = std::move(t);
  return r;
}

bool is_module(const Tournament& t, const std::vector<Vertex>& m) {
  if (m.empty()) return true;
  std::vector<char> in(t.size(), 0);
  for (Vertex v : m) in[v] = 1;
  for (Vertex w = 0; w < t.size(); ++w) {
    if (in[w]) continue;
    const bool to_first = t.has_arc(w, m.front());
    for (Vertex v : m)
      if (t.has_arc(w, v) != to_first) return false;
  }
  return true;
}

// Overlapping transitive modules of a tournament have a transitive module as
// union, so u and v share a maximal one iff the smallest module containing
// both is acyclic. One representative per class is enough to test.
std::vector<std::vector<Vertex>> find_maximal_transitive_modules(const Tournament& t) {
  const int n = t.size();
  std::vector<std::vector<Vertex>> classes;
  for (Vertex u = 0; u < n; ++u) {
    bool placed = false;
    for (auto& cls : classes) {
      Bits x(t.words(), 0);
      set(x, u);
      set(x, cls.front());
      if (induces_acyclic(t, module_closure(t, std::move(x)))) {
        cls.push_back(u);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({u});
  }
  return classes;
}

ReversalResult apply_rule4(Tournament t, int k) {
  ReversalResult r;
  r.k = k;
  for (;;) {
    bool fired = false;
    for (const auto& m : find_maximal_transitive_modules(t)) {
      const int p = static_cast<int>(m.size());
      if (p < 2) continue;
      std::vector<char> inside(t.size(), 0);
      for (Vertex v : m) inside[v] = 1;
      std::vector<Vertex> in_set, out_set;
      for (Vertex w = 0; w < t.size(); ++w) {
        if (inside[w]) continue;
        (t.has_arc(w, m.front()) ? in_set : out_set).push_back(w);
      }
      std::vector<Arc> z;
      for (Vertex u : out_set)
        for (Vertex v : in_set)
          if (t.has_arc(u, v)) z.push_back({u, v});
      const int q = static_cast<int>(z.size());
      if (q == 0 || q >= p) continue;
      if (q > r.k) {
        r.no_instance = true;
        r.tournament = std::move(t);
        return r;
      }
      RuleApplication app;
      app.rule = 4;
      app.k_delta = q;
      for (const Arc& a : z) {
        app.reversed.push_back({t.id(a.tail), t.id(a.head)});
        t.reverse_arc(a.tail, a.head);
      }
      r.k -= q;
      r.reversed.insert(r.reversed.end(), app.reversed.begin(), app.reversed.end());
      r.applications.push_back(std::move(app));
      fired = true;
      break;
    }
    if (!fired) break;
  }
  r.tournament = std::move(t);
  return r;
}

}  // namespace fastk
