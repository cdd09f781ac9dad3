#include "fastk/tournament.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fastk {

namespace {

int words_for(int n) { return (n + 63) / 64; }

std::string arc_text(Vertex u, Vertex v) {
  return std::to_string(u) + "->" + std::to_string(v);
}

}  // namespace

Tournament::Tournament(int n) : n_(n), words_(words_for(n)) {
  if (n < 0) throw std::invalid_argument("tournament size must be nonnegative");
  out_.assign(static_cast<std::size_t>(n) * words_, 0);
  in_.assign(static_cast<std::size_t>(n) * words_, 0);
  ids_.resize(n);
  std::iota(ids_.begin(), ids_.end(), 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      set_bit(out_, u, v, true);
      set_bit(in_, v, u, true);
    }
}

Tournament Tournament::transitive(std::span<const Vertex> order) {
  const int n = static_cast<int>(order.size());
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || pos[order[i]] != -1)
      throw std::invalid_argument("transitive: order is not a permutation");
    pos[order[i]] = i;
  }
  return from_predicate(n, [&](Vertex u, Vertex v) { return pos[u] < pos[v]; });
}

void Tournament::set_bit(std::vector<std::uint64_t>& m, Vertex r, Vertex c, bool on) {
  auto& word = m[row_offset(r) + (c >> 6)];
  const std::uint64_t mask = std::uint64_t{1} << (c & 63);
  word = on ? (word | mask) : (word & ~mask);
}

void Tournament::reverse_arc(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v || !has_arc(u, v))
    throw std::invalid_argument("reverse_arc: no arc " + arc_text(u, v));
  set_bit(out_, u, v, false);
  set_bit(in_, v, u, false);
  set_bit(out_, v, u, true);
  set_bit(in_, u, v, true);
}

void Tournament::remove_vertex(Vertex v) {
  if (v < 0 || v >= n_) throw std::invalid_argument("remove_vertex: bad vertex");
  std::vector<Vertex> keep;
  keep.reserve(n_ - 1);
  for (Vertex u = 0; u < n_; ++u)
    if (u != v) keep.push_back(u);
  *this = induced(keep);
}

Tournament Tournament::induced(std::span<const Vertex> vertices) const {
  std::vector<Vertex> vs(vertices.begin(), vertices.end());
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    throw std::invalid_argument("induced: repeated vertex");
  const int m = static_cast<int>(vs.size());
  Tournament sub(m);
  for (int i = 0; i < m; ++i) sub.ids_[i] = ids_[vs[i]];
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!has_arc(vs[i], vs[j])) sub.reverse_arc(i, j);
  return sub;
}

std::optional<Vertex> Tournament::index_of(int id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<Vertex>(it - ids_.begin());
}

int Tournament::out_degree(Vertex v) const {
  int d = 0;
  for (auto w : out_row(v)) d += std::popcount(w);
  return d;
}

std::vector<Vertex> Tournament::out_neighbors(Vertex v) const {
  std::vector<Vertex> r;
  for (Vertex w = 0; w < n_; ++w)
    if (w != v && has_arc(v, w)) r.push_back(w);
  return r;
}

std::vector<Vertex> Tournament::in_neighbors(Vertex v) const {
  std::vector<Vertex> r;
  for (Vertex w = 0; w < n_; ++w)
    if (w != v && has_arc(w, v)) r.push_back(w);
  return r;
}

Tournament reverse_arc(Tournament t, Vertex u, Vertex v) {
  t.reverse_arc(u, v);
  return t;
}

// A tournament is acyclic iff its score sequence is 0, 1, ..., n-1.
bool is_acyclic(const Tournament& t) {
  const int n = t.size();
  std::vector<char> seen(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    const int d = t.out_degree(v);
    if (seen[d]) return false;
    seen[d] = 1;
  }
  return true;
}

std::vector<Vertex> transitive_ordering(const Tournament& t) {
  const int n = t.size();
  std::vector<Vertex> order(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    const int slot = n - 1 - t.out_degree(v);
    if (order[slot] != -1)
      throw std::invalid_argument("transitive_ordering: tournament has a cycle");
    order[slot] = v;
  }
  return order;
}

int triangles_through_arc(const Tournament& t, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= t.size() || v >= t.size() || u == v || !t.has_arc(u, v))
    throw std::invalid_argument("triangles_through_arc: no arc " + arc_text(u, v));
  auto out_v = t.out_row(v);
  auto in_u = t.in_row(u);
  int c = 0;
  for (int i = 0; i < t.words(); ++i) c += std::popcount(out_v[i] & in_u[i]);
  return c;
}

bool vertex_in_triangle(const Tournament& t, Vertex v) {
  auto in_v = t.in_row(v);
  for (Vertex w = 0; w < t.size(); ++w) {
    if (w == v || !t.has_arc(v, w)) continue;
    auto out_w = t.out_row(w);
    for (int i = 0; i < t.words(); ++i)
      if (out_w[i] & in_v[i]) return true;
  }
  return false;
}

int count_backward(const Tournament& t, std::span<const Vertex> order) {
  int c = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (t.has_arc(order[j], order[i])) ++c;
  return c;
}

OrderedTournament::OrderedTournament(Tournament t, std::vector<Vertex> sigma)
    : t_(std::move(t)), sigma_(std::move(sigma)), pos_(t_.size(), -1) {
  if (static_cast<int>(sigma_.size()) != t_.size())
    throw std::invalid_argument("ordering length differs from vertex count");
  for (int i = 0; i < t_.size(); ++i) {
    const Vertex v = sigma_[i];
    if (v < 0 || v >= t_.size() || pos_[v] != -1)
      throw std::invalid_argument("ordering is not a permutation");
    pos_[v] = i;
  }
}

std::vector<Arc> OrderedTournament::backward_arcs() const {
  std::vector<Arc> r;
  const int n = size();
  for (int h = 0; h < n; ++h)
    for (int tl = h + 1; tl < n; ++tl)
      if (t_.has_arc(sigma_[tl], sigma_[h])) r.push_back({sigma_[tl], sigma_[h]});
  return r;
}

int OrderedTournament::span_length(Arc a) const {
  const int n = size();
  if (a.tail < 0 || a.head < 0 || a.tail >= n || a.head >= n || a.tail == a.head ||
      !t_.has_arc(a.tail, a.head))
    throw std::invalid_argument("span_length: no arc " + arc_text(a.tail, a.head));
  const int d = pos_[a.tail] - pos_[a.head];
  return (d < 0 ? -d : d) + 1;
}

IntervalPartition::IntervalPartition(int n, std::vector<int> cuts)
    : n_(n), cuts_(std::move(cuts)) {
  if (n < 0) throw std::invalid_argument("partition length must be nonnegative");
  int prev = 0;
  for (int c : cuts_) {
    if (c <= prev || c >= n)
      throw std::invalid_argument("partition cuts must be strictly increasing in (0, n)");
    prev = c;
  }
}

IntervalPartition IntervalPartition::singletons(int n) {
  std::vector<int> cuts;
  for (int i = 1; i < n; ++i) cuts.push_back(i);
  return {n, std::move(cuts)};
}

int IntervalPartition::interval_of(int pos) const {
  if (pos < 0 || pos >= n_) throw std::out_of_range("interval_of: position out of range");
  return static_cast<int>(std::upper_bound(cuts_.begin(), cuts_.end(), pos) - cuts_.begin());
}

std::pair<int, int> IntervalPartition::interval(int i) const {
  if (i < 0 || i >= count()) throw std::out_of_range("interval: index out of range");
  const int first = i == 0 ? 0 : cuts_[i - 1];
  const int last = i == static_cast<int>(cuts_.size()) ? n_ - 1 : cuts_[i] - 1;
  return {first, last};
}

}  // namespace fastk
