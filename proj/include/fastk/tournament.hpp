#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace fastk {

/// Local vertex index, 0..n-1 in the current tournament.
using Vertex = int;

/// A directed arc tail -> head. Whether the endpoints are local indices,
/// original ids or ordering positions depends on the producing API.
struct Arc {
  int tail = 0;
  int head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Complete orientation on n vertices stored as a packed bit matrix (rows are
/// out-neighbourhoods, a second matrix keeps the in-neighbourhoods so that
/// triangle counts reduce to one row intersection).
///
/// Every vertex carries a stable integer id. Ids start as 0..n-1, are kept in
/// strictly increasing order, and survive vertex deletion.
class Tournament {
 public:
  Tournament() = default;

  /// Transitive tournament 0 -> 1 -> ... -> n-1.
  explicit Tournament(int n);

  /// Builds the tournament where, for u < v, the arc is u -> v iff
  /// forward(u, v) is true.
  template <class Pred>
  static Tournament from_predicate(int n, Pred&& forward) {
    Tournament t(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (!forward(u, v)) t.reverse_arc(u, v);
    return t;
  }

  /// Transitive tournament whose source-to-sink order is `order`.
  static Tournament transitive(std::span<const Vertex> order);

  int size() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }

  bool has_arc(Vertex u, Vertex v) const noexcept {
    return (out_[row_offset(u) + (v >> 6)] >> (v & 63)) & 1U;
  }

  /// Turns u -> v into v -> u. Throws std::invalid_argument if u -> v is absent.
  void reverse_arc(Vertex u, Vertex v);

  /// Deletes v; later vertices shift down by one, ids are kept.
  void remove_vertex(Vertex v);

  /// Subtournament on `vertices` (any order); result vertices sorted by index.
  Tournament induced(std::span<const Vertex> vertices) const;

  int id(Vertex v) const { return ids_[v]; }
  std::span<const int> ids() const noexcept { return ids_; }
  std::optional<Vertex> index_of(int id) const;

  int out_degree(Vertex v) const;
  int in_degree(Vertex v) const { return n_ - 1 - out_degree(v); }
  std::vector<Vertex> out_neighbors(Vertex v) const;
  std::vector<Vertex> in_neighbors(Vertex v) const;

  int words() const noexcept { return words_; }
  std::span<const std::uint64_t> out_row(Vertex v) const {
    return {out_.data() + row_offset(v), static_cast<std::size_t>(words_)};
  }
  std::span<const std::uint64_t> in_row(Vertex v) const {
    return {in_.data() + row_offset(v), static_cast<std::size_t>(words_)};
  }

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  std::size_t row_offset(Vertex v) const noexcept {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(words_);
  }
  void set_bit(std::vector<std::uint64_t>& m, Vertex r, Vertex c, bool on);

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
  std::vector<int> ids_;
};

/// Copy of t with u -> v reversed.
Tournament reverse_arc(Tournament t, Vertex u, Vertex v);

bool is_acyclic(const Tournament& t);

/// Source-to-sink order of an acyclic tournament. Throws std::invalid_argument
/// on cyclic input.
std::vector<Vertex> transitive_ordering(const Tournament& t);

/// Number of w with v -> w -> u, i.e. triangles through the arc u -> v.
/// Throws std::invalid_argument if u -> v is absent.
int triangles_through_arc(const Tournament& t, Vertex u, Vertex v);

/// True iff v lies on a directed triangle (equivalently on any cycle).
bool vertex_in_triangle(const Tournament& t, Vertex v);

/// Number of arcs pointing from a later to an earlier vertex of `order`.
int count_backward(const Tournament& t, std::span<const Vertex> order);

/// Tournament plus a linear order sigma (position -> vertex).
class OrderedTournament {
 public:
  /// Throws std::invalid_argument unless sigma is a permutation of 0..n-1.
  OrderedTournament(Tournament t, std::vector<Vertex> sigma);

  const Tournament& tournament() const noexcept { return t_; }
  std::span<const Vertex> order() const noexcept { return sigma_; }
  int size() const noexcept { return t_.size(); }
  Vertex at(int pos) const { return sigma_[pos]; }
  int position(Vertex v) const { return pos_[v]; }

  bool is_backward(Arc a) const { return pos_[a.tail] > pos_[a.head]; }

  /// Backward arcs sorted by (head position, tail position).
  std::vector<Arc> backward_arcs() const;

  /// |pos(tail) - pos(head)| + 1. Throws std::invalid_argument for an arc
  /// that is not present.
  int span_length(Arc a) const;

 private:
  Tournament t_;
  std::vector<Vertex> sigma_;
  std::vector<int> pos_;
};

/// Split of positions 0..n-1 into consecutive nonempty intervals, stored as
/// the strictly increasing list of positions at which a new interval starts
/// (position 0 is implicit).
class IntervalPartition {
 public:
  IntervalPartition() = default;
  /// Throws std::invalid_argument unless cuts are strictly increasing in (0, n).
  IntervalPartition(int n, std::vector<int> cuts);

  static IntervalPartition singletons(int n);
  static IntervalPartition whole(int n) { return {n, {}}; }

  int length() const noexcept { return n_; }
  int count() const noexcept { return n_ == 0 ? 0 : static_cast<int>(cuts_.size()) + 1; }
  std::span<const int> cuts() const noexcept { return cuts_; }

  /// Index of the interval holding `pos`.
  int interval_of(int pos) const;
  /// Inclusive [first, last] positions of interval i.
  std::pair<int, int> interval(int i) const;

  bool same_interval(int a, int b) const { return interval_of(a) == interval_of(b); }

  friend bool operator==(const IntervalPartition&, const IntervalPartition&) = default;

 private:
  int n_ = 0;
  std::vector<int> cuts_;
};

}  // namespace fastk
