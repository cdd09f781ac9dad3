#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fastk/tournament.hpp"

namespace fastk {

/// Inclusive range [first, last] of ordering positions.
struct Interval {
  int first = 0;
  int last = 0;

  int length() const noexcept { return last - first + 1; }
  bool contains(int pos) const noexcept { return first <= pos && pos <= last; }
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Ordered tournament on positions 0..n-1 carrying a positive integer weight
/// on every backward arc. For a pair of positions a < b the arc is forward
/// (a -> b) exactly when weight(b, a) == 0; otherwise it is the backward arc
/// b -> a with that weight.
class BackwardWeightedTournament {
 public:
  BackwardWeightedTournament() = default;
  /// n positions, all arcs forward.
  explicit BackwardWeightedTournament(int n);

  /// Unit weights on the backward arcs of `ot`; position i is ot.at(i).
  static BackwardWeightedTournament from_ordered(const OrderedTournament& ot);

  int size() const noexcept { return n_; }

  /// Weight of backward arc tail -> head (tail > head), 0 if that pair is a
  /// forward arc.
  int weight(int tail, int head) const { return w_[index(tail, head)]; }
  /// Sets the weight of the pair (tail > head); 0 turns it into a forward arc.
  void set_weight(int tail, int head, int weight);

  bool is_backward(int tail, int head) const {
    return tail > head && weight(tail, head) > 0;
  }
  bool has_forward(int from, int to) const { return from < to && weight(to, from) == 0; }

  int total_weight() const;
  /// Backward arcs sorted by (head, tail).
  std::vector<Arc> backward_arcs() const;

  /// Drops position `pos`; later positions shift down.
  BackwardWeightedTournament without(int pos) const;
  /// Restriction to the positions of `iv`, renumbered from 0.
  BackwardWeightedTournament restricted(Interval iv) const;
  /// Plain tournament on the positions.
  Tournament to_tournament() const;

  friend bool operator==(const BackwardWeightedTournament&,
                         const BackwardWeightedTournament&) = default;

 private:
  std::size_t index(int tail, int head) const;

  int n_ = 0;
  std::vector<int> w_;
};

/// O(1) interval weights from 2-D prefix sums over (tail, head).
class IntervalWeights {
 public:
  explicit IntervalWeights(const BackwardWeightedTournament& tw);
  /// Sum of weights of backward arcs with both endpoints in `iv`.
  int operator()(Interval iv) const;

 private:
  int n_;
  std::vector<int> c_;
};

int interval_weight(const BackwardWeightedTournament& tw, Interval iv);

enum class IntervalClass { satisfying, critical, dense };

/// satisfying: 2w(I) < |I|-1; critical: |I| >= 2 and 2w(I) = |I|-1;
/// dense: 2w(I) > |I|-1.
IntervalClass classify_interval(const BackwardWeightedTournament& tw, Interval iv);

/// Replaces `iv` by one vertex c at position iv.first. Arcs between c and an
/// outside vertex x carry the summed weights of the backward arcs between x
/// and the interval; when there are none the pair is forward.
BackwardWeightedTournament contract_interval(const BackwardWeightedTournament& tw, Interval iv);

/// First interval (by length, then left end) breaking 2w(I) <= |I|-1.
std::optional<Interval> find_closure_violation(const BackwardWeightedTournament& tw);

class ClosureViolation : public std::invalid_argument {
 public:
  explicit ClosureViolation(Interval iv);
  Interval interval;
};

/// One certificate path for one unit of weight of `target`; vertices are
/// positions from target.head to target.tail.
struct CertificatePath {
  Arc target;
  std::vector<int> vertices;
  friend bool operator==(const CertificatePath&, const CertificatePath&) = default;
};

/// weight(target) arc-disjoint forward paths from head to tail.
struct OmegaCertificate {
  Arc target;
  std::vector<std::vector<int>> paths;
  friend bool operator==(const OmegaCertificate&, const OmegaCertificate&) = default;
};

struct CertificateFamily {
  /// Sorted by (target.head, target.tail).
  std::vector<OmegaCertificate> certificates;

  int path_count() const;
  std::vector<CertificatePath> flatten() const;
  static CertificateFamily from_paths(std::vector<CertificatePath> paths);
  friend bool operator==(const CertificateFamily&, const CertificateFamily&) = default;
};

/// Certifies every backward arc of `tw`. Requires 2w(I) <= |I|-1 for every
/// interval and throws ClosureViolation naming the first offending one.
CertificateFamily certify_all(const BackwardWeightedTournament& tw);

/// True iff every path is a forward-only path from head to tail of its target
/// inside the target's span, each target is a backward arc carrying exactly
/// as many paths as its weight, no arc is used twice in the whole family, and
/// the targets are exactly the backward arcs of tw.
bool validate_family(const BackwardWeightedTournament& tw, const CertificateFamily& family);

/// As above, with the targets required to be exactly `scope`.
bool validate_family(const BackwardWeightedTournament& tw, const CertificateFamily& family,
                     std::span<const Arc> scope);

/// One line per path, "tail head : v0 v1 ... vm". When `labels` is nonempty
/// positions are printed through it.
void write_family(std::ostream& os, const CertificateFamily& family,
                  std::span<const int> labels = {});
/// Inverse of write_family (without labels). Throws std::runtime_error on
/// malformed input.
CertificateFamily read_family(std::istream& is);

namespace detail {

std::vector<CertificatePath> certify_paths(const BackwardWeightedTournament& tw);

/// Maps paths of contract_interval(parent, iv) back to parent positions.
/// Paths through the contracted vertex use iv.first; paths of a merged arc
/// are dealt out over its concrete arcs in position order.
std::vector<CertificatePath> lift_contracted(const BackwardWeightedTournament& parent,
                                             Interval iv,
                                             const std::vector<CertificatePath>& child);

}  // namespace detail

}  // namespace fastk
