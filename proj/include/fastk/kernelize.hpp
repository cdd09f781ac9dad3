#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "fastk/approx.hpp"
#include "fastk/certify.hpp"
#include "fastk/rules.hpp"
#include "fastk/tournament.hpp"

namespace fastk {

/// Ordered log of rule firings; enough to rebuild the kernel from the input
/// and to lift a kernel solution back.
struct ReductionTrace {
  int n = 0;
  int k = 0;
  std::vector<RuleApplication> entries;

  int total_k_delta() const;
  friend bool operator==(const ReductionTrace&, const ReductionTrace&) = default;
};

enum class Verdict { kernel, no };
enum class KernelMode { linear, subquadratic };

std::string to_string(Verdict v);
std::string to_string(KernelMode m);
KernelMode parse_kernel_mode(const std::string& name);

struct KernelStats {
  int vertices_before = 0;
  int vertices_after = 0;
  int k_before = 0;
  int k_after = 0;
  /// |S| of the first ordering computed by the linear driver (-1 if none).
  int initial_s = -1;
  /// Backward arcs of the final kernel ordering.
  int achieved_s = 0;
  /// Vertex bound certified by the final ordering: 2 * achieved_s.
  int certified_bound = 0;
  /// initial_s <= (1 + epsilon/2) k, the ratio the (2+eps)k bound needs.
  bool approx_ratio_met = true;
  int max_backward_length = 0;
  int rounds = 0;
  /// Firings per rule id (index 1..4).
  std::array<int, 5> firings{};
  /// Sizes of the maximal transitive modules of the kernel, by smallest member.
  std::vector<int> module_sizes;
};

struct KernelResult {
  Tournament kernel;
  int k_remaining = 0;
  ReductionTrace trace;
  Verdict verdict = Verdict::kernel;
  KernelStats stats;
  /// One family per Rule 3 firing, vertices given as original ids.
  std::vector<CertificateFamily> certificates;
};

struct KernelConfig {
  KernelMode mode = KernelMode::linear;
  double epsilon = 1.0;
  HeuristicConfig heuristic;
  /// Also run Rules 2 and 4 inside the linear driver's loop.
  bool linear_extra_rules = false;
  /// Vertex limit for exact kernel solving in decide().
  int exact_limit = kExactDefaultLimit;
};

/// Rules 2, 1, 4 to fixpoint.
KernelResult kernel_subquadratic(const Tournament& t, int k);

/// Rule 1, then repeatedly: order by a small feedback arc set S, and while the
/// instance has at least 2|S|+1 vertices apply Rule 3 on a safe partition
/// followed by Rule 1.
KernelResult kernel_linear(const Tournament& t, int k, double epsilon,
                           const HeuristicConfig& heuristic, bool extra_rules = false);

KernelResult kernelize(const Tournament& t, int k, const KernelConfig& config);

struct Decision {
  bool yes = false;
  /// For YES: arcs of the input (original ids) whose reversal makes it acyclic.
  std::vector<Arc> fas;
  KernelResult kernel;
  int kernel_fas = -1;
};

/// Kernelizes, solves the kernel exactly and lifts the kernel solution through
/// the trace. Throws std::length_error when the kernel exceeds the exact limit.
Decision decide(const Tournament& t, int k, const KernelConfig& config = {});

/// Lifts a feedback arc set of `kernel` (original ids, kernel orientation) to
/// one of `original` of size at most |kernel_fas| + trace.total_k_delta(),
/// returned in original ids as the backward arcs of an acyclic ordering.
std::vector<Arc> lift_solution(const Tournament& original, const ReductionTrace& trace,
                               const std::vector<Arc>& kernel_fas);

class TraceMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Applies one trace entry, checking it against the instance.
void apply_trace_entry(Tournament& t, const RuleApplication& entry);

/// Rebuilds the kernel from the input. Throws TraceMismatch when the trace
/// does not fit the instance.
Tournament replay_trace(const Tournament& t, const ReductionTrace& trace);

}  // namespace fastk
