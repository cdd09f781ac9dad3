#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fastk/kernelize.hpp"
#include "fastk/tournament.hpp"

namespace fastk {

/// Malformed input; the message names the first offending line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what);
  int line;
  int column;
};

/// Instance file: a line holding n, then n rows of n characters over {0,1};
/// character j of row i is 1 iff the arc i -> j exists. Trailing blank lines
/// and '\r' are tolerated.
Tournament parse_instance(std::string_view text);
std::string serialize_instance(const Tournament& t);

struct GeneratorSpec {
  enum class Kind { uniform, planted };
  Kind kind = Kind::uniform;
  int n = 0;
  /// Planted only: number of distinct arcs reversed in a transitive tournament.
  int planted_reversals = 0;
  std::uint64_t seed = 0;
};

GeneratorSpec::Kind parse_generator_kind(const std::string& name);

/// Deterministic under the seed. Planted instances hide a random transitive
/// order and reverse planted_reversals distinct arcs of it, so fas <= j.
/// Throws std::invalid_argument for n < 0 or j outside [0, n(n-1)/2].
Tournament generate(const GeneratorSpec& spec);

/// Trace file:
///   fastk-trace 1
///   n <vertices>
///   k <parameter>
///   R<rule> kd=<k_delta> [del=<id>,...] [rev=<tail>><head>,...] [order=<id>,...] [cuts=<pos>,...]
void write_trace(std::ostream& os, const ReductionTrace& trace);
ReductionTrace read_trace(std::istream& is);

/// key=value lines: vertices_before, vertices_after, k_before, k_after,
/// achieved_S, verdict, followed by the extended statistics.
void write_stats(std::ostream& os, const KernelResult& r);

}  // namespace fastk
