#include "fastk/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

namespace fastk {

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line(line),
      column(column) {}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

}  // namespace

Tournament parse_instance(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "missing vertex count");
  int n = 0;
  const auto head = lines[0];
  const auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), n);
  if (ec != std::errc{} || ptr != head.data() + head.size() || head.empty() || n < 0)
    throw ParseError(1, 1, "bad vertex count '" + std::string(head) + "'");
  if (static_cast<int>(lines.size()) - 1 != n)
    throw ParseError(static_cast<int>(std::min<std::size_t>(lines.size(), n + 1)) + 1, 1,
                     "expected " + std::to_string(n) + " rows, found " +
                         std::to_string(lines.size() - 1));
  for (int i = 0; i < n; ++i) {
    const auto row = lines[i + 1];
    if (static_cast<int>(row.size()) != n)
      throw ParseError(i + 2, static_cast<int>(std::min<std::size_t>(row.size(), n)) + 1,
                       "row has " + std::to_string(row.size()) + " characters, expected " +
                           std::to_string(n));
    for (int j = 0; j < n; ++j)
      if (row[j] != '0' && row[j] != '1')
        throw ParseError(i + 2, j + 1, std::string("unexpected character '") + row[j] + "'");
    if (row[i] != '0') throw ParseError(i + 2, i + 1, "diagonal entry must be 0");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const char a = lines[i + 1][j], b = lines[j + 1][i];
      if ((a == '1') == (b == '1'))
        throw ParseError(i + 2, j + 1,
                         a == '1' ? "arcs in both directions between " + std::to_string(i) +
                                        " and " + std::to_string(j)
                                  : "no arc between " + std::to_string(i) + " and " +
                                        std::to_string(j));
    }
  return Tournament::from_predicate(n, [&](Vertex u, Vertex v) { return lines[u + 1][v] == '1'; });
}

std::string serialize_instance(const Tournament& t) {
  std::string s = std::to_string(t.size()) + '\n';
  for (Vertex u = 0; u < t.size(); ++u) {
    for (Vertex v = 0; v < t.size(); ++v) s += (u != v && t.has_arc(u, v)) ? '1' : '0';
    s += '\n';
  }
  return s;
}

GeneratorSpec::Kind parse_generator_kind(const std::string& name) {
  if (name == "uniform") return GeneratorSpec::Kind::uniform;
  if (name == "planted") return GeneratorSpec::Kind::planted;
  throw std::invalid_argument("unknown generator kind '" + name + "'");
}

Tournament generate(const GeneratorSpec& spec) {
  if (spec.n < 0) throw std::invalid_argument("generate: n must be nonnegative");
  const int n = spec.n;
  std::mt19937_64 rng(spec.seed);
  if (spec.kind == GeneratorSpec::Kind::uniform)
    return Tournament::from_predicate(n, [&](Vertex, Vertex) { return (rng() >> 63) != 0; });

  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  if (spec.planted_reversals < 0 || spec.planted_reversals > pairs)
    throw std::invalid_argument("generate: planted reversals must lie in [0, n(n-1)/2]");
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng() % (i + 1)]);
  Tournament t = Tournament::transitive(order);
  // Partial Fisher-Yates over pair indices picks j distinct arcs.
  std::vector<std::pair<int, int>> all;
  all.reserve(pairs);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
  for (int r = 0; r < spec.planted_reversals; ++r) {
    const std::size_t pick = r + rng() % (all.size() - r);
    std::swap(all[r], all[pick]);
    const auto [i, j] = all[r];
    t.reverse_arc(order[i], order[j]);
  }
  return t;
}

namespace {

template <class T, class F>
std::string join(const std::vector<T>& xs, F&& fmt) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += fmt(xs[i]);
  }
  return s;
}

std::vector<int> parse_ints(const std::string& s, int lineno) {
  std::vector<int> r;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty())
      throw ParseError(lineno, 1, "bad integer '" + tok + "'");
    r.push_back(v);
  }
  return r;
}

}  // namespace

void write_trace(std::ostream& os, const ReductionTrace& trace) {
  os << "fastk-trace 1\n";
  os << "n " << trace.n << '\n';
  os << "k " << trace.k << '\n';
  auto num = [](int v) { return std::to_string(v); };
  for (const auto& e : trace.entries) {
    os << 'R' << e.rule << " kd=" << e.k_delta;
    if (!e.deleted.empty()) os << " del=" << join(e.deleted, num);
    if (!e.reversed.empty())
      os << " rev="
         << join(e.reversed, [](const Arc& a) { return std::to_string(a.tail) + ">" + std::to_string(a.head); });
    if (!e.order.empty()) os << " order=" << join(e.order, num);
    if (!e.cuts.empty()) os << " cuts=" << join(e.cuts, num);
    os << '\n';
  }
}

ReductionTrace read_trace(std::istream& is) {
  ReductionTrace tr;
  std::string line;
  int lineno = 0;
  auto next = [&](const char* what) {
    do {
      if (!std::getline(is, line)) throw ParseError(lineno + 1, 1, std::string("missing ") + what);
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
    } while (line.empty());
  };
  next("trace header");
  if (line != "fastk-trace 1") throw ParseError(lineno, 1, "bad trace header");
  auto keyed_int = [&](const char* key) {
    next(key);
    std::istringstream ls(line);
    std::string k;
    int v = 0;
    if (!(ls >> k >> v) || k != key || !(ls >> std::ws).eof())
      throw ParseError(lineno, 1, std::string("expected '") + key + " <int>'");
    return v;
  };
  tr.n = keyed_int("n");
  tr.k = keyed_int("k");
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    RuleApplication e;
    if (tok.size() != 2 || tok[0] != 'R' || tok[1] < '1' || tok[1] > '4')
      throw ParseError(lineno, 1, "bad rule tag '" + tok + "'");
    e.rule = tok[1] - '0';
    bool have_kd = false;
    while (ls >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) throw ParseError(lineno, 1, "bad field '" + tok + "'");
      const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      if (key == "kd") {
        const auto v = parse_ints(val, lineno);
        if (v.size() != 1) throw ParseError(lineno, 1, "bad kd");
        e.k_delta = v[0];
        have_kd = true;
      } else if (key == "del") {
        e.deleted = parse_ints(val, lineno);
      } else if (key == "rev") {
        std::stringstream ss(val);
        std::string arc;
        while (std::getline(ss, arc, ',')) {
          const auto gt = arc.find('>');
          if (gt == std::string::npos) throw ParseError(lineno, 1, "bad arc '" + arc + "'");
          const auto t = parse_ints(arc.substr(0, gt), lineno);
          const auto h = parse_ints(arc.substr(gt + 1), lineno);
          if (t.size() != 1 || h.size() != 1) throw ParseError(lineno, 1, "bad arc '" + arc + "'");
          e.reversed.push_back({t[0], h[0]});
        }
      } else if (key == "order") {
        e.order = parse_ints(val, lineno);
      } else if (key == "cuts") {
        e.cuts = parse_ints(val, lineno);
      } else {
        throw ParseError(lineno, 1, "unknown field '" + key + "'");
      }
    }
    if (!have_kd) throw ParseError(lineno, 1, "missing kd");
    tr.entries.push_back(std::move(e));
  }
  return tr;
}

void write_stats(std::ostream& os, const KernelResult& r) {
  const auto& s = r.stats;
  os << "vertices_before=" << s.vertices_before << '\n'
     << "vertices_after=" << s.vertices_after << '\n'
     << "k_before=" << s.k_before << '\n'
     << "k_after=" << s.k_after << '\n'
     << "achieved_S=" << s.achieved_s << '\n'
     << "verdict=" << to_string(r.verdict) << '\n'
     << "initial_S=" << s.initial_s << '\n'
     << "certified_bound=" << s.certified_bound << '\n'
     << "approx_ratio_met=" << (s.approx_ratio_met ? 1 : 0) << '\n'
     << "max_backward_length=" << s.max_backward_length << '\n'
     << "rounds=" << s.rounds << '\n';
  for (int rule = 1; rule <= 4; ++rule) os << "rule" << rule << "_firings=" << s.firings[rule] << '\n';
  os << "module_sizes=";
  for (std::size_t i = 0; i < s.module_sizes.size(); ++i) os << (i ? "," : "") << s.module_sizes[i];
  os << '\n';
}

}  // namespace fastk
