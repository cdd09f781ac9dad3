#include "fastk/certify.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

namespace fastk {

BackwardWeightedTournament::BackwardWeightedTournament(int n)
    : n_(n), w_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
  if (n < 0) throw std::invalid_argument("size must be nonnegative");
}

BackwardWeightedTournament BackwardWeightedTournament::from_ordered(const OrderedTournament& ot) {
  BackwardWeightedTournament tw(ot.size());
  for (int h = 0; h < ot.size(); ++h)
    for (int t = h + 1; t < ot.size(); ++t)
      if (ot.tournament().has_arc(ot.at(t), ot.at(h))) tw.set_weight(t, h, 1);
  return tw;
}

std::size_t BackwardWeightedTournament::index(int tail, int head) const {
  if (head < 0 || tail >= n_ || tail <= head)
    throw std::out_of_range("weight: need 0 <= head < tail < n");
  return static_cast<std::size_t>(tail) * n_ + head;
}

void BackwardWeightedTournament::set_weight(int tail, int head, int weight) {
  if (weight < 0) throw std::invalid_argument("weight must be nonnegative");
  w_[index(tail, head)] = weight;
}

int BackwardWeightedTournament::total_weight() const {
  int s = 0;
  for (int w : w_) s += w;
  return s;
}

std::vector<Arc> BackwardWeightedTournament::backward_arcs() const {
  std::vector<Arc> r;
  for (int h = 0; h < n_; ++h)
    for (int t = h + 1; t < n_; ++t)
      if (weight(t, h) > 0) r.push_back({t, h});
  return r;
}

BackwardWeightedTournament BackwardWeightedTournament::without(int pos) const {
  if (pos < 0 || pos >= n_) throw std::out_of_range("without: bad position");
  BackwardWeightedTournament r(n_ - 1);
  auto down = [pos](int p) { return p < pos ? p : p - 1; };
  for (int h = 0; h < n_; ++h)
    for (int t = h + 1; t < n_; ++t)
      if (h != pos && t != pos && weight(t, h) > 0) r.set_weight(down(t), down(h), weight(t, h));
  return r;
}

BackwardWeightedTournament BackwardWeightedTournament::restricted(Interval iv) const {
  if (iv.first < 0 || iv.last >= n_ || iv.first > iv.last)
    throw std::out_of_range("restricted: bad interval");
  BackwardWeightedTournament r(iv.length());
  for (int h = iv.first; h <= iv.last; ++h)
    for (int t = h + 1; t <= iv.last; ++t)
      if (weight(t, h) > 0) r.set_weight(t - iv.first, h - iv.first, weight(t, h));
  return r;
}

Tournament BackwardWeightedTournament::to_tournament() const {
  return Tournament::from_predicate(n_, [&](Vertex a, Vertex b) { return weight(b, a) == 0; });
}

IntervalWeights::IntervalWeights(const BackwardWeightedTournament& tw)
    : n_(tw.size()), c_(static_cast<std::size_t>(n_ + 1) * (n_ + 1), 0) {
  // c(x, y) = sum of weight(tail, head) over tail < x, head < y.
  const int m = n_ + 1;
  for (int x = 1; x <= n_; ++x)
    for (int y = 1; y <= n_; ++y) {
      const int tail = x - 1, head = y - 1;
      const int here = head < tail ? tw.weight(tail, head) : 0;
      c_[x * m + y] = here + c_[(x - 1) * m + y] + c_[x * m + y - 1] - c_[(x - 1) * m + y - 1];
    }
}

int IntervalWeights::operator()(Interval iv) const {
  if (iv.first < 0 || iv.last >= n_ || iv.first > iv.last)
    throw std::out_of_range("interval outside the ordering");
  // Arcs with tail <= last and head >= first lie inside the interval.
  const int m = n_ + 1;
  const int x = iv.last + 1;
  return c_[x * m + n_] - c_[x * m + iv.first];
}

int interval_weight(const BackwardWeightedTournament& tw, Interval iv) {
  return IntervalWeights(tw)(iv);
}

namespace {

IntervalClass classify(int weight, int length) {
  const int lhs = 2 * weight;
  const int rhs = length - 1;
  if (lhs > rhs) return IntervalClass::dense;
  if (lhs == rhs && length >= 2) return IntervalClass::critical;
  return IntervalClass::satisfying;
}

}  // namespace

IntervalClass classify_interval(const BackwardWeightedTournament& tw, Interval iv) {
  return classify(interval_weight(tw, iv), iv.length());
}

BackwardWeightedTournament contract_interval(const BackwardWeightedTournament& tw, Interval iv) {
  const int n = tw.size();
  if (iv.first < 0 || iv.last >= n || iv.first > iv.last)
    throw std::out_of_range("contract_interval: bad interval");
  const int s = iv.first;
  const int shrink = iv.length() - 1;
  BackwardWeightedTournament r(n - shrink);
  auto down = [&](int p) { return p < s ? p : p - shrink; };
  for (int h = 0; h < n; ++h)
    for (int t = h + 1; t < n; ++t) {
      if (iv.contains(h) || iv.contains(t)) continue;
      if (tw.weight(t, h) > 0) r.set_weight(down(t), down(h), tw.weight(t, h));
    }
  for (int x = 0; x < n; ++x) {
    if (iv.contains(x)) continue;
    int sum = 0;
    for (int z = iv.first; z <= iv.last; ++z) sum += x < s ? tw.weight(z, x) : tw.weight(x, z);
    if (sum == 0) continue;
    if (x < s)
      r.set_weight(s, x, sum);
    else
      r.set_weight(down(x), s, sum);
  }
  return r;
}

std::optional<Interval> find_closure_violation(const BackwardWeightedTournament& tw) {
  IntervalWeights iw(tw);
  for (int len = 1; len <= tw.size(); ++len)
    for (int s = 0; s + len <= tw.size(); ++s) {
      const Interval iv{s, s + len - 1};
      if (classify(iw(iv), len) == IntervalClass::dense) return iv;
    }
  return std::nullopt;
}

ClosureViolation::ClosureViolation(Interval iv)
    : std::invalid_argument("interval [" + std::to_string(iv.first) + ", " +
                            std::to_string(iv.last) + "] violates 2w(I) <= |I|-1"),
      interval(iv) {}

int CertificateFamily::path_count() const {
  int c = 0;
  for (const auto& cert : certificates) c += static_cast<int>(cert.paths.size());
  return c;
}

std::vector<CertificatePath> CertificateFamily::flatten() const {
  std::vector<CertificatePath> r;
  for (const auto& cert : certificates)
    for (const auto& p : cert.paths) r.push_back({cert.target, p});
  return r;
}

CertificateFamily CertificateFamily::from_paths(std::vector<CertificatePath> paths) {
  std::map<std::pair<int, int>, OmegaCertificate> by_target;
  for (auto& p : paths) {
    auto& cert = by_target[{p.target.head, p.target.tail}];
    cert.target = p.target;
    cert.paths.push_back(std::move(p.vertices));
  }
  CertificateFamily fam;
  for (auto& [key, cert] : by_target) {
    std::sort(cert.paths.begin(), cert.paths.end());
    fam.certificates.push_back(std::move(cert));
  }
  return fam;
}

namespace detail {

std::vector<CertificatePath> lift_contracted(const BackwardWeightedTournament& parent,
                                             Interval iv,
                                             const std::vector<CertificatePath>& child) {
  const int s = iv.first;
  const int grow = iv.length() - 1;
  auto up = [&](int p) { return p < s ? p : p + grow; };

  std::vector<CertificatePath> out;
  std::map<std::pair<int, int>, std::vector<const CertificatePath*>> merged;
  for (const auto& cp : child) {
    if (cp.target.tail == s || cp.target.head == s) {
      merged[{cp.target.tail, cp.target.head}].push_back(&cp);
      continue;
    }
    CertificatePath lp{{up(cp.target.tail), up(cp.target.head)}, {}};
    for (int v : cp.vertices) lp.vertices.push_back(v == s ? s : up(v));
    out.push_back(std::move(lp));
  }

  for (const auto& [key, paths] : merged) {
    const auto [ctail, chead] = key;
    std::vector<Arc> units;
    if (ctail == s) {
      // c -> x with x left of the interval: concrete arcs z -> x.
      const int x = chead;
      for (int z = iv.first; z <= iv.last; ++z)
        for (int k = 0; k < parent.weight(z, x); ++k) units.push_back({z, x});
    } else {
      // x -> c with x right of the interval: concrete arcs x -> z.
      const int x = up(ctail);
      for (int z = iv.first; z <= iv.last; ++z)
        for (int k = 0; k < parent.weight(x, z); ++k) units.push_back({x, z});
    }
    if (units.size() != paths.size())
      throw std::logic_error("lift_contracted: path count differs from merged weight");
    for (std::size_t i = 0; i < paths.size(); ++i) {
      const Arc target = units[i];
      const int endpoint = ctail == s ? target.tail : target.head;
      CertificatePath lp{target, {}};
      for (int v : paths[i]->vertices) lp.vertices.push_back(v == s ? endpoint : up(v));
      out.push_back(std::move(lp));
    }
  }
  return out;
}

std::vector<CertificatePath> certify_paths(const BackwardWeightedTournament& tw) {
  const int n = tw.size();
  if (n < 2 || tw.total_weight() == 0) return {};
  IntervalWeights iw(tw);

  // A proper critical interval: contract a minimal one, certify outside and
  // inside independently.
  for (int len = 2; len < n; ++len)
    for (int s = 0; s + len <= n; ++s) {
      const Interval iv{s, s + len - 1};
      if (2 * iw(iv) != len - 1) continue;
      auto out = lift_contracted(tw, iv, certify_paths(contract_interval(tw, iv)));
      for (auto cp : certify_paths(tw.restricted(iv))) {
        cp.target.tail += s;
        cp.target.head += s;
        for (int& v : cp.vertices) v += s;
        out.push_back(std::move(cp));
      }
      return out;
    }

  std::vector<char> touched(n, 0);
  for (const Arc& a : tw.backward_arcs()) touched[a.tail] = touched[a.head] = 1;
  const auto free_it = std::find(touched.begin(), touched.end(), 0);
  if (free_it == touched.end()) throw ClosureViolation({0, n - 1});
  const int vi = static_cast<int>(free_it - touched.begin());
  auto up = [vi](int p) { return p < vi ? p : p + 1; };

  BackwardWeightedTournament rest = tw;
  std::optional<CertificatePath> own;
  if (2 * iw({0, n - 1}) == n - 1) {
    // Whole ordering is the only critical interval: route the longest arc
    // above vi through vi.
    std::optional<Arc> best;
    for (const Arc& a : tw.backward_arcs()) {
      if (!(a.head < vi && vi < a.tail)) continue;
      if (!best || a.tail - a.head > best->tail - best->head) best = a;
    }
    if (!best)
      throw std::logic_error("certify: critical ordering without a backward arc above vertex " +
                             std::to_string(vi));
    own = CertificatePath{*best, {best->head, vi, best->tail}};
    rest.set_weight(best->tail, best->head, tw.weight(best->tail, best->head) - 1);
  }

  std::vector<CertificatePath> out;
  for (auto cp : certify_paths(rest.without(vi))) {
    cp.target = {up(cp.target.tail), up(cp.target.head)};
    for (int& v : cp.vertices) v = up(v);
    out.push_back(std::move(cp));
  }
  if (own) out.push_back(std::move(*own));
  return out;
}

}  // namespace detail

CertificateFamily certify_all(const BackwardWeightedTournament& tw) {
  if (auto bad = find_closure_violation(tw)) throw ClosureViolation(*bad);
  return CertificateFamily::from_paths(detail::certify_paths(tw));
}

namespace {

bool check_paths(const BackwardWeightedTournament& tw, const CertificateFamily& family,
                 std::set<Arc>& targets) {
  std::set<Arc> used;
  for (const auto& cert : family.certificates) {
    const Arc f = cert.target;
    if (f.tail < 0 || f.tail >= tw.size() || f.head < 0 || !tw.is_backward(f.tail, f.head))
      return false;
    if (!targets.insert(f).second) return false;
    if (static_cast<int>(cert.paths.size()) != tw.weight(f.tail, f.head)) return false;
    for (const auto& path : cert.paths) {
      if (path.size() < 2 || path.front() != f.head || path.back() != f.tail) return false;
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const int a = path[i], b = path[i + 1];
        if (a < f.head || b > f.tail || !tw.has_forward(a, b)) return false;
        if (!used.insert({a, b}).second) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool validate_family(const BackwardWeightedTournament& tw, const CertificateFamily& family) {
  const auto all = tw.backward_arcs();
  return validate_family(tw, family, all);
}

bool validate_family(const BackwardWeightedTournament& tw, const CertificateFamily& family,
                     std::span<const Arc> scope) {
  std::set<Arc> targets;
  if (!check_paths(tw, family, targets)) return false;
  return targets == std::set<Arc>(scope.begin(), scope.end());
}

void write_family(std::ostream& os, const CertificateFamily& family, std::span<const int> labels) {
  auto label = [&](int p) { return labels.empty() ? p : labels[p]; };
  for (const auto& cert : family.certificates)
    for (const auto& path : cert.paths) {
      os << label(cert.target.tail) << ' ' << label(cert.target.head) << " :";
      for (int v : path) os << ' ' << label(v);
      os << '\n';
    }
}

CertificateFamily read_family(std::istream& is) {
  std::vector<CertificatePath> paths;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    CertificatePath cp;
    std::string colon;
    if (!(ls >> cp.target.tail >> cp.target.head >> colon) || colon != ":")
      throw std::runtime_error("certificate line " + std::to_string(lineno) + ": expected 'tail head :'");
    int v;
    while (ls >> v) cp.vertices.push_back(v);
    if (!ls.eof())
      throw std::runtime_error("certificate line " + std::to_string(lineno) + ": bad vertex");
    paths.push_back(std::move(cp));
  }
  return CertificateFamily::from_paths(std::move(paths));
}

}  // namespace fastk
