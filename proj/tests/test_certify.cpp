#include <doctest.h>

#include <sstream>

#include "fastk/certify.hpp"
#include "oracles.hpp"

using namespace fastk;

TEST_CASE("backward weighted tournament") {
  BackwardWeightedTournament tw(4);
  CHECK(tw.total_weight() == 0);
  tw.set_weight(3, 0, 2);
  tw.set_weight(2, 1, 1);
  CHECK(tw.total_weight() == 3);
  CHECK(tw.is_backward(3, 0));
  CHECK_FALSE(tw.has_forward(0, 3));
  CHECK(tw.has_forward(0, 1));
  CHECK(tw.backward_arcs() == std::vector<Arc>{{3, 0}, {2, 1}});
  CHECK_THROWS(tw.weight(0, 3));
  CHECK_THROWS(tw.set_weight(1, 0, -1));

  const BackwardWeightedTournament w = tw.without(1);
  CHECK(w.size() == 3);
  CHECK(w.weight(2, 0) == 2);
  CHECK(w.total_weight() == 2);
  const BackwardWeightedTournament r = tw.restricted({1, 2});
  CHECK(r.size() == 2);
  CHECK(r.weight(1, 0) == 1);

  Tournament t(4);
  t.reverse_arc(0, 2);
  const auto u = BackwardWeightedTournament::from_ordered(OrderedTournament(t, {0, 1, 2, 3}));
  CHECK(u.backward_arcs() == std::vector<Arc>{{2, 0}});
  CHECK(u.to_tournament() == t);
}

TEST_CASE("interval_weight") {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 30; ++i) {
    const auto tw = oracle::random_weighted(rng, 8, 0.3, 3);
    CHECK(interval_weight(tw, {0, 7}) == tw.total_weight());
    for (int a = 0; a < 8; ++a) {
      CHECK(interval_weight(tw, {a, a}) == 0);
      for (int b = a; b < 8; ++b) CHECK(interval_weight(tw, {a, b}) == oracle::interval_weight(tw, a, b));
    }
  }
}

TEST_CASE("classify_interval") {
  BackwardWeightedTournament one(1);
  CHECK(classify_interval(one, {0, 0}) == IntervalClass::satisfying);
  BackwardWeightedTournament three(3);
  three.set_weight(2, 0, 1);
  CHECK(classify_interval(three, {0, 2}) == IntervalClass::critical);
  BackwardWeightedTournament two(2);
  two.set_weight(1, 0, 1);
  CHECK(classify_interval(two, {0, 1}) == IntervalClass::dense);
}

TEST_CASE("contract_interval") {
  std::mt19937_64 rng(52);
  const auto tw = oracle::random_weighted(rng, 6, 0.4, 2);
  const auto same = contract_interval(tw, {2, 2});
  CHECK(same == tw);

  // Interval {3, 4} touched by no backward arc.
  BackwardWeightedTournament q(7);
  q.set_weight(2, 0, 2);
  q.set_weight(6, 5, 1);
  const auto qc = contract_interval(q, {3, 4});
  CHECK(qc.size() == 6);
  CHECK(qc.backward_arcs() == std::vector<Arc>{{2, 0}, {5, 4}});
  CHECK(qc.weight(2, 0) == 2);
  CHECK(qc.weight(5, 4) == 1);

  for (int i = 0; i < 50; ++i) {
    const auto w = oracle::random_weighted(rng, 8, 0.3, 3);
    const int s = static_cast<int>(rng() % 6);
    const Interval iv{s, s + 2};
    const auto c = contract_interval(w, iv);
    CHECK(c.size() == 8 - 3 + 1);
    CHECK(c.total_weight() == w.total_weight() - oracle::interval_weight(w, iv.first, iv.last));
    // Weight between the contracted vertex and an outside position x is the
    // sum over the interval.
    for (int x = 0; x < 8; ++x) {
      if (iv.contains(x)) continue;
      int sum = 0;
      for (int y = iv.first; y <= iv.last; ++y) sum += x > y ? w.weight(x, y) : w.weight(y, x);
      const int xp = x < s ? x : x - 2;
      CHECK((xp > s ? c.weight(xp, s) : c.weight(s, xp)) == sum);
    }
  }
}

TEST_CASE("contracting a critical interval keeps the closure condition") {
  std::mt19937_64 rng(53);
  int checked = 0;
  for (int i = 0; i < 4000 && checked < 40; ++i) {
    const auto tw = oracle::random_weighted(rng, 9, 0.12, 2);
    if (!oracle::closure_holds(tw)) continue;
    for (int len = 2; len <= 9; ++len)
      for (int s = 0; s + len <= 9; ++s)
        if (classify_interval(tw, {s, s + len - 1}) == IntervalClass::critical) {
          CHECK(oracle::closure_holds(contract_interval(tw, {s, s + len - 1})));
          ++checked;
        }
  }
  CHECK(checked > 0);
}

TEST_CASE("find_closure_violation") {
  BackwardWeightedTournament tw(5);
  CHECK_FALSE(find_closure_violation(tw).has_value());
  tw.set_weight(4, 0, 1);
  CHECK_FALSE(find_closure_violation(tw).has_value());
  tw.set_weight(3, 2, 1);
  const auto v = find_closure_violation(tw);
  REQUIRE(v.has_value());
  CHECK(*v == Interval{2, 3});
  CHECK_THROWS_AS(certify_all(tw), ClosureViolation);
}

TEST_CASE("certify_all") {
  BackwardWeightedTournament three(3);
  three.set_weight(2, 0, 1);
  const CertificateFamily fam = certify_all(three);
  REQUIRE(fam.certificates.size() == 1);
  CHECK(fam.certificates[0].target == Arc{2, 0});
  CHECK(fam.certificates[0].paths == std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(validate_family(three, fam));

  CHECK(certify_all(BackwardWeightedTournament(4)).certificates.empty());

  std::mt19937_64 rng(54);
  int done = 0;
  while (done < 50) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const auto tw = oracle::random_weighted(rng, n, 0.15, 3);
    if (!oracle::closure_holds(tw)) continue;
    ++done;
    const CertificateFamily f = certify_all(tw);
    CHECK(validate_family(tw, f));
    CHECK(f.path_count() == tw.total_weight());
  }
}

TEST_CASE("validate_family rejects bad families") {
  BackwardWeightedTournament tw(5);
  tw.set_weight(2, 0, 1);
  tw.set_weight(4, 1, 1);
  const CertificateFamily good = certify_all(tw);
  REQUIRE(validate_family(tw, good));

  // Both paths through the forward arc 1 -> 2.
  CertificateFamily reuse;
  reuse.certificates = {{{2, 0}, {{0, 1, 2}}}, {{4, 1}, {{1, 2, 4}}}};
  CHECK_FALSE(validate_family(tw, reuse));

  // Path leaves the span of 2 -> 0.
  CertificateFamily leaves;
  leaves.certificates = {{{2, 0}, {{0, 3, 2}}}, {{4, 1}, {{1, 3, 4}}}};
  CHECK_FALSE(validate_family(tw, leaves));

  // Missing a target.
  CertificateFamily partial;
  partial.certificates = {{{2, 0}, {{0, 1, 2}}}};
  CHECK_FALSE(validate_family(tw, partial));

  // Uses a backward arc.
  CertificateFamily backward;
  backward.certificates = {{{2, 0}, {{0, 1, 2}}}, {{4, 1}, {{1, 3, 4}}}};
  CHECK(validate_family(tw, backward));
  tw.set_weight(3, 1, 1);
  CHECK_FALSE(validate_family(tw, backward));
}

TEST_CASE("family serialization round trip") {
  BackwardWeightedTournament tw(7);
  tw.set_weight(3, 0, 1);
  tw.set_weight(6, 2, 2);
  const CertificateFamily fam = certify_all(tw);
  std::stringstream ss;
  write_family(ss, fam);
  CHECK(read_family(ss) == fam);
  std::istringstream bad("3 0 : 0 x 3\n");
  CHECK_THROWS_AS(read_family(bad), std::runtime_error);
}
