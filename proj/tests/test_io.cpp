#include <doctest.h>

#include <sstream>

#include "fastk/exact.hpp"
#include "fastk/io.hpp"
#include "oracles.hpp"

using namespace fastk;

TEST_CASE("parse_instance") {
  const Tournament tr = parse_instance("3\n011\n001\n000");
  CHECK(tr == Tournament(3));
  const Tournament c3 = parse_instance("3\n010\n001\n100\n");
  CHECK(c3.has_arc(0, 1));
  CHECK(c3.has_arc(1, 2));
  CHECK(c3.has_arc(2, 0));
  CHECK(parse_instance("0\n").size() == 0);
  CHECK(parse_instance("2\r\n01\r\n00\r\n\n").size() == 2);
}

TEST_CASE("parse_instance errors name the position") {
  auto error_at = [](const char* text) {
    try {
      parse_instance(text);
    } catch (const ParseError& e) {
      return std::pair{e.line, e.column};
    }
    return std::pair{0, 0};
  };
  CHECK(error_at("3\n110\n001\n100") == std::pair{2, 1});   // diagonal
  CHECK(error_at("3\n011\n101\n000") == std::pair{2, 2});   // both 0->1 and 1->0
  CHECK(error_at("3\n000\n001\n100") == std::pair{2, 2});   // neither
  CHECK(error_at("3\n01\n001\n100") == std::pair{2, 3});    // short row
  CHECK(error_at("3\n010\n0x1\n100") == std::pair{3, 2});   // bad character
  CHECK(error_at("x\n") == std::pair{1, 1});
  CHECK(error_at("-1\n") == std::pair{1, 1});
  CHECK(error_at("3\n010\n001\n") == std::pair{4, 1});      // missing row
  CHECK(error_at("") == std::pair{1, 1});
}

TEST_CASE("serialize round trip") {
  std::mt19937_64 rng(81);
  for (int n : {0, 1, 7, 70}) {
    const Tournament t = oracle::random_tournament(rng, n);
    CHECK(parse_instance(serialize_instance(t)) == t);
  }
}

TEST_CASE("generate") {
  const Tournament a = generate({GeneratorSpec::Kind::planted, 6, 0, 4});
  CHECK(is_acyclic(a));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Tournament p = generate({GeneratorSpec::Kind::planted, 10, 2, seed});
    CHECK(fas_exact(p).fas_size <= 2);
  }
  const GeneratorSpec u{GeneratorSpec::Kind::uniform, 5, 0, 99};
  CHECK(generate(u) == generate(u));
  CHECK_THROWS_AS(generate({GeneratorSpec::Kind::planted, 4, 7, 1}), std::invalid_argument);
  CHECK_THROWS_AS(generate({GeneratorSpec::Kind::uniform, -1, 0, 1}), std::invalid_argument);
  CHECK(generate({GeneratorSpec::Kind::planted, 4, 6, 1}).size() == 4);
  CHECK(parse_generator_kind("planted") == GeneratorSpec::Kind::planted);
  CHECK_THROWS_AS(parse_generator_kind("grid"), std::invalid_argument);
}

TEST_CASE("trace round trip") {
  std::mt19937_64 rng(82);
  for (int i = 0; i < 20; ++i) {
    const Tournament t = oracle::random_tournament(rng, 12);
    KernelConfig c;
    c.mode = i % 2 ? KernelMode::linear : KernelMode::subquadratic;
    const KernelResult r = kernelize(t, fas_exact(t).fas_size, c);
    std::stringstream ss;
    write_trace(ss, r.trace);
    CHECK(read_trace(ss) == r.trace);
  }
  std::istringstream bad("fastk-trace 1\nn 3\nk 1\nR5 kd=0\n");
  CHECK_THROWS_AS(read_trace(bad), ParseError);
  std::istringstream no_kd("fastk-trace 1\nn 3\nk 1\nR1 del=0\n");
  CHECK_THROWS_AS(read_trace(no_kd), ParseError);
  std::istringstream header("trace\n");
  CHECK_THROWS_AS(read_trace(header), ParseError);
}
