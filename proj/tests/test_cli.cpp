#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "fastk/cli.hpp"
#include "fastk/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "fastk");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = fastk::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("fastk_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& content = {}) const {
    const auto p = (path / name).string();
    if (!content.empty()) std::ofstream(p) << content;
    return p;
  }
};

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli solve") {
  TempDir d;
  const auto c3 = d.file("c3.txt", "3\n010\n001\n100\n");
  const Run yes = run({"solve", "--input", c3, "--k", "1"});
  CHECK(yes.code == 0);
  CHECK(yes.out.find("answer=YES") != std::string::npos);
  CHECK(yes.out.find("fas_size=1") != std::string::npos);
  const Run no = run({"solve", "--input", c3, "--k", "0"});
  CHECK(no.code == 1);
  const Run exact = run({"solve", "--input", c3});
  CHECK(exact.code == 0);
  CHECK(exact.out.rfind("fas=1\n", 0) == 0);
}

TEST_CASE("cli kernelize exits 1 on NO") {
  TempDir d;
  const auto c3 = d.file("c3.txt", "3\n010\n001\n100\n");
  const Run r = run({"kernelize", "--mode", "linear", "--k", "0", "--input", c3});
  CHECK(r.code == 1);
  CHECK(r.out.find("verdict=NO") != std::string::npos);
}

TEST_CASE("cli gen, kernelize, verify") {
  TempDir d;
  const auto inst = d.file("inst.txt");
  REQUIRE(run({"gen", "--kind", "planted", "--n", "30", "--planted-k", "8", "--seed", "5",
               "--output", inst})
              .code == 0);
  REQUIRE(fastk::parse_instance(slurp(inst)).size() == 30);
  for (const char* mode : {"linear", "subquadratic"}) {
    const auto kern = d.file(std::string("kernel_") + mode);
    const auto trace = d.file(std::string("trace_") + mode);
    const auto certs = d.file(std::string("certs_") + mode);
    const Run k = run({"kernelize", "--mode", mode, "--k", "8", "--input", inst, "--output", kern,
                       "--trace", trace, "--certificates", certs, "--seed", "3"});
    CHECK(k.code == 0);
    for (const char* key : {"vertices_before=30", "vertices_after=", "k_before=8", "k_after=",
                            "achieved_S=", "verdict=KERNEL"})
      CHECK(k.out.find(key) != std::string::npos);
    const Run v = run({"verify", "--input", inst, "--trace", trace, "--kernel", kern});
    CHECK(v.code == 0);
    CHECK(v.out.find("verify=OK") != std::string::npos);

    // A different instance does not replay to the same kernel.
    const auto other = d.file(std::string("other_") + mode);
    run({"gen", "--kind", "uniform", "--n", "30", "--seed", "6", "--output", other});
    CHECK(run({"verify", "--input", other, "--trace", trace, "--kernel", kern}).code == 1);
  }
}

TEST_CASE("cli usage and format errors exit 2") {
  TempDir d;
  const auto bad = d.file("bad.txt", "3\n011\n101\n000\n");
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"kernelize", "--input", bad}).code == 2);  // --k missing
  const Run parse = run({"kernelize", "--k", "1", "--input", bad});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("line 2") != std::string::npos);
  CHECK(run({"solve", "--input", d.file("missing.txt")}).code == 2);
  CHECK(run({"gen", "--kind", "planted", "--n", "3", "--planted-k", "9", "--seed", "1"}).code == 2);
  CHECK(run({"kernelize", "--mode", "cubic", "--k", "1", "--input", bad}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
