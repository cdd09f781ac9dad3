#include "fastk/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "fastk/exact.hpp"
#include "fastk/io.hpp"
#include "fastk/kernelize.hpp"

namespace fastk {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;

// Anything thrown as UsageError maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) throw UsageError("cannot write '" + path + "'");
}

Tournament load_instance(const std::string& path) {
  try {
    return parse_instance(read_file(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

struct KernelizeArgs {
  std::string mode = "linear";
  int k = 0;
  double epsilon = 1.0;
  std::string heuristic = "kwiksort";
  int restarts = 32;
  std::uint64_t seed = 1;
  std::string input, output, trace, certificates;
  bool extra_rules = false;
};

int run_kernelize(const KernelizeArgs& a, std::ostream& out) {
  const Tournament t = load_instance(a.input);
  KernelConfig cfg;
  cfg.mode = parse_kernel_mode(a.mode);
  cfg.epsilon = a.epsilon;
  cfg.heuristic.method = parse_heuristic(a.heuristic);
  cfg.heuristic.restarts = a.restarts;
  cfg.heuristic.seed = a.seed;
  cfg.linear_extra_rules = a.extra_rules;
  const KernelResult r = kernelize(t, a.k, cfg);

  write_stats(out, r);
  const std::string kernel_text = serialize_instance(r.kernel);
  if (a.output.empty())
    out << kernel_text;
  else
    write_file(a.output, kernel_text);
  if (!a.trace.empty()) {
    std::ostringstream ts;
    write_trace(ts, r.trace);
    write_file(a.trace, ts.str());
  }
  if (!a.certificates.empty()) {
    std::ostringstream cs;
    for (std::size_t i = 0; i < r.certificates.size(); ++i) {
      cs << "# rule3 firing " << i << '\n';
      write_family(cs, r.certificates[i]);
    }
    write_file(a.certificates, cs.str());
  }
  return r.verdict == Verdict::no ? kExitNo : kExitOk;
}

void print_arcs(std::ostream& out, const std::vector<Arc>& arcs) {
  for (const Arc& a : arcs) out << a.tail << ' ' << a.head << '\n';
}

int run_solve(const std::string& input, std::optional<int> k, int limit, std::ostream& out) {
  const Tournament t = load_instance(input);
  if (!k) {
    const ExactResult ex = fas_exact(t, limit);
    out << "fas=" << ex.fas_size << '\n';
    print_arcs(out, ex.minimal_fas);
    return kExitOk;
  }
  KernelConfig cfg;
  cfg.exact_limit = limit;
  const Decision d = decide(t, *k, cfg);
  out << "answer=" << (d.yes ? "YES" : "NO") << '\n';
  out << "kernel_vertices=" << d.kernel.stats.vertices_after << '\n';
  if (!d.yes) return kExitNo;
  out << "fas_size=" << d.fas.size() << '\n';
  print_arcs(out, d.fas);
  return kExitOk;
}

int run_gen(const std::string& kind, int n, int planted, std::uint64_t seed,
            const std::string& output, std::ostream& out) {
  GeneratorSpec spec;
  spec.kind = parse_generator_kind(kind);
  spec.n = n;
  spec.planted_reversals = planted;
  spec.seed = seed;
  const std::string text = serialize_instance(generate(spec));
  if (output.empty())
    out << text;
  else
    write_file(output, text);
  return kExitOk;
}

int run_verify(const std::string& input, const std::string& trace_path,
               const std::string& kernel_path, std::ostream& out) {
  const Tournament t = load_instance(input);
  const Tournament expected = load_instance(kernel_path);
  ReductionTrace trace;
  {
    std::istringstream ts(read_file(trace_path));
    try {
      trace = read_trace(ts);
    } catch (const ParseError& e) {
      throw UsageError(trace_path + ": " + e.what());
    }
  }
  try {
    const Tournament replayed = replay_trace(t, trace);
    if (serialize_instance(replayed) != serialize_instance(expected)) {
      out << "verify=MISMATCH\n";
      return kExitNo;
    }
    out << "verify=OK\n"
        << "vertices=" << replayed.size() << '\n'
        << "k_after=" << trace.k - trace.total_k_delta() << '\n';
    return kExitOk;
  } catch (const TraceMismatch& e) {
    out << "verify=MISMATCH\n" << "reason=" << e.what() << '\n';
    return kExitNo;
  }
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kernelization for feedback arc set in tournaments", "fastk"};
  app.require_subcommand(1);

  KernelizeArgs ka;
  auto* kern = app.add_subcommand("kernelize", "reduce an instance to a kernel");
  kern->add_option("--mode", ka.mode, "linear or subquadratic")
      ->check(CLI::IsMember({"linear", "subquadratic"}));
  kern->add_option("--k", ka.k, "parameter")->required()->check(CLI::NonNegativeNumber);
  kern->add_option("--epsilon", ka.epsilon, "approximation slack for the linear kernel")
      ->check(CLI::PositiveNumber);
  kern->add_option("--heuristic", ka.heuristic, "indegree, kwiksort or exact")
      ->check(CLI::IsMember({"indegree", "kwiksort", "exact"}));
  kern->add_option("--restarts", ka.restarts)->check(CLI::PositiveNumber);
  kern->add_option("--seed", ka.seed);
  kern->add_option("--input", ka.input)->required();
  kern->add_option("--output", ka.output, "kernel file (default: standard output)");
  kern->add_option("--trace", ka.trace);
  kern->add_option("--certificates", ka.certificates, "write Rule 3 certificate paths");
  kern->add_flag("--linear-extra-rules", ka.extra_rules, "also run Rules 2 and 4 in linear mode");

  std::string solve_input;
  std::optional<int> solve_k;
  int solve_limit = kExactDefaultLimit;
  auto* solve = app.add_subcommand("solve", "exact feedback arc set, or decide fas <= k");
  solve->add_option("--input", solve_input)->required();
  solve->add_option("--k", solve_k)->check(CLI::NonNegativeNumber);
  solve->add_option("--limit", solve_limit, "vertex limit of the exact solver")
      ->check(CLI::Range(0, kExactHardLimit));

  std::string gen_kind = "uniform", gen_output;
  int gen_n = 0, gen_planted = 0;
  std::uint64_t gen_seed = 0;
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--kind", gen_kind)->check(CLI::IsMember({"uniform", "planted"}));
  gen->add_option("--n", gen_n)->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--planted-k", gen_planted)->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", gen_seed)->required();
  gen->add_option("--output", gen_output);

  std::string ver_input, ver_trace, ver_kernel;
  auto* verify = app.add_subcommand("verify", "replay a trace and compare with a kernel");
  verify->add_option("--input", ver_input)->required();
  verify->add_option("--trace", ver_trace)->required();
  verify->add_option("--kernel", ver_kernel)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*kern) return run_kernelize(ka, out);
    if (*solve) return run_solve(solve_input, solve_k, solve_limit, out);
    if (*gen) return run_gen(gen_kind, gen_n, gen_planted, gen_seed, gen_output, out);
    return run_verify(ver_input, ver_trace, ver_kernel, out);
  } catch (const std::runtime_error& e) {  // UsageError, ParseError
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {  // instance too large for the exact solver
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace fastk
