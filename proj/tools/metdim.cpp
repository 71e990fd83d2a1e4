#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "metdim/classify.hpp"
#include "metdim/ditree.hpp"
#include "metdim/generate.hpp"
#include "metdim/io.hpp"
#include "metdim/modwidth.hpp"
#include "metdim/oracle.hpp"
#include "metdim/reduction.hpp"
#include "metdim/resolver.hpp"
#include "metdim/unicyclic.hpp"

using namespace metdim;
using Clock = std::chrono::steady_clock;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;
constexpr int kSolverMismatch = 3;

// Bad input, bad flags, or a size cap.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// The requested solver does not apply, or produced an unverified basis.
struct SolverMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  return read_text_file(path);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

Mode parse_mode(const std::string& s) { return s == "weak" ? Mode::Weak : Mode::Strong; }

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct SolveOptions {
  std::string input = "-";
  std::string format = "edgelist";
  std::string algorithm = "auto";
  std::string mode = "strong";
  std::size_t cap = kDefaultOracleCap;
  std::size_t modwidth_cap = kDefaultModwidthCap;
  std::string output;
};

Basis run_exact(const DiGraph& g, Mode mode, std::size_t cap) {
  if (cap > kMaxOracleCap) throw InputError("--cap may not exceed " + std::to_string(kMaxOracleCap));
  auto result = min_resolving_set(g, mode, cap);
  result.witness.producer = "exact";
  return result.witness;
}

std::string pick_algorithm(const GraphClass& cls, const DiGraph& g, Mode mode, const SolveOptions& opt) {
  if (cls.kind == ClassKind::DiTree) return "ditree";
  if (cls.kind == ClassKind::OrientedUnicyclic && mode == Mode::Strong) return "unicyclic";
  if (g.order() <= opt.modwidth_cap) return "modwidth";
  if (g.order() <= opt.cap) return "exact";
  throw InputError("no solver applies: " + std::string(to_string(cls.kind)) + " graph with " +
                   std::to_string(g.order()) + " vertices exceeds the modwidth and exact caps");
}

int cmd_solve(const SolveOptions& opt) {
  if (opt.format != "edgelist") throw InputError("only edgelist input is supported");
  const DiGraph g = parse_edge_list(read_input(opt.input));
  if (g.order() == 0) throw InputError("empty graph");
  const Mode mode = parse_mode(opt.mode);
  const GraphClass cls = classify(g);

  std::string algorithm = opt.algorithm;
  if (algorithm == "auto") algorithm = pick_algorithm(cls, g, mode, opt);

  const auto start = Clock::now();
  Basis basis;
  if (algorithm == "ditree") {
    if (cls.kind != ClassKind::DiTree) throw SolverMismatch("input is " + std::string(to_string(cls.kind)) + ", not a di-tree");
    basis = mode == Mode::Strong ? metric_basis_ditree(g) : weak_metric_basis_ditree(g);
  } else if (algorithm == "unicyclic") {
    if (cls.kind != ClassKind::OrientedUnicyclic) {
      throw SolverMismatch("input is " + std::string(to_string(cls.kind)) + ", not an oriented unicyclic graph");
    }
    if (mode != Mode::Strong) throw SolverMismatch("the unicyclic solver computes strong bases only");
    basis = metric_basis_unicyclic(g);
  } else if (algorithm == "modwidth") {
    if (g.order() > opt.modwidth_cap) {
      throw InputError("modwidth solver is capped at " + std::to_string(opt.modwidth_cap) + " vertices");
    }
    try {
      basis = metric_dimension_modwidth(g, mode).basis;
    } catch (const CapExceeded&) {
      if (opt.algorithm != "auto" || g.order() > opt.cap) throw;
      algorithm = "exact";
      basis = run_exact(g, mode, opt.cap);
    }
  } else {
    basis = run_exact(g, mode, opt.cap);
  }
  const double ms = elapsed_ms(start);
  basis = verify_basis(g, std::move(basis));

  nlohmann::json report;
  report["input"] = opt.input;
  report["class"] = to_string(cls.kind);
  report["algorithm"] = algorithm;
  report["mode"] = to_string(mode);
  report["metric_dimension"] = basis.size();
  report["basis"] = basis.vertices;
  report["verified"] = basis.verified;
  report["wall_ms"] = ms;
  write_output(opt.output, report.dump() + "\n");
  if (!basis.verified) throw SolverMismatch(algorithm + " produced a set that does not resolve the graph");
  return kOk;
}

int cmd_verify(const std::string& input, const std::string& basis_path, const std::string& mode_name) {
  const DiGraph g = parse_edge_list(read_input(input));
  const auto set = parse_vertex_list(read_text_file(basis_path), g.order());
  const auto result = is_resolving(g, set, parse_mode(mode_name));
  if (result) {
    std::cout << "PASS\n";
    return kOk;
  }
  if (result.unresolved_pair) {
    std::cout << "FAIL: vertices " << result.unresolved_pair->first << " and " << result.unresolved_pair->second
              << " have the same distance vector\n";
  } else {
    std::cout << "FAIL: vertex " << *result.unreachable << " is unreachable from the set\n";
  }
  return kFail;
}

struct GenOptions {
  std::string cls = "ditree";
  std::size_t n = 10;
  double digon_prob = 0.0;
  std::size_t cycle_len = 3;
  double arc_prob = 0.5;
  std::uint64_t seed = 1;
  bool path_heavy = false;
  std::string instance = "k4";
  std::string format = "edgelist";
  std::string output;
  std::string instance_output;
};

int cmd_gen(const GenOptions& opt) {
  DiGraph g;
  std::vector<std::string> comments;
  if (opt.cls == "reduction") {
    VcInstance inst;
    if (opt.instance == "k4" || opt.instance == "prism") {
      inst = builtin_instance(opt.instance);
    } else {
      inst = parse_vc_instance(read_text_file(opt.instance));
    }
    g = build_gadget(inst).graph;
    comments.push_back("reduction gadget of " + (inst.name.empty() ? opt.instance : inst.name));
    comments.push_back("vertices 0.." + std::to_string(inst.n - 1) + " are the original vertices");
    if (!opt.instance_output.empty()) write_output(opt.instance_output, format_vc_instance(inst));
  } else {
    InstanceClass cls;
    if (opt.cls == "ditree") {
      cls = InstanceClass::DiTree;
    } else if (opt.cls == "unicyclic") {
      cls = InstanceClass::OrientedUnicyclic;
    } else if (opt.cls == "dag") {
      cls = InstanceClass::Dag;
    } else {
      cls = InstanceClass::Random;
    }
    GenParams params;
    params.digon_prob = opt.digon_prob;
    params.cycle_len = opt.cycle_len;
    params.arc_prob = opt.arc_prob;
    g = opt.path_heavy ? path_heavy_instance(cls, opt.n, params, opt.seed) : random_instance(cls, opt.n, params, opt.seed);
    comments.push_back(opt.cls + " n=" + std::to_string(opt.n) + " seed=" + std::to_string(opt.seed));
  }
  write_output(opt.output, opt.format == "dot" ? to_dot(g) : to_edge_list(g, comments));
  return kOk;
}

struct BenchOptions {
  std::string suite = "ditree";
  std::vector<std::size_t> sizes;
  std::size_t seeds = 1;
  std::uint64_t seed = 1;
  bool full_verify = false;
  std::string output;
};

constexpr std::size_t kSampledAbove = 100000;
constexpr std::size_t kSampleAnchors = 64;

int cmd_bench(const BenchOptions& opt) {
  std::ostringstream csv;
  csv << "suite,n,seed,solve_ms,basis_size,verified\n";
  const InstanceClass cls = opt.suite == "ditree" ? InstanceClass::DiTree : InstanceClass::OrientedUnicyclic;
  for (std::size_t n : opt.sizes) {
    for (std::size_t k = 0; k < opt.seeds; ++k) {
      const std::uint64_t seed = opt.seed + k;
      GenParams params;
      params.digon_prob = 0.3;
      params.cycle_len = std::max<std::size_t>(3, std::min<std::size_t>(n, 8));
      if (cls == InstanceClass::OrientedUnicyclic && n < 3) throw InputError("unicyclic sizes must be at least 3");
      const DiGraph g = path_heavy_instance(cls, n, params, seed);
      const auto start = Clock::now();
      Basis basis = cls == InstanceClass::DiTree ? metric_basis_ditree(g) : metric_basis_unicyclic(g);
      const double ms = elapsed_ms(start);
      bool verified = false;
      if (opt.full_verify || n <= kSampledAbove) {
        verified = verify_basis(g, basis).verified;
      } else {
        verified = is_resolving_sampled(g, basis.vertices, Mode::Strong, kSampleAnchors, seed).resolving;
      }
      csv << opt.suite << ',' << n << ',' << seed << ',' << ms << ',' << basis.size() << ','
          << (verified ? "true" : "false") << '\n';
    }
  }
  write_output(opt.output, csv.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metric dimension of digraphs: exact solvers, verification and generators"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Compute a metric basis and print a JSON report");
  solve_cmd->add_option("--input,-i", solve.input, "Edge-list file, - for stdin");
  solve_cmd->add_option("--format", solve.format, "Input format")->check(CLI::IsMember({"edgelist"}));
  solve_cmd->add_option("--algorithm,-a", solve.algorithm)
      ->check(CLI::IsMember({"auto", "ditree", "unicyclic", "modwidth", "exact"}));
  solve_cmd->add_option("--mode,-m", solve.mode)->check(CLI::IsMember({"strong", "weak"}));
  solve_cmd->add_option("--cap", solve.cap, "Largest n for the exhaustive solver");
  solve_cmd->add_option("--modwidth-cap", solve.modwidth_cap, "Largest n for the modular-width solver");
  solve_cmd->add_option("--output,-o", solve.output, "Write the report here instead of stdout");

  std::string verify_input = "-";
  std::string verify_basis_path;
  std::string verify_mode = "strong";
  auto* verify_cmd = app.add_subcommand("verify", "Check whether a vertex set resolves a graph");
  verify_cmd->add_option("--input,-i", verify_input, "Edge-list file, - for stdin");
  verify_cmd->add_option("--basis,-b", verify_basis_path, "Whitespace-separated vertex ids")->required();
  verify_cmd->add_option("--mode,-m", verify_mode)->check(CLI::IsMember({"strong", "weak"}));

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a seeded random instance or a reduction gadget");
  gen_cmd->add_option("--class,-c", gen.cls)->check(CLI::IsMember({"ditree", "unicyclic", "dag", "random", "reduction"}));
  gen_cmd->add_option("--n", gen.n);
  gen_cmd->add_option("--digon-prob", gen.digon_prob);
  gen_cmd->add_option("--cycle-len", gen.cycle_len);
  gen_cmd->add_option("--arc-prob", gen.arc_prob);
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_flag("--path-heavy", gen.path_heavy, "Long-chain trees (ditree and unicyclic only)");
  gen_cmd->add_option("--instance", gen.instance, "k4, prism, or a cubic instance file");
  gen_cmd->add_option("--format", gen.format)->check(CLI::IsMember({"edgelist", "dot"}));
  gen_cmd->add_option("--output,-o", gen.output);
  gen_cmd->add_option("--instance-output", gen.instance_output, "Also write the cubic instance (reduction only)");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time the linear-time solvers on long-chain instances (CSV)");
  bench_cmd->add_option("--suite", bench.suite)->check(CLI::IsMember({"ditree", "unicyclic"}));
  bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated vertex counts")->delimiter(',');
  bench_cmd->add_option("--seeds", bench.seeds, "Instances per size");
  bench_cmd->add_option("--seed", bench.seed, "First seed");
  bench_cmd->add_flag("--full-verify", bench.full_verify, "Verify exactly even above 100000 vertices");
  bench_cmd->add_option("--output,-o", bench.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve);
    if (*verify_cmd) return cmd_verify(verify_input, verify_basis_path, verify_mode);
    if (*gen_cmd) return cmd_gen(gen);
    return cmd_bench(bench);
  } catch (const SolverMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSolverMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
