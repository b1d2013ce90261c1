// orichrome: command-line front end. Data goes to stdout, logs to stderr.
//
// Exit codes: 0 success, 1 parse or usage error, 2 cap or budget exceeded,
// 3 genus assumption violated, 4 target not full, 5 acceptance failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orichrome/acceptance.hpp"
#include "orichrome/bounds.hpp"
#include "orichrome/error.hpp"
#include "orichrome/exact.hpp"
#include "orichrome/full_target.hpp"
#include "orichrome/generate.hpp"
#include "orichrome/graph_io.hpp"
#include "orichrome/pipeline.hpp"

namespace {

using namespace orichrome;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCap = 2;
constexpr int kExitGenus = 3;
constexpr int kExitNotFull = 4;
constexpr int kExitAcceptance = 5;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCapExceeded:
    case ErrorCode::kTooLarge:
    case ErrorCode::kBudgetExceeded:
    case ErrorCode::kCapacityExceeded:
    case ErrorCode::kArityExceeded:
      return kExitCap;
    case ErrorCode::kGenusAssumptionViolated:
      return kExitGenus;
    default:
      return kExitInput;
  }
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("ORICHROME_SEED"); env != nullptr && *env != '\0') {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParseError, std::string("ORICHROME_SEED is not an unsigned integer: ") + env);
    }
  }
  return 0;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kParseError, "cannot write " + path);
  out << text;
}

nlohmann::json witness_json(const std::vector<int>& colours) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t v = 0; v < colours.size(); ++v) j[std::to_string(v)] = colours[v];
  return j;
}

int cmd_solve(const std::string& path, const std::string& which, int k_max) {
  const OrientedGraph g = read_graph_file(path);
  SolveResult r = which == "chio" ? exact_oriented_chromatic(g, k_max) : exact_two_dipath(g);
  nlohmann::json out = {{"which", which}, {"n", g.order()}, {"arcs", g.size()}, {"nodes", r.nodes_explored}};
  out["value"] = r.value ? nlohmann::json(*r.value) : nlohmann::json(nullptr);
  if (r.found()) {
    out["witness"] = witness_json(r.witness);
    if (which == "chio") out["target"] = graph_to_json(r.target);
  }
  std::cout << out.dump() << "\n";
  return kExitOk;
}

nlohmann::json failure_json(const FullnessReport& report) {
  if (!report.failure) return nullptr;
  return {{"class", report.failure->cls}, {"subset", report.failure->subset}, {"pattern", report.failure->pattern.entries}};
}

int cmd_full_sample(int k, int d, std::uint64_t seed, const std::string& out_path) {
  const SampleReport sample = sample_full(k, d, seed);
  const FullTarget& t = *sample.target;
  const nlohmann::json out = {{"k", k},
                              {"d", d},
                              {"N", t.class_size()},
                              {"seed", t.seed()},
                              {"attempts", sample.attempts},
                              {"checks", sample.checks},
                              {"verified", t.certified()},
                              {"failure_bound", failure_probability_bound(k, d, t.class_size())}};
  std::cout << out.dump() << "\n";
  if (!out_path.empty()) write_file(out_path, target_to_json(t).dump() + "\n");
  return kExitOk;
}

int cmd_full_verify(const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_text_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("invalid JSON: ") + e.what());
  }
  FullTarget t = target_from_json(j);
  const FullnessReport report = verify_full(t);
  const nlohmann::json out = {{"k", t.classes()}, {"d", t.arity()},         {"N", t.class_size()},
                              {"verified", report.full}, {"checks", report.checks}, {"failure", failure_json(report)}};
  std::cout << out.dump() << "\n";
  return report.full ? kExitOk : kExitNotFull;
}

int cmd_full_minimal(int k, int d, int n_cap) {
  const MinimalFullReport r = minimal_full_n(k, d, n_cap);
  nlohmann::json out = {{"k", k}, {"d", d}, {"refuted", r.refuted}, {"orientations_tried", r.orientations_tried}};
  out["N"] = r.class_size ? nlohmann::json(*r.class_size) : nlohmann::json(nullptr);
  if (r.witness) out["witness"] = target_to_json(*r.witness);
  std::cout << out.dump() << "\n";
  return kExitOk;
}

int cmd_colour(const std::string& path, int genus, const std::string& target_spec, int free_classes,
               std::uint64_t seed, bool trace, bool debug) {
  const OrientedGraph g = read_graph_file(path);
  std::unique_ptr<Target> target;
  const int effective = std::max(genus, 2);
  if (target_spec == "lazy") {
    target = std::make_unique<LazyTarget>(LazyTarget::for_genus(effective, seed));
  } else {
    FullTarget base = target_from_json(nlohmann::json::parse(read_text_file(target_spec)));
    if (!verify_full(base).full) throw Error(ErrorCode::kInvariantViolation, "target file is not full");
    const int cf = free_classes > 0 ? free_classes : base.classes() - 1;
    target = std::make_unique<RestrictedTarget>(build_restricted(std::move(base), cf));
  }
  std::clog << "target: " << target->describe() << "\n";
  PipelineOptions options;
  options.trace = trace;
  options.debug_checks = debug;
  const PipelineResult r = colour_surface_graph(g, genus, *target, options);
  for (const std::string& line : r.trace) std::clog << line << "\n";
  std::cout << pipeline_result_to_json(r).dump() << "\n";
  return r.valid ? kExitOk : kExitInput;
}

int cmd_bounds(long long g_min, long long g_max) {
  if (g_min > g_max) throw Error(ErrorCode::kDomainError, "g_min exceeds g_max");
  std::cout << bounds_csv_header() << "\n";
  for (long long g = g_min; g <= g_max; ++g) std::cout << bounds_csv_row(g) << "\n";
  return kExitOk;
}

int cmd_gen(const std::string& kind, const std::vector<int>& params, std::uint64_t seed, const std::string& format) {
  const OrientedGraph g = generate(kind, params, seed);
  if (format == "json") {
    std::cout << graph_to_json(g).dump() << "\n";
  } else {
    std::cout << serialize_edge_list(g);
  }
  return kExitOk;
}

int cmd_selftest(std::uint64_t seed) {
  bool all = true;
  run_acceptance(seed, [&](const CriterionResult& r) {
    all = all && r.passed;
    std::cout << format_result(r) << std::endl;
  });
  return all ? kExitOk : kExitAcceptance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oriented colouring toolkit: exact oracles, full targets, surface colouring pipeline, bounds"};
  app.require_subcommand(1);
  std::optional<std::uint64_t> seed_flag;
  int exit_code = kExitOk;
  std::function<int()> action;

  auto* solve = app.add_subcommand("solve", "Exact oriented chromatic number or 2-dipath chromatic number");
  std::string solve_path;
  std::string which = "chio";
  int k_max = kMaxTournamentOrder;
  solve->add_option("graph", solve_path, "Graph file (edge list or JSON)")->required();
  solve->add_option("--which", which, "chio or chi2")->check(CLI::IsMember({"chio", "chi2"}));
  solve->add_option("--k-max", k_max, "Largest tournament order to try");
  solve->callback([&] { action = [&] { return cmd_solve(solve_path, which, k_max); }; });

  auto* full = app.add_subcommand("full", "Sample, verify or search for (k,d,N)-full targets");
  full->require_subcommand(1);
  int k = 0;
  int d = 0;
  std::string out_path;
  auto* sample = full->add_subcommand("sample", "Las Vegas sampling with N = ceil(8^d ln k)");
  sample->add_option("k", k)->required();
  sample->add_option("d", d)->required();
  sample->add_option("--seed", seed_flag);
  sample->add_option("--out", out_path, "Write the certified target JSON here");
  sample->callback([&] { action = [&] { return cmd_full_sample(k, d, resolve_seed(seed_flag), out_path); }; });
  std::string verify_path;
  auto* verify = full->add_subcommand("verify", "Check a target JSON file for fullness");
  verify->add_option("target", verify_path)->required();
  verify->callback([&] { action = [&] { return cmd_full_verify(verify_path); }; });
  int n_cap = 6;
  auto* minimal = full->add_subcommand("minimal", "Smallest class size admitting a full orientation");
  minimal->add_option("k", k)->required();
  minimal->add_option("d", d)->required();
  minimal->add_option("--n-cap", n_cap);
  minimal->callback([&] { action = [&] { return cmd_full_minimal(k, d, n_cap); }; });

  auto* colour = app.add_subcommand("colour", "Colour a graph of bounded Euler genus into a full target");
  std::string colour_path;
  int genus = 2;
  std::string target_spec = "lazy";
  int free_classes = 0;
  bool trace = false;
  bool debug = false;
  colour->add_option("graph", colour_path)->required();
  colour->add_option("--g", genus, "Asserted Euler genus")->required();
  colour->add_option("--target", target_spec, "lazy, or a full target JSON file");
  colour->add_option("--free-classes", free_classes, "Free classes of a file target (default k-1)");
  colour->add_option("--seed", seed_flag);
  colour->add_flag("--trace", trace, "Log reduction and replay steps to stderr");
  colour->add_flag("--debug", debug, "Validate the partial map after every replay step");
  colour->callback([&] {
    action = [&] {
      return cmd_colour(colour_path, genus, target_spec, free_classes, resolve_seed(seed_flag), trace, debug);
    };
  });

  auto* bounds = app.add_subcommand("bounds", "CSV table of the genus bounds");
  long long g_min = 0;
  long long g_max = 0;
  bounds->add_option("g_min", g_min)->required();
  bounds->add_option("g_max", g_max)->required();
  bounds->callback([&] { action = [&] { return cmd_bounds(g_min, g_max); }; });

  auto* gen = app.add_subcommand("gen", "Generate a graph");
  std::string kind;
  std::vector<int> params;
  std::string format = "edges";
  gen->add_option("kind", kind)->required()->check(CLI::IsMember(generator_kinds()));
  gen->add_option("params", params, "Integer parameters");
  gen->add_option("--seed", seed_flag);
  gen->add_option("--format", format)->check(CLI::IsMember({"edges", "json"}));
  gen->callback([&] { action = [&] { return cmd_gen(kind, params, resolve_seed(seed_flag), format); }; });

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_option("--seed", seed_flag);
  selftest->callback([&] { action = [&] { return cmd_selftest(resolve_seed(seed_flag)); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    exit_code = action();
  } catch (const Error& e) {
    std::cerr << "orichrome: " << e.what() << "\n";
    exit_code = exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "orichrome: " << e.what() << "\n";
    exit_code = kExitInput;
  }
  return exit_code;
}
