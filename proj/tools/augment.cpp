// Command-line front end: solve / verify / gen / oracle / crosscheck.
//
// Exit codes: 0 = yes/valid/agree, 1 = no/invalid/disagree, 2 = usage or
// parse error, 3 = branch-node limit hit.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "augment/augment.hpp"
#include "json.hpp"

namespace {

using namespace augment;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitAborted = 3;

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_instance(in);
}

struct SolveArgs {
  std::string path;
  bool json = false;
  bool deterministic = false;
  bool parallel = false;
  std::uint64_t max_branch_nodes = 0;
};

int run_solve(const SolveArgs& args) {
  Instance inst;
  try {
    inst = load_instance(args.path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  SolveOptions options;
  options.parallel = args.parallel && !args.deterministic;
  options.max_branch_nodes = args.max_branch_nodes;
  SolveStats stats;

  const auto started = std::chrono::steady_clock::now();
  std::optional<Solution> solution;
  try {
    solution = solve(inst, options, &stats);
  } catch (const BranchLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAborted;
  }
  const auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();

  if (args.json) {
    nlohmann::ordered_json report;
    report["status"] = solution ? "yes" : "no";
    if (solution) {
      auto links = nlohmann::ordered_json::array();
      for (const Link& l : *solution) links.push_back({l.u, l.v});
      report["solution"] = links;
    }
    report["stats"] = {{"branch_nodes", stats.branch_nodes},
                       {"flow_calls", stats.flow_calls},
                       {"wall_ms", wall_ms}};
    std::cout << report.dump() << "\n";
  } else {
    std::cout << result_to_string(solution) << "\n";
    std::cerr << "branch nodes: " << stats.branch_nodes << ", flow calls: " << stats.flow_calls
              << ", wall ms: " << wall_ms << "\n";
  }
  return solution ? kExitYes : kExitNo;
}

int run_verify(const std::string& path, const std::vector<int>& raw) {
  Instance inst;
  try {
    inst = load_instance(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (raw.size() % 2 != 0) {
    std::cerr << "error: certificate must list endpoint pairs\n";
    return kExitUsage;
  }
  std::vector<Link> links;
  for (std::size_t i = 0; i + 1 < raw.size(); i += 2) {
    if (raw[i] == raw[i + 1]) {
      std::cout << "invalid: link not available\n";
      return kExitNo;
    }
    links.push_back({raw[i], raw[i + 1]});
  }
  VerifyResult result = verify_solution(inst, links);
  if (result.ok) {
    std::cout << "valid\n";
    return kExitYes;
  }
  std::cout << "invalid: " << result.reason << "\n";
  return kExitNo;
}

struct GenArgs {
  int n = 10;
  double p = 0.4;
  int links = 5;
  int lambda = 2;
  int k = 2;
  std::string mode = "edge";
  std::uint64_t seed = 0;
  std::string output;
};

std::vector<std::string> generator_comments(const GeneratorParams& params) {
  std::ostringstream meta;
  meta << "generator=" << kGeneratorName << " seed=" << params.seed << " n=" << params.n
       << " p=" << params.edge_probability << " links=" << params.link_count
       << " lambda=" << params.lambda << " k=" << params.budget_k
       << " mode=" << mode_name(params.mode);
  return {meta.str()};
}

int run_gen(const GenArgs& args) {
  auto mode = mode_from_name(args.mode);
  if (!mode) {
    std::cerr << "error: mode must be 'vertex' or 'edge'\n";
    return kExitUsage;
  }
  GeneratorParams params{args.n, args.p, args.links, args.lambda, args.k, *mode, args.seed};
  Instance inst;
  try {
    inst = generate(params);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const std::string text = serialize_instance(inst, generator_comments(params));
  if (args.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(args.output);
    if (!out) {
      std::cerr << "error: cannot write '" << args.output << "'\n";
      return kExitUsage;
    }
    out << text;
  }
  return kExitYes;
}

int run_oracle(const std::string& path) {
  try {
    Instance inst = load_instance(path);
    std::optional<Solution> solution = brute_solve(inst);
    std::cout << result_to_string(solution) << "\n";
    return solution ? kExitYes : kExitNo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

struct CrosscheckArgs {
  int count = 100;
  std::uint64_t seed = 1;
  int n_max = 10;
  int links_max = 12;
  int lambda_max = 0;  // 0: per-mode default (edge 4, vertex 3)
  int k_max = 0;       // 0: per-mode default (edge 3, vertex 2)
  std::string mode = "both";
  std::string dump_dir;
};

int run_crosscheck(const CrosscheckArgs& args) {
  if (args.mode != "both" && !mode_from_name(args.mode)) {
    std::cerr << "error: mode must be 'vertex', 'edge', or 'both'\n";
    return kExitUsage;
  }
  std::ofstream manifest;
  if (!args.dump_dir.empty()) {
    std::filesystem::create_directories(args.dump_dir);
    manifest.open(std::filesystem::path(args.dump_dir) / "manifest.txt");
  }

  const double probs[3] = {0.2, 0.4, 0.6};
  SplitMix64 master(args.seed);
  int agree = 0;
  for (int i = 0; i < args.count; ++i) {
    const std::uint64_t case_seed = master.next();
    SplitMix64 draw(case_seed);

    GeneratorParams params;
    if (args.mode == "both")
      params.mode = draw.next() % 2 == 0 ? Mode::edge : Mode::vertex;
    else
      params.mode = *mode_from_name(args.mode);
    const bool edge_mode = params.mode == Mode::edge;
    const int lambda_max = args.lambda_max > 0 ? args.lambda_max : (edge_mode ? 4 : 3);
    const int k_max = args.k_max > 0 ? args.k_max : (edge_mode ? 3 : 2);

    params.n = 1 + static_cast<int>(draw.next_below(static_cast<std::uint64_t>(args.n_max)));
    params.edge_probability = probs[draw.next_below(3)];
    params.lambda = 1 + static_cast<int>(draw.next_below(static_cast<std::uint64_t>(lambda_max)));
    params.budget_k = static_cast<int>(draw.next_below(static_cast<std::uint64_t>(k_max) + 1));
    params.seed = case_seed;
    params.link_count = 0;
    const int non_edges =
        params.n * (params.n - 1) / 2 - generate(params).graph.edge_count();
    params.link_count = std::min(
        static_cast<int>(draw.next_below(static_cast<std::uint64_t>(args.links_max) + 1)),
        non_edges);
    const Instance inst = generate(params);

    std::optional<Solution> got = solve(inst);
    std::optional<Solution> expected = brute_solve(inst);
    const bool certificate_ok = !got || verify_solution(inst, *got).ok;
    const bool same = got.has_value() == expected.has_value() && certificate_ok;
    const char* status = expected ? "yes" : "no";

    if (!args.dump_dir.empty()) {
      std::ostringstream name;
      name << "case_" << i << ".aug";
      std::ofstream out(std::filesystem::path(args.dump_dir) / name.str());
      out << serialize_instance(inst, generator_comments(params));
      manifest << case_seed << " n=" << params.n << " p=" << params.edge_probability
               << " links=" << params.link_count << " lambda=" << params.lambda
               << " k=" << params.budget_k << " mode=" << mode_name(params.mode) << " "
               << status << "\n";
    }

    if (!same) {
      const std::string dump_name = args.dump_dir.empty()
                                        ? std::string("crosscheck_failure.aug")
                                        : (std::filesystem::path(args.dump_dir) /
                                           ("failure_" + std::to_string(i) + ".aug"))
                                              .string();
      std::ofstream out(dump_name);
      out << serialize_instance(inst, generator_comments(params));
      std::cerr << "disagreement on case " << i << " (seed " << case_seed << "): solver "
                << (got ? "yes" : "no") << ", oracle " << status
                << (certificate_ok ? "" : ", bad certificate") << "; instance dumped to "
                << dump_name << "\n";
      std::cout << agree << "/" << args.count << " agree\n";
      return kExitNo;
    }
    ++agree;
  }
  std::cout << agree << "/" << args.count << " agree\n";
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solver for making a graph lambda-connected with at most k extra links"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve_cmd = app.add_subcommand("solve", "solve an instance file");
  solve_cmd->add_option("file", solve_args.path, "instance file")->required();
  solve_cmd->add_flag("--json", solve_args.json, "single JSON object including stats");
  solve_cmd->add_flag("--deterministic", solve_args.deterministic,
                      "sequential branch exploration with fixed orderings (also overrides "
                      "--parallel)");
  solve_cmd->add_flag("--parallel", solve_args.parallel, "explore root branches concurrently");
  solve_cmd->add_option("--max-branch-nodes", solve_args.max_branch_nodes,
                        "abort with exit code 3 after this many recursion nodes (0 = off)");

  std::string verify_path;
  std::vector<int> verify_raw;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check a certificate: u v [u v ...]");
  verify_cmd->add_option("file", verify_path, "instance file")->required();
  verify_cmd->add_option("links", verify_raw, "flat list of link endpoints");

  GenArgs gen_args;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a random instance");
  gen_cmd->add_option("--n", gen_args.n, "vertex count")->required();
  gen_cmd->add_option("--p", gen_args.p, "edge probability");
  gen_cmd->add_option("--links", gen_args.links, "link count");
  gen_cmd->add_option("--lambda", gen_args.lambda, "connectivity target");
  gen_cmd->add_option("--k", gen_args.k, "budget");
  gen_cmd->add_option("--mode", gen_args.mode, "vertex|edge");
  gen_cmd->add_option("--seed", gen_args.seed, "generator seed");
  gen_cmd->add_option("-o,--output", gen_args.output, "output file (default stdout)");

  std::string oracle_path;
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force decision for an instance");
  oracle_cmd->add_option("file", oracle_path, "instance file")->required();

  CrosscheckArgs cc;
  CLI::App* cc_cmd = app.add_subcommand("crosscheck", "solver vs brute force on random instances");
  cc_cmd->add_option("--count", cc.count, "number of instances");
  cc_cmd->add_option("--seed", cc.seed, "master seed");
  cc_cmd->add_option("--n-max", cc.n_max, "max vertex count");
  cc_cmd->add_option("--links-max", cc.links_max, "max link count");
  cc_cmd->add_option("--lambda-max", cc.lambda_max, "max lambda (0 = per-mode default)");
  cc_cmd->add_option("--k-max", cc.k_max, "max budget (0 = per-mode default)");
  cc_cmd->add_option("--mode", cc.mode, "vertex|edge|both");
  cc_cmd->add_option("--dump-dir", cc.dump_dir, "write every case and a manifest here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(solve_args);
    if (verify_cmd->parsed()) return run_verify(verify_path, verify_raw);
    if (gen_cmd->parsed()) return run_gen(gen_args);
    if (oracle_cmd->parsed()) return run_oracle(oracle_path);
    if (cc_cmd->parsed()) return run_crosscheck(cc);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
