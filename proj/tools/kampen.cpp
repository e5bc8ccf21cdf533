// kampen: command-line front end.
//
// Exit codes: 0 feasible / no violations, 1 infeasible / violations,
// 2 usage or data error, 3 time or node limit reached.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kampen/ilp.hpp"
#include "kampen/oracle.hpp"
#include "kampen/report.hpp"
#include "kampen/simplicial.hpp"
#include "kampen/system_builder.hpp"

using namespace kampen;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kTimeout = 3;

struct Source {
  std::string file;
  std::string builtin;
  int simplex = 0;
  int dim = 3;

  void attach(CLI::App* app, bool dim_required) {
    auto* g = app->add_option_group("complex");
    g->add_option("--complex", file, "JSON complex file");
    g->add_option("--builtin", builtin, "built-in instance name");
    g->add_option("--simplex", simplex, "full simplex on this many vertices")
        ->check(CLI::Range(1, 64));
    g->require_option(1);
    auto* d = app->add_option("--dim", dim, "target dimension m")->check(CLI::Range(1, 8));
    if (dim_required) d->capture_default_str();
  }

  SimplicialComplex load() const {
    if (!file.empty()) return load_complex(file);
    if (!builtin.empty()) return load_builtin(builtin);
    return SimplicialComplex::skeleton(simplex, simplex - 1);
  }
};

void emit(const json& report, const std::string& path) {
  const std::string text = report.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

double env_time_limit() {
  if (const char* v = std::getenv("KAMPEN_TIME_LIMIT")) {
    try {
      return std::stod(v);
    } catch (const std::exception&) {
      throw Error("KAMPEN_TIME_LIMIT is not a number");
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integer-programming obstructions to embedding simplicial complexes"};
  app.require_subcommand(1);

  Source src;
  std::string preset = "full", abs_encoding = "aux", subset_policy = "pairs";
  std::string out_path, report_path, solution_path;
  bool no_symmetry = false, no_timing = false;
  std::optional<double> time_limit;
  std::uint64_t node_limit = 0;
  int workers = 1;

  auto* info = app.add_subcommand("info", "f-vector and deleted-product cell counts");
  src.attach(info, false);

  auto add_system = [&](CLI::App* cmd) {
    src.attach(cmd, true);
    cmd->add_option("--system", preset, "full|novik|minimal|sub_y|sub_subsets")
        ->capture_default_str();
    cmd->add_flag("--no-symmetry-reduction", no_symmetry,
                  "one variable per ordered cell plus explicit symmetry rows");
    cmd->add_option("--abs-encoding", abs_encoding, "aux|patterns")
        ->check(CLI::IsMember({"aux", "patterns"}))
        ->capture_default_str();
    cmd->add_option("--subset-policy", subset_policy, "pairs|singletons|all")
        ->capture_default_str();
    cmd->add_option("--report", report_path, "write the JSON report here instead of stdout");
    cmd->add_flag("--no-timing", no_timing, "omit wall-clock fields from the report");
  };

  auto* generate = app.add_subcommand("generate", "write the system as an LP file");
  add_system(generate);
  generate->add_option("--out", out_path, "LP output file")->required();

  auto* check = app.add_subcommand("check", "build and solve the system");
  add_system(check);
  check->add_option("--time-limit", time_limit, "seconds (default: $KAMPEN_TIME_LIMIT or none)");
  check->add_option("--node-limit", node_limit, "search nodes (0 = none)");
  check->add_option("--workers", workers, "parallel search workers")->check(CLI::Range(1, 256));
  check->add_option("--solution", solution_path, "write a feasible assignment as JSON");

  int vertices = 6, trials = 10;
  std::uint64_t seed = 1;
  std::string suite = "fundamental";
  bool parallel = false;
  auto* oracle = app.add_subcommand("oracle", "run the geometric property suites");
  oracle->add_option("--vertices", vertices, "N: vertices are 0..N")->check(CLI::Range(1, 16));
  oracle->add_option("--dim", src.dim, "m")->check(CLI::Range(1, 6));
  oracle->add_option("--trials", trials)->check(CLI::NonNegativeNumber);
  oracle->add_option("--seed", seed);
  oracle->add_option("--suite", suite)
      ->check(CLI::IsMember({"fundamental", "bounds", "cyclic", "system"}));
  oracle->add_flag("--parallel", parallel, "OpenMP kernels");
  oracle->add_option("--report", report_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (info->parsed()) {
      const auto k = src.load();
      json r{{"command", "info"}, {"complex", k.name()}, {"f_vector", f_vector(k)}};
      json counts = json::object();
      for (int d = 0; d <= 2 * k.dimension(); ++d)
        counts[std::to_string(d)] = cells(k, d).size();
      r["cells"] = counts;
      if (info->count("--dim")) {
        r["m"] = src.dim;
        r["lambda_cells"] = cells(k, src.dim - 1).size();
        r["top_cells"] = cells(k, src.dim).size();
      }
      emit(r, "");
      return kOk;
    }

    if (oracle->parsed()) {
      const auto rep = run_suite(suite, vertices, src.dim, trials, seed,
                                 parallel ? Execution::Parallel : Execution::Serial);
      json r = oracle_report(rep);
      r["command"] = "oracle";
      r["vertices"] = vertices;
      r["m"] = src.dim;
      emit(r, report_path);
      return rep.ok() ? kOk : kNegative;
    }

    SystemConfig cfg;
    cfg.preset = parse_preset(preset);
    cfg.symmetry_reduction = !no_symmetry;
    cfg.abs_encoding = abs_encoding == "patterns" ? AbsEncoding::SignPatterns
                                                  : AbsEncoding::Auxiliary;
    cfg.subset_policy = parse_subset_policy(subset_policy);
    const auto k = src.load();
    const Model model = build(k, src.dim, cfg);
    json r = model_report(model);

    if (generate->parsed()) {
      write_file(out_path, export_lp(model));
      r["command"] = "generate";
      r["lp_file"] = out_path;
      emit(r, report_path);
      return kOk;
    }

    Limits limits;
    limits.time_seconds = time_limit ? *time_limit : env_time_limit();
    limits.node_limit = node_limit;
    limits.workers = workers;
    const auto start = std::chrono::steady_clock::now();
    const Verdict v = solve(model, limits);
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r["command"] = "check";
    r.update(verdict_report(v));
    r.erase("assignment");
    if (no_timing) r["stats"].erase("seconds");
    else r["wall_seconds"] = wall;
    if (v.status == Status::Feasible && !solution_path.empty())
      write_file(solution_path, json(v.assignment).dump(2) + "\n");
    emit(r, report_path);
    switch (v.status) {
      case Status::Feasible: return kOk;
      case Status::Infeasible: return kNegative;
      case Status::Timeout: return kTimeout;
    }
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
