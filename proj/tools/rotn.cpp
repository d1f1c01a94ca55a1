// rotn: experiment runner for Birkhoff sums of the 1/2-split observable
// over a quadratic irrational rotation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "rotn/errors.hpp"
#include "rotn/harness.hpp"

namespace {

enum Exit { ok = 0, checks_failed = 1, usage = 2, invariant = 3 };

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::unique_ptr<std::ofstream> open_out(const std::string& path) {
  auto f = std::make_unique<std::ofstream>(path);
  if (!*f) throw rotn::DomainError("cannot open " + path + " for writing");
  return f;
}

// --out foo.csv names the CSV target; any other --out names the JSON report.
int execute(rotn::ExperimentConfig config, bool quiet) {
  if (ends_with(config.out, ".csv") && config.csv.empty()) {
    config.csv = config.out;
    config.out.clear();
  }
  config.validate();

  std::unique_ptr<std::ofstream> csv;
  if (!config.csv.empty()) {
    csv = open_out(config.csv);
    rotn::write_csv_header(*csv, rotn::experiment_header(config));
  }
  const rotn::ExperimentResult result = rotn::run_experiment(config, csv.get());
  const std::string report = result.to_json().dump(2);
  if (config.out.empty()) {
    std::cout << report << '\n';
  } else {
    *open_out(config.out) << report << '\n';
  }
  if (!quiet) {
    for (const rotn::Check& c : result.checks.checks) {
      if (!c.passed) std::cerr << "FAIL " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
    }
    std::cerr << result.checks.checks.size() - result.checks.failures() << '/' << result.checks.checks.size()
              << " checks passed\n";
  }
  return result.passed() ? ok : checks_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Birkhoff sums, renormalization towers and leaves for irrational rotations"};
  app.set_version_flag("--version", std::string(rotn::version()));
  app.require_subcommand(1);
  app.fallthrough();

  rotn::ExperimentConfig config;
  std::string precision = "certified-fast";
  bool quiet = false;
  app.add_option("--precision", precision, "exact-only or certified-fast")
      ->check(CLI::IsMember({"exact-only", "certified-fast"}));
  app.add_flag("-q,--quiet", quiet, "no check summary on stderr");

  std::string alpha;
  auto common = [&](CLI::App* sub, const char* default_alpha) {
    sub->add_option("--alpha", alpha, "continued fraction literal such as \"[0;5,(6)]\"")
        ->default_str(default_alpha);
    sub->add_option("--out", config.out, "JSON report path, or CSV path when it ends in .csv");
    sub->add_option("--csv", config.csv, "CSV payload path");
  };

  CLI::App* tower = app.add_subcommand("tower", "build the renormalization tower and check its bounds");
  common(tower, "[0;5,(6)]");
  tower->add_option("--depth", config.depth, "number of levels")->capture_default_str();

  CLI::App* density = app.add_subcommand("density", "visit set of S_n(1/2) = m and its gaps");
  common(density, "[0;5,(6)]");
  density->add_option("--m", config.m, "target value of S_n");
  density->add_option("--k", config.k, "time shift of the recorded positions");
  density->add_option("--N", config.N, "horizon")->capture_default_str();

  CLI::App* example = app.add_subcommand("example", "the non-dense orbit of (1+alpha)/2");
  example->add_option("--m", config.m, "alpha = [0; 2m+1, (2m+2)]")->required();
  example->add_option("--kmax", config.k_max, "last k for the maxima formulas")->capture_default_str();
  example->add_option("--N", config.N, "horizon of the direct checks")->capture_default_str();
  example->add_option("--out", config.out, "JSON report path, or CSV path when it ends in .csv");
  example->add_option("--csv", config.csv, "CSV payload path");
  example->add_flag("--backward", config.backward, "CSV rows for negative times");

  CLI::App* leaf = app.add_subcommand("leaf", "trace a ray or a leaf through the chain of squares");
  common(leaf, "[0;5,(6)]");
  std::int64_t ray = 0;
  CLI::Option* ray_opt = leaf->add_option("--ray", ray, "ray index i");
  CLI::Option* through_opt = leaf->add_option("--through", config.through, "seed as an expression in a, e.g. (1+a)/2");
  ray_opt->excludes(through_opt);
  leaf->add_option("--level", config.level, "skew level of the seed")->needs(through_opt);
  leaf->add_flag("--backward", config.backward, "trace backwards")->needs(through_opt);
  leaf->add_option("--N", config.N, "number of steps")->default_str("100000");

  CLI::App* heavy = app.add_subcommand("heavy", "check S_n(1/2) < 0 along the orbit");
  common(heavy, "[0;(2)]");
  heavy->add_option("--N", config.N, "horizon")->capture_default_str();

  CLI::App* oracle = app.add_subcommand("oracle", "compare predicted return words with simulation");
  common(oracle, "[0;5,(6)]");
  oracle->add_option("--depth", config.depth, "deepest level checked")->default_str("4");
  oracle->add_option("--samples", config.samples, "samples per case region")->capture_default_str();
  oracle->add_option("--seed", config.rng_seed, "sampling seed")->capture_default_str();

  CLI::App* replay = app.add_subcommand("replay", "rerun the config stored in a CSV or JSON output");
  std::string replay_path;
  replay->add_option("file", replay_path, "output file of an earlier run")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? ok : usage;
  }

  try {
    if (replay->parsed()) {
      std::ifstream in(replay_path);
      const char first = static_cast<char>(in.peek());
      rotn::ExperimentConfig stored;
      if (first == '#') {
        stored = rotn::read_csv_config(in);
      } else {
        stored = rotn::ExperimentConfig::from_json(nlohmann::json::parse(in).at("header").at("config"));
      }
      stored.out.clear();
      stored.csv.clear();
      return execute(stored, quiet);
    }
    config.precision = rotn::parse_precision(precision);
    config.alpha = !alpha.empty() ? alpha : heavy->parsed() ? "[0;(2)]" : "[0;5,(6)]";
    if (oracle->parsed() && oracle->count("--depth") == 0) config.depth = 4;
    if (leaf->parsed() && leaf->count("--N") == 0) config.N = 100'000;
    if (tower->parsed()) config.kind = rotn::ExperimentKind::tower;
    if (density->parsed()) config.kind = rotn::ExperimentKind::density;
    if (example->parsed()) config.kind = rotn::ExperimentKind::example;
    if (leaf->parsed()) {
      config.kind = rotn::ExperimentKind::leaf;
      if (ray_opt->count() > 0 || through_opt->count() == 0) config.ray = ray;
    }
    if (heavy->parsed()) config.kind = rotn::ExperimentKind::heavy;
    if (oracle->parsed()) config.kind = rotn::ExperimentKind::oracle;
    return execute(config, quiet);
  } catch (const rotn::ArithmeticInvariantError& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return invariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  }
}
