#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "rotn/circle.hpp"
#include "rotn/report.hpp"
#include "rotn/surd.hpp"

namespace rotn {

enum class ExperimentKind { tower, density, example, leaf, heavy, oracle };

std::string_view to_string(ExperimentKind kind);
ExperimentKind parse_kind(std::string_view name);
std::string_view to_string(Precision precision);
Precision parse_precision(std::string_view name);

/// Everything needed to rerun an experiment. Fields a kind does not use are
/// still serialized so a header always round-trips.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::tower;
  std::string alpha = "[0;5,(6)]";
  std::size_t depth = 40;
  std::int64_t N = 1'000'000;
  std::int64_t m = 0;
  std::int64_t k = 0;
  unsigned k_max = 10;
  std::size_t samples = 100;
  std::uint64_t rng_seed = 1;
  std::optional<std::int64_t> ray;
  std::string through;  // leaf seed as an expression in a, e.g. "(1+a)/2"
  std::int64_t level = 0;
  bool backward = false;
  Precision precision = Precision::certified_fast;
  std::string out;
  std::string csv;

  /// Throws DomainError on out-of-range parameters or a malformed alpha.
  void validate() const;

  nlohmann::json to_json() const;
  static ExperimentConfig from_json(const nlohmann::json& j);
};

/// The outcome of one experiment. `header` describes the run (config, alpha,
/// version); `summary` holds the results small enough for JSON.
struct ExperimentResult {
  nlohmann::json header;
  nlohmann::json summary;
  CheckReport checks;
  EscalationStats escalation;

  bool passed() const { return checks.passed(); }
  nlohmann::json to_json() const;
};

/// Runs the experiment named by config.kind. When `csv` is non-null the
/// per-step payload is streamed to it, one row per visit or entry.
ExperimentResult run_experiment(const ExperimentConfig& config, std::ostream* csv = nullptr);

ExperimentResult run_tower(const ExperimentConfig& config, std::ostream* csv = nullptr);
ExperimentResult run_density(const ExperimentConfig& config, std::ostream* csv = nullptr);
ExperimentResult run_example(const ExperimentConfig& config, std::ostream* csv = nullptr);
ExperimentResult run_leaf(const ExperimentConfig& config, std::ostream* csv = nullptr);
ExperimentResult run_heavy(const ExperimentConfig& config, std::ostream* csv = nullptr);
ExperimentResult run_oracle(const ExperimentConfig& config, std::ostream* csv = nullptr);

/// The self-describing header of a run: config, exact alpha, tool version.
nlohmann::json experiment_header(const ExperimentConfig& config);

/// Writes "# " + header JSON on one line, so a CSV file carries its config.
void write_csv_header(std::ostream& os, const nlohmann::json& header);
/// Reads back the config from a stream that starts with write_csv_header.
ExperimentConfig read_csv_config(std::istream& is);

/// Evaluates an expression in a (alpha) with + - * / and parentheses,
/// exactly, e.g. "(1+a)/2" or "1-a".
SurdReal parse_affine(std::string_view expr, const SurdReal& a);

std::string_view version();

}  // namespace rotn
