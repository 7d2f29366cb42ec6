#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "toricbound/wronski/wronski.hpp"

namespace toricbound::harness {

struct ExperimentConfig {
  /// A built-in name, "order:FILE" or "chain:FILE" for a poset JSON file, or a
  /// JSON file holding {polytope, triangulation, deformation?}.
  std::string polytope = "hexagon";
  /// Empty for alpha = 1, otherwise a JSON array with one rational per
  /// lattice point.
  std::string weights_file;
  wronski::CoeffRange coeff_range;
  wronski::SPolicy s_policy;
  long trials = 10000;
  std::uint64_t seed = 1;
  int parallelism = 1;

  /// Throws InvalidInput on trials < 1, an empty range, or parallelism < 1.
  void validate() const;
};

ExperimentConfig config_from_json(const std::string& text);
std::string config_to_json(const ExperimentConfig& c);

struct ExperimentReport {
  std::map<long, long> histogram;
  long n_nongeneric_resampled = 0;
  long lower_bound_used = 0;
  long violations = 0;
  double wall_time = 0;

  long trials() const;
  friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

/// Loads the family named by config.polytope with config's weights.
wronski::WronskiFamily load_family(const ExperimentConfig& config);

/// Trial i draws from streams keyed by (i, resample attempt), so the report
/// does not depend on parallelism. Throws UnsupportedDimension above 3
/// variables, and NonGenericSystem when a trial stays degenerate after
/// kMaxResamples redraws.
ExperimentReport run_experiment(const ExperimentConfig& config);
ExperimentReport run_experiment(const wronski::WronskiFamily& fam, const ExperimentConfig& config);
inline constexpr int kMaxResamples = 32;

/// Sampling stream of a trial's attempt-th draw.
std::uint64_t trial_stream(long trial, int attempt);

struct TrialResult {
  long n_real = 0;
  long n_complex = 0;
  int resamples = 0;
};
/// One trial on its own, as run_experiment does it.
TrialResult run_trial(const wronski::WronskiFamily& fam, const ExperimentConfig& config, long trial);

enum class ReportFormat { kCsv, kJson, kTable };
ReportFormat parse_format(const std::string& text);

std::string emit_report(const ExperimentReport& r, ReportFormat format);
ExperimentReport report_from_json(const std::string& text);

}  // namespace toricbound::harness
