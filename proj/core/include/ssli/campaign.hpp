#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ssli/report.hpp"
#include "ssli/rng.hpp"
#include "ssli/tuple.hpp"

namespace ssli {

enum class CampaignMode { kConjecture, kTheorem3, kOptimality };

const char* campaign_mode_name(CampaignMode m);
std::optional<CampaignMode> campaign_mode_from_name(std::string_view name);

/// Margins below -kViolationTol with premises above +kViolationTol count as
/// violations; the dead zone keeps float noise out of the equality case.
inline constexpr double kViolationTol = 1e-9;

/// Optimality-mode tolerance on the reference value.
inline constexpr double kOptimalityTol = 1e-8;

struct CampaignConfig {
  CampaignMode mode = CampaignMode::kConjecture;
  std::size_t n = 3;            // tuple length (3 for theorem3/optimality)
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  double spread = 1.0;          // log-scale width of the sampler
  std::size_t rot_samples = 10000;  // rotations per trial, optimality mode
  unsigned threads = 0;         // 0 = SSLI_THREADS env or hardware count

  void validate() const;  // throws std::invalid_argument
};

/// One sampled instance. For the tuple modes y/a hold the two tuples; for
/// optimality y holds the 3x3 matrix row-major and a is empty.
struct TrialRecord {
  std::size_t trial = 0;
  std::vector<double> y;
  std::vector<double> a;
  std::vector<double> margins;
  double eq_defect = 0.0;
  bool premises_hold = false;
  double conclusion_margin = 0.0;
  bool violation = false;
  std::size_t admissible = 0;  // optimality: rotations with a defined log
  std::size_t skipped = 0;     // optimality: inadmissible draws
};

struct CampaignSummary {
  CampaignConfig config;
  std::size_t trial_count = 0;
  std::size_t premises_hold_count = 0;
  std::vector<TrialRecord> violations;
  double min_conclusion_margin = std::numeric_limits<double>::infinity();
  double wall_time_seconds = 0.0;  // not serialized; see to_json_string
  std::size_t admissible_total = 0;
  std::size_t skipped_total = 0;
  std::size_t low_coverage_trials = 0;  // trials with skip rate > 1/2

  double premise_holding_rate() const;

  /// Canonical JSON: deterministic for a fixed config (the wall time is
  /// deliberately excluded so identical configs serialize byte-identically).
  std::string to_json_string() const;
};

/// Two positive n-tuples with both products shifted to exactly 1: log
/// coordinates are centered Gaussians of width `spread`, each tuple then
/// re-centered by its own log-mean.
std::pair<PositiveTuple, PositiveTuple> sample_equal_product_pair(std::size_t n,
                                                                  SplitMix64& rng,
                                                                  double spread);

/// Independent equal-product pairs, all e_i margins recorded; violations are
/// findings, never errors. Optional CSV sink receives one row per trial.
CampaignSummary run_conjecture_campaign(const CampaignConfig& cfg,
                                        std::ostream* csv = nullptr);

/// n = 3 with a premise-respecting sampler (outward perturbation of a
/// product-preserving triple); violations contradict the proved theorem.
CampaignSummary run_theorem3_campaign(const CampaignConfig& cfg,
                                      std::ostream* csv = nullptr);

/// Random invertible Z (det > 0, condition <= 1e3) against random rotations:
/// no admissible rotation may push ||log(Q^T Z)||_F^2 or the symmetric-part
/// variant below ||log H||_F^2 - kOptimalityTol, and the polar factor must
/// attain the reference. Inadmissible logs are counted as skips.
CampaignSummary run_optimality_campaign(const CampaignConfig& cfg,
                                        std::ostream* csv = nullptr);

/// Re-runs the tuple-level checker on a record's stored tuples; violation
/// records must reproduce their margins when replayed.
HypothesisReport replay_trial(const TrialRecord& rec);

/// Exact-valued JSON for a record (tuples additionally as hex-float strings).
std::string trial_to_json_string(const TrialRecord& rec);
TrialRecord trial_from_json_string(const std::string& text);

}  // namespace ssli
