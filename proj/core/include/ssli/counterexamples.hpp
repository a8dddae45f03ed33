#pragma once

#include <string>
#include <vector>

#include "ssli/report.hpp"

namespace ssli {

struct LabeledValue {
  std::string label;
  double computed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;  // relative when `relative`, absolute otherwise
  bool relative = true;
  bool ok = false;
};

struct LabeledFlag {
  std::string label;
  bool ok = false;
};

/// One pinned configuration under weakened hypotheses, with its exact
/// constants, the checker's report, and the expected pass/fail pattern.
struct PinnedCase {
  std::string name;
  std::string summary;
  std::vector<double> y;  // first input tuple (log-domain for the exp form)
  std::vector<double> a;  // second input tuple
  HypothesisReport report;
  std::vector<LabeledValue> values;
  std::vector<LabeledFlag> flags;
  bool expected_hypotheses_hold = false;
  bool expected_conclusion_holds = false;
  bool pattern_ok = false;

  std::string to_json_string() const;
};

/// The catalog of exact counterexample configurations: the e2-dominance
/// drop, the relaxed product, the four-variable case with only the first
/// two symmetric-function conditions, the linearized-log variant, and the
/// sum-zero triple pair that defeats majorization while satisfying both
/// exponential-sum conditions.
std::vector<PinnedCase> pinned_counterexamples();

}  // namespace ssli
