#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ssli {

/// The nine equivalent formulations of the inequality.
enum class Formulation {
  kCharPol,
  kTuple3,
  kElemSym,
  kInverseSum,
  kMeans,
  kSquared,
  kFrobNorm,
  kExp,
  kExpZeroSum,
};

const char* formulation_name(Formulation f);
std::optional<Formulation> formulation_from_name(std::string_view name);

/// Default relative tolerance for hypothesis/conclusion comparisons,
/// taken on the larger side of each comparison (floored at 1).
inline constexpr double kDefaultTol = 1e-12;

/// Entrywise coincidence threshold for the equality (rigidity) case.
inline constexpr double kRigidityTol = 1e-8;

/// Outcome of evaluating one formulation's hypotheses and conclusion.
/// Margins are signed raw differences (positive = satisfied strictly);
/// equality defects are stored relative to their comparison scale.
struct HypothesisReport {
  Formulation formulation = Formulation::kTuple3;
  std::vector<double> margins;
  std::vector<double> margin_scales;  // per-line comparison scale, not serialized
  std::vector<double> equality_defects;
  double tolerance = kDefaultTol;
  bool hypotheses_hold = false;
  double conclusion_margin = 0.0;
  double conclusion_scale = 1.0;
  bool conclusion_holds = false;

  /// Computes the two boolean flags from margins/defects and the tolerance.
  static HypothesisReport evaluate(Formulation f, std::vector<double> margins,
                                   std::vector<double> margin_scales,
                                   std::vector<double> equality_defects,
                                   double conclusion_margin, double conclusion_scale,
                                   double tol);

  std::string to_json_string() const;
};

struct MarginLine {
  double margin;
  double scale;
};

/// margin = lhs - rhs with scale max(1, |lhs|, |rhs|).
MarginLine dominance_line(double lhs, double rhs);

/// (lhs - rhs) / max(|lhs|, |rhs|); zero when both sides vanish.
double relative_defect(double lhs, double rhs);

/// (lhs - rhs) / max(floor_scale, |lhs|, |rhs|) -- for equalities whose
/// natural value is zero (log-domain sums), where a pure relative defect
/// would blow up.
double mixed_defect(double lhs, double rhs, double floor_scale);

}  // namespace ssli
