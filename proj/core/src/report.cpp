#include "ssli/report.hpp"

#include <cmath>
#include <utility>

#include <json.hpp>

namespace ssli {

namespace {

struct NameEntry {
  Formulation f;
  const char* name;
};

constexpr NameEntry kNames[] = {
    {Formulation::kCharPol, "charpol"},     {Formulation::kTuple3, "tuple3"},
    {Formulation::kElemSym, "elemsym"},     {Formulation::kInverseSum, "inverse-sum"},
    {Formulation::kMeans, "means"},         {Formulation::kSquared, "squared"},
    {Formulation::kFrobNorm, "frobenius"},  {Formulation::kExp, "exp"},
    {Formulation::kExpZeroSum, "exp0"},
};

}  // namespace

const char* formulation_name(Formulation f) {
  for (const auto& e : kNames)
    if (e.f == f) return e.name;
  return "?";
}

std::optional<Formulation> formulation_from_name(std::string_view name) {
  for (const auto& e : kNames)
    if (name == e.name) return e.f;
  return std::nullopt;
}

HypothesisReport HypothesisReport::evaluate(Formulation f, std::vector<double> margins,
                                            std::vector<double> margin_scales,
                                            std::vector<double> equality_defects,
                                            double conclusion_margin,
                                            double conclusion_scale, double tol) {
  HypothesisReport r;
  r.formulation = f;
  r.margins = std::move(margins);
  r.margin_scales = std::move(margin_scales);
  r.equality_defects = std::move(equality_defects);
  r.tolerance = tol;
  r.conclusion_margin = conclusion_margin;
  r.conclusion_scale = conclusion_scale;

  bool hold = true;
  for (std::size_t i = 0; i < r.margins.size(); ++i) {
    const double slack = tol * r.margin_scales[i];
    if (r.margins[i] < -slack) hold = false;
  }
  for (double d : r.equality_defects) {
    if (std::fabs(d) > tol) hold = false;
  }
  r.hypotheses_hold = hold;
  r.conclusion_holds = conclusion_margin >= -tol * conclusion_scale;
  return r;
}

std::string HypothesisReport::to_json_string() const {
  nlohmann::ordered_json j;
  j["formulation"] = formulation_name(formulation);
  j["margins"] = margins;
  j["equality_defects"] = equality_defects;
  j["hypotheses_hold"] = hypotheses_hold;
  j["conclusion_margin"] = conclusion_margin;
  j["conclusion_holds"] = conclusion_holds;
  j["tolerance"] = tolerance;
  return j.dump();
}

MarginLine dominance_line(double lhs, double rhs) {
  return {lhs - rhs, std::max({1.0, std::fabs(lhs), std::fabs(rhs)})};
}

double relative_defect(double lhs, double rhs) {
  const double scale = std::max(std::fabs(lhs), std::fabs(rhs));
  if (scale == 0.0) return 0.0;
  return (lhs - rhs) / scale;
}

double mixed_defect(double lhs, double rhs, double floor_scale) {
  const double scale = std::max({floor_scale, std::fabs(lhs), std::fabs(rhs)});
  return (lhs - rhs) / scale;
}

}  // namespace ssli
