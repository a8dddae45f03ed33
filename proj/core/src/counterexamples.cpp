#include "ssli/counterexamples.hpp"

#include <cmath>

#include <json.hpp>

#include "ssli/checks.hpp"
#include "ssli/tuple.hpp"

namespace ssli {

namespace {

LabeledValue rel_value(std::string label, double computed, double expected, double tol) {
  LabeledValue v;
  v.label = std::move(label);
  v.computed = computed;
  v.expected = expected;
  v.tolerance = tol;
  v.relative = true;
  v.ok = std::fabs(computed - expected) <= tol * std::fabs(expected);
  return v;
}

LabeledValue abs_value(std::string label, double computed, double expected, double tol) {
  LabeledValue v;
  v.label = std::move(label);
  v.computed = computed;
  v.expected = expected;
  v.tolerance = tol;
  v.relative = false;
  v.ok = std::fabs(computed - expected) <= tol;
  return v;
}

void finalize(PinnedCase& pc) {
  bool ok = pc.report.hypotheses_hold == pc.expected_hypotheses_hold &&
            pc.report.conclusion_holds == pc.expected_conclusion_holds;
  for (const auto& v : pc.values) ok = ok && v.ok;
  for (const auto& f : pc.flags) ok = ok && f.ok;
  pc.pattern_ok = ok;
}

PinnedCase case_dropped_e2() {
  PinnedCase pc;
  pc.name = "dropped-e2";
  pc.summary =
      "Triples with dominated sum and equal product but a violated pairwise-product "
      "condition; the squared-log conclusion reverses (72 < 96).";
  const PositiveTuple y({std::exp(6.0), 1.0, std::exp(-6.0)});
  const PositiveTuple a({std::exp(4.0), std::exp(4.0), std::exp(-8.0)});
  pc.y = y.values();
  pc.a = a.values();
  pc.report = check_tuple3(y, a);
  pc.values.push_back(rel_value("sum_sq_log(y)", sum_sq_log(y), 72.0, 1e-12));
  pc.values.push_back(rel_value("sum_sq_log(a)", sum_sq_log(a), 96.0, 1e-12));
  pc.flags.push_back({"e1 dominance holds", pc.report.margins[0] > 0.0});
  pc.flags.push_back({"e2 dominance fails", pc.report.margins[1] < 0.0});
  pc.flags.push_back({"products equal", std::fabs(pc.report.equality_defects[0]) <= 1e-12});
  pc.expected_hypotheses_hold = false;
  pc.expected_conclusion_holds = false;
  finalize(pc);
  return pc;
}

PinnedCase case_relaxed_product() {
  PinnedCase pc;
  pc.name = "relaxed-product";
  pc.summary =
      "Product equality weakened to dominance: both symmetric-function conditions hold "
      "but the conclusion reverses (1 < 4).";
  const PositiveTuple y({std::exp(1.0), 1.0, 1.0});
  const PositiveTuple a({1.0, 1.0, std::exp(-2.0)});
  pc.y = y.values();
  pc.a = a.values();
  pc.report = check_tuple3(y, a);
  pc.values.push_back(rel_value("sum_sq_log(y)", sum_sq_log(y), 1.0, 1e-12));
  pc.values.push_back(rel_value("sum_sq_log(a)", sum_sq_log(a), 4.0, 1e-12));
  pc.flags.push_back({"e1 dominance holds", pc.report.margins[0] > 0.0});
  pc.flags.push_back({"e2 dominance holds", pc.report.margins[1] > 0.0});
  pc.flags.push_back({"product strictly larger", pc.report.equality_defects[0] > 1e-12});
  pc.expected_hypotheses_hold = false;  // the equality line is violated
  pc.expected_conclusion_holds = false;
  finalize(pc);
  return pc;
}

PinnedCase case_four_variables() {
  PinnedCase pc;
  pc.name = "four-variables";
  pc.summary =
      "n = 4 with only e1/e2 dominance and equal product: not enough; the conclusion "
      "reverses (324 < 482). The e3 condition of the full n-variable form fails.";
  const PositiveTuple y({std::exp(7.0), std::exp(7.0), std::exp(1.0), std::exp(-15.0)});
  const PositiveTuple a({std::exp(7.0), std::exp(6.0), std::exp(6.0), std::exp(-19.0)});
  pc.y = y.values();
  pc.a = a.values();
  pc.report = check_elem_sym(y, a);
  pc.values.push_back(rel_value("sum_sq_log(y)", sum_sq_log(y), 324.0, 1e-12));
  pc.values.push_back(rel_value("sum_sq_log(a)", sum_sq_log(a), 482.0, 1e-12));
  pc.flags.push_back({"e1 dominance holds", pc.report.margins[0] > 0.0});
  pc.flags.push_back({"e2 dominance holds", pc.report.margins[1] > 0.0});
  pc.flags.push_back({"e3 dominance fails", pc.report.margins[2] < 0.0});
  pc.flags.push_back({"products equal", std::fabs(pc.report.equality_defects[0]) <= 1e-12});
  pc.expected_hypotheses_hold = false;
  pc.expected_conclusion_holds = false;
  finalize(pc);
  return pc;
}

PinnedCase case_linearized_log() {
  PinnedCase pc;
  pc.name = "linearized-log";
  pc.summary =
      "Replacing log(y) by its linearization y - 1 breaks the inequality: the genuine "
      "conclusion holds while the linearized sums reverse (80.956... < 81.81).";
  const PositiveTuple y({9.0, 5.0, 1.0 / 45.0});
  const PositiveTuple a({10.0, 1.0, 0.1});
  pc.y = y.values();
  pc.a = a.values();
  pc.report = check_tuple3(y, a);
  double lin_y = 0.0, lin_a = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    lin_y += (y[i] - 1.0) * (y[i] - 1.0);
    lin_a += (a[i] - 1.0) * (a[i] - 1.0);
  }
  const double lin_y_expected = 64.0 + 16.0 + (44.0 / 45.0) * (44.0 / 45.0);
  const double lin_a_expected = 81.81;
  pc.values.push_back(rel_value("sum (y_i - 1)^2", lin_y, lin_y_expected, 1e-12));
  pc.values.push_back(rel_value("sum (a_i - 1)^2", lin_a, lin_a_expected, 1e-12));
  pc.flags.push_back({"linearized comparison reverses", lin_y < lin_a});
  pc.expected_hypotheses_hold = true;
  pc.expected_conclusion_holds = true;
  finalize(pc);
  return pc;
}

PinnedCase case_majorization_gap() {
  PinnedCase pc;
  pc.name = "majorization-gap";
  pc.summary =
      "Sum-zero triples satisfying both exponential-sum conditions whose sorted partial "
      "sums do NOT majorize (z1 < c1): the inequality is not majorization in disguise.";
  const double s3 = std::sqrt(3.0);
  const LogTuple z({0.5 + 0.95 / (2.0 * s3), 0.5 + 0.85 / (2.0 * s3), -1.0 - 0.9 / s3});
  const LogTuple c({0.5 + 1.0 / (2.0 * s3), -0.5 + 1.0 / (2.0 * s3), -1.0 / s3});
  pc.y = z.values();
  pc.a = c.values();
  pc.report = check_exp(z, c);
  double ez = 0.0, ec = 0.0, enz = 0.0, enc = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    ez += std::exp(z[i]);
    ec += std::exp(c[i]);
    enz += std::exp(-z[i]);
    enc += std::exp(-c[i]);
  }
  // Five-decimal reference values (truncated display values).
  pc.values.push_back(abs_value("sum exp(z)", ez, 4.49497, 1e-5));
  pc.values.push_back(abs_value("sum exp(c)", ec, 3.57137, 1e-5));
  pc.values.push_back(abs_value("sum exp(-z)", enz, 5.50607, 1e-5));
  pc.values.push_back(abs_value("sum exp(-c)", enc, 3.47107, 1e-5));
  pc.flags.push_back({"exp-sum conditions hold",
                      pc.report.margins[0] > 0.0 && pc.report.margins[1] > 0.0});
  pc.flags.push_back({"majorization fails", !majorizes(z, c)});
  pc.flags.push_back({"z1 < c1", z[0] < c[0]});
  pc.expected_hypotheses_hold = true;
  pc.expected_conclusion_holds = true;
  finalize(pc);
  return pc;
}

}  // namespace

std::vector<PinnedCase> pinned_counterexamples() {
  return {case_dropped_e2(), case_relaxed_product(), case_four_variables(),
          case_linearized_log(), case_majorization_gap()};
}

std::string PinnedCase::to_json_string() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["summary"] = summary;
  j["y"] = y;
  j["a"] = a;
  nlohmann::ordered_json vals = nlohmann::ordered_json::array();
  for (const auto& v : values) {
    nlohmann::ordered_json jv;
    jv["label"] = v.label;
    jv["computed"] = v.computed;
    jv["expected"] = v.expected;
    jv["tolerance"] = v.tolerance;
    jv["relative"] = v.relative;
    jv["ok"] = v.ok;
    vals.push_back(jv);
  }
  j["values"] = vals;
  nlohmann::ordered_json flags_json = nlohmann::ordered_json::array();
  for (const auto& f : flags) {
    nlohmann::ordered_json jf;
    jf["label"] = f.label;
    jf["ok"] = f.ok;
    flags_json.push_back(jf);
  }
  j["flags"] = flags_json;
  j["report"] = nlohmann::ordered_json::parse(report.to_json_string());
  j["expected_hypotheses_hold"] = expected_hypotheses_hold;
  j["expected_conclusion_holds"] = expected_conclusion_holds;
  j["pattern_ok"] = pattern_ok;
  return j.dump();
}

}  // namespace ssli
