// Command-line front end: verification of the inequality formulations,
// grid scans of the lemma machinery, the pinned counterexample catalog,
// randomized campaigns, and the small-matrix computations.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ssli/campaign.hpp"
#include "ssli/checks.hpp"
#include "ssli/counterexamples.hpp"
#include "ssli/lemma.hpp"
#include "ssli/matrix.hpp"
#include "ssli/version.hpp"

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Exit codes: 0 ok, 1 theorem contradicted, 2 hypotheses not satisfied,
// 3 conjecture-mode finding, 64 usage error, 65 input/domain error.
constexpr int kExitOk = 0;
constexpr int kExitContradiction = 1;
constexpr int kExitHypothesesFail = 2;
constexpr int kExitFinding = 3;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ordered_json envelope(const char* command) {
  ordered_json j;
  j["tool"] = "ssli";
  j["version"] = ssli::kVersion;
  j["command"] = command;
  return j;
}

void print_json(const ordered_json& j) { std::cout << j.dump() << "\n"; }

std::vector<double> parse_array(const json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_array())
    throw std::invalid_argument("input JSON needs a numeric array under \"" + key + "\"");
  std::vector<double> out;
  for (const auto& x : j[key]) {
    if (!x.is_number()) throw std::invalid_argument("\"" + key + "\" must contain numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

ssli::SymMat sym_from_json(const json& j, const std::string& key) {
  if (!j.contains(key))
    throw std::invalid_argument("input JSON needs a matrix under \"" + key + "\"");
  const ssli::Mat m = ssli::Mat::from_json_string(j[key].dump());
  const double scale = std::max(1.0, std::sqrt(ssli::frobenius_sq(m)));
  for (int r = 0; r < m.dim(); ++r)
    for (int c = r + 1; c < m.dim(); ++c)
      if (std::fabs(m(r, c) - m(c, r)) > 1e-12 * scale)
        throw std::invalid_argument("\"" + key + "\" is not symmetric");
  return ssli::sym_part(m);
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::string formulation = "tuple3";
  std::string input;
  std::string y_inline, a_inline;
  std::string p1_inline, p2_inline;
  double tol = ssli::kDefaultTol;
  bool as_json = false;
};

json gather_verify_input(const VerifyOptions& opt) {
  json in = json::object();
  if (!opt.input.empty()) {
    in = json::parse(read_all(opt.input));
    if (!in.is_object()) throw std::invalid_argument("input JSON must be an object");
    // accept z/c as aliases for y/a in the exponential forms
    if (in.contains("z") && !in.contains("y")) in["y"] = in["z"];
    if (in.contains("c") && !in.contains("a")) in["a"] = in["c"];
  }
  if (!opt.y_inline.empty()) in["y"] = json::parse(opt.y_inline);
  if (!opt.a_inline.empty()) in["a"] = json::parse(opt.a_inline);
  if (!opt.p1_inline.empty()) in["P1"] = json::parse(opt.p1_inline);
  if (!opt.p2_inline.empty()) in["P2"] = json::parse(opt.p2_inline);
  return in;
}

int run_verify(const VerifyOptions& opt) {
  const auto formulation = ssli::formulation_from_name(opt.formulation);
  if (!formulation) {
    std::cerr << "error: unknown formulation \"" << opt.formulation << "\"\n";
    return kExitUsage;
  }

  ssli::HypothesisReport report;
  try {
    const json in = gather_verify_input(opt);
    switch (*formulation) {
      case ssli::Formulation::kCharPol:
        report = ssli::check_charpol(sym_from_json(in, "P1"), sym_from_json(in, "P2"), opt.tol);
        break;
      case ssli::Formulation::kFrobNorm:
        report = ssli::check_frobenius(sym_from_json(in, "P1"), sym_from_json(in, "P2"), opt.tol);
        break;
      case ssli::Formulation::kExp:
      case ssli::Formulation::kExpZeroSum: {
        const ssli::LogTuple z(parse_array(in, "y"));
        const ssli::LogTuple c(parse_array(in, "a"));
        // The sum-equality line is a hypothesis; report it as such rather
        // than as a malformed input.
        const double scale = std::max({1.0, std::fabs(z.sum()), std::fabs(c.sum())});
        if (*formulation == ssli::Formulation::kExp &&
            std::fabs(z.sum() - c.sum()) > opt.tol * scale) {
          std::cerr << "sum-equality hypothesis violated: sum(z) = " << z.sum()
                    << ", sum(c) = " << c.sum() << "\n";
          return kExitHypothesesFail;
        }
        if (*formulation == ssli::Formulation::kExpZeroSum &&
            (std::fabs(z.sum()) > opt.tol * scale || std::fabs(c.sum()) > opt.tol * scale)) {
          std::cerr << "sum-zero hypothesis violated: sum(z) = " << z.sum()
                    << ", sum(c) = " << c.sum() << "\n";
          return kExitHypothesesFail;
        }
        report = *formulation == ssli::Formulation::kExp
                     ? ssli::check_exp(z, c, opt.tol)
                     : ssli::check_exp_zero_sum(z, c, opt.tol);
        break;
      }
      default: {
        const ssli::PositiveTuple y(parse_array(in, "y"));
        const ssli::PositiveTuple a(parse_array(in, "a"));
        switch (*formulation) {
          case ssli::Formulation::kTuple3:
            report = ssli::check_tuple3(y, a, opt.tol);
            break;
          case ssli::Formulation::kElemSym:
            report = ssli::check_elem_sym(y, a, opt.tol);
            break;
          case ssli::Formulation::kInverseSum:
            report = ssli::check_inverse_sum(y, a, opt.tol);
            break;
          case ssli::Formulation::kMeans:
            report = ssli::check_means(y, a, opt.tol);
            break;
          case ssli::Formulation::kSquared:
            report = y.size() == 2 ? ssli::check_2d(y, a, opt.tol)
                                   : ssli::check_squared(y, a, opt.tol);
            break;
          default:
            break;
        }
        break;
      }
    }
  } catch (const json::exception& e) {
    std::cerr << "malformed input JSON: " << e.what() << "\n";
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitData;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitData;
  }

  const bool contradiction = report.hypotheses_hold && !report.conclusion_holds;
  if (opt.as_json) {
    ordered_json out = envelope("verify");
    out["report"] = ordered_json::parse(report.to_json_string());
    out["theorem_contradicted"] = contradiction;
    print_json(out);
  } else {
    std::cout << "ssli " << ssli::kVersion << "  verify\n";
    std::cout << std::setprecision(6);
    std::cout << "formulation:       " << ssli::formulation_name(report.formulation) << "\n";
    std::cout << "tolerance:         " << report.tolerance << "\n";
    std::cout << "margins:          ";
    for (double m : report.margins) std::cout << " " << m;
    std::cout << "\nequality defects: ";
    for (double d : report.equality_defects) std::cout << " " << d;
    std::cout << "\nhypotheses hold:   " << (report.hypotheses_hold ? "yes" : "no") << "\n";
    std::cout << "conclusion margin: " << report.conclusion_margin << "\n";
    std::cout << "conclusion holds:  " << (report.conclusion_holds ? "yes" : "no") << "\n";
    if (contradiction)
      std::cout << "*** THEOREM CONTRADICTED: hypotheses hold but the conclusion fails ***\n";
  }
  if (contradiction) return kExitContradiction;
  return report.hypotheses_hold ? kExitOk : kExitHypothesesFail;
}

// ---------------------------------------------------------------------------
// lemma-scan

struct ScanOptions {
  double r_min = 0.01;
  double r_max = 10.0;
  std::size_t r_steps = 1000;   // grid points in r
  std::size_t phi_steps = 100;  // intervals in phi (points = steps + 1)
  double tol = 1e-12;
  bool fd_check = false;
  bool as_json = false;
};

int run_lemma_scan(const ScanOptions& opt) {
  if (!(opt.r_min > 0.0) || !(opt.r_max > opt.r_min) || opt.r_steps < 1 || opt.phi_steps < 1) {
    std::cerr << "error: invalid grid (need 0 < r-min < r-max, positive step counts)\n";
    return kExitUsage;
  }
  const double phi_max = std::numbers::pi / 3.0;
  double max_f = -std::numeric_limits<double>::infinity();
  double min_dh = std::numeric_limits<double>::infinity();
  double argmax_f[2] = {0, 0}, argmin_dh[2] = {0, 0};
  double fd_max_rel = 0.0;

  for (std::size_t i = 0; i < opt.r_steps; ++i) {
    const double r = opt.r_steps == 1
                         ? opt.r_min
                         : opt.r_min + (opt.r_max - opt.r_min) * static_cast<double>(i) /
                                           static_cast<double>(opt.r_steps - 1);
    for (std::size_t k = 0; k <= opt.phi_steps; ++k) {
      const double phi = phi_max * static_cast<double>(k) / static_cast<double>(opt.phi_steps);
      const double f = ssli::lemma_F(r, phi);
      if (f > max_f) {
        max_f = f;
        argmax_f[0] = r;
        argmax_f[1] = phi;
      }
      const double dh = ssli::lemma_dh_dr(r, phi);
      if (dh < min_dh) {
        min_dh = dh;
        argmin_dh[0] = r;
        argmin_dh[1] = phi;
      }
      if (opt.fd_check) {
        const double step = 1e-6 * r;
        const double fd = (ssli::lemma_h(r + step, phi) - ssli::lemma_h(r - step, phi)) /
                          (2.0 * step);
        fd_max_rel = std::max(fd_max_rel, std::fabs(fd - dh) / std::fabs(dh));
      }
    }
  }

  const bool f_claim = max_f <= opt.tol;
  const bool dh_claim = min_dh > -opt.tol;
  if (opt.as_json) {
    ordered_json out = envelope("lemma-scan");
    ordered_json grid;
    grid["r_min"] = opt.r_min;
    grid["r_max"] = opt.r_max;
    grid["r_steps"] = opt.r_steps;
    grid["phi_steps"] = opt.phi_steps;
    grid["tolerance"] = opt.tol;
    out["grid"] = grid;
    out["max_F"] = max_f;
    out["argmax_F"] = {argmax_f[0], argmax_f[1]};
    out["min_dh_dr"] = min_dh;
    out["argmin_dh_dr"] = {argmin_dh[0], argmin_dh[1]};
    if (opt.fd_check) out["fd_max_rel_deviation"] = fd_max_rel;
    out["claims_hold"] = f_claim && dh_claim;
    print_json(out);
  } else {
    std::cout << "ssli " << ssli::kVersion << "  lemma-scan\n" << std::setprecision(6);
    std::cout << "grid: r in [" << opt.r_min << ", " << opt.r_max << "] x " << opt.r_steps
              << ", phi in [0, pi/3] x " << (opt.phi_steps + 1) << ", tol " << opt.tol << "\n";
    std::cout << "max F       = " << max_f << " at (r, phi) = (" << argmax_f[0] << ", "
              << argmax_f[1] << ")  [claim: F <= tol " << (f_claim ? "holds" : "FAILS")
              << "]\n";
    std::cout << "min dh/dr   = " << min_dh << " at (r, phi) = (" << argmin_dh[0] << ", "
              << argmin_dh[1] << ")  [claim: dh/dr > -tol " << (dh_claim ? "holds" : "FAILS")
              << "]\n";
    if (opt.fd_check)
      std::cout << "fd check    : max relative deviation = " << fd_max_rel << "\n";
  }
  return f_claim && dh_claim ? kExitOk : kExitContradiction;
}

// ---------------------------------------------------------------------------
// counterexamples

int run_counterexamples(bool as_json) {
  const auto cases = ssli::pinned_counterexamples();
  bool all_ok = true;
  for (const auto& c : cases) all_ok = all_ok && c.pattern_ok;

  if (as_json) {
    ordered_json out = envelope("counterexamples");
    ordered_json arr = ordered_json::array();
    for (const auto& c : cases) arr.push_back(ordered_json::parse(c.to_json_string()));
    out["cases"] = arr;
    out["all_patterns_match"] = all_ok;
    print_json(out);
  } else {
    std::cout << "ssli " << ssli::kVersion << "  counterexamples\n" << std::setprecision(6);
    for (const auto& c : cases) {
      std::cout << "\n[" << c.name << "] " << (c.pattern_ok ? "PASS" : "FAIL") << "\n";
      std::cout << "  " << c.summary << "\n";
      for (const auto& v : c.values)
        std::cout << "  " << v.label << ": computed " << std::setprecision(10) << v.computed
                  << ", expected " << v.expected << std::setprecision(6)
                  << (v.ok ? "" : "  <-- MISMATCH") << "\n";
      for (const auto& f : c.flags)
        std::cout << "  " << f.label << ": " << (f.ok ? "yes" : "NO") << "\n";
    }
    std::cout << "\nall patterns match: " << (all_ok ? "yes" : "NO") << "\n";
  }
  return all_ok ? kExitOk : kExitContradiction;
}

// ---------------------------------------------------------------------------
// sample

struct SampleOptions {
  std::string mode = "conjecture";
  ssli::CampaignConfig cfg;
  std::string csv_path;
  std::string output_path;
  bool as_json = false;
};

int run_sample(const SampleOptions& opt) {
  const auto mode = ssli::campaign_mode_from_name(opt.mode);
  if (!mode) {
    std::cerr << "error: unknown mode \"" << opt.mode << "\"\n";
    return kExitUsage;
  }
  ssli::CampaignConfig cfg = opt.cfg;
  cfg.mode = *mode;

  std::ofstream csv_file;
  std::ostream* csv = nullptr;
  if (!opt.csv_path.empty()) {
    csv_file.open(opt.csv_path);
    if (!csv_file) {
      std::cerr << "error: cannot open CSV path " << opt.csv_path << "\n";
      return kExitData;
    }
    csv = &csv_file;
  }

  ssli::CampaignSummary summary;
  try {
    switch (cfg.mode) {
      case ssli::CampaignMode::kConjecture:
        summary = ssli::run_conjecture_campaign(cfg, csv);
        break;
      case ssli::CampaignMode::kTheorem3:
        summary = ssli::run_theorem3_campaign(cfg, csv);
        break;
      case ssli::CampaignMode::kOptimality:
        summary = ssli::run_optimality_campaign(cfg, csv);
        break;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (opt.as_json || !opt.output_path.empty()) {
    ordered_json out = envelope("sample");
    out["summary"] = ordered_json::parse(summary.to_json_string());
    const std::string text = out.dump();
    if (!opt.output_path.empty()) {
      std::ofstream of(opt.output_path);
      of << text << "\n";
    }
    if (opt.as_json) std::cout << text << "\n";
  }
  if (!opt.as_json) {
    std::cout << "ssli " << ssli::kVersion << "  sample\n" << std::setprecision(6);
    std::cout << "mode: " << ssli::campaign_mode_name(cfg.mode) << "  n: " << cfg.n
              << "  trials: " << cfg.trials << "  seed: " << cfg.seed
              << "  spread: " << cfg.spread << "\n";
    std::cout << "tolerances: checker " << ssli::kDefaultTol << ", violation "
              << ssli::kViolationTol << ", optimality " << ssli::kOptimalityTol << "\n";
    std::cout << "premises hold: " << summary.premises_hold_count << " ("
              << 100.0 * summary.premise_holding_rate() << "%)\n";
    if (summary.premises_hold_count > 0)
      std::cout << "min conclusion margin (premise-holding): " << summary.min_conclusion_margin
                << "\n";
    if (cfg.mode == ssli::CampaignMode::kOptimality)
      std::cout << "rotations: admissible " << summary.admissible_total << ", skipped "
                << summary.skipped_total << ", low-coverage trials "
                << summary.low_coverage_trials << "\n";
    std::cout << "violations: " << summary.violations.size() << "\n";
    std::cout << "wall time: " << summary.wall_time_seconds << " s\n";
    if (!summary.violations.empty()) {
      std::cout << "violation records (exact replay values):\n";
      for (const auto& rec : summary.violations)
        std::cout << "  " << ssli::trial_to_json_string(rec) << "\n";
    }
  }

  if (!summary.violations.empty())
    return cfg.mode == ssli::CampaignMode::kConjecture ? kExitFinding : kExitContradiction;
  return kExitOk;
}

// ---------------------------------------------------------------------------
// matrix

struct MatrixOptions {
  std::string action;
  std::string input;
  std::string inline_matrix;
  bool as_json = false;
};

void print_matrix_human(const ssli::Mat& m) {
  std::cout << std::setprecision(10);
  for (int i = 0; i < m.dim(); ++i) {
    std::cout << "  [";
    for (int j = 0; j < m.dim(); ++j) std::cout << (j ? ", " : " ") << m(i, j);
    std::cout << " ]\n";
  }
  std::cout << std::setprecision(6);
}

int run_matrix(const MatrixOptions& opt) {
  ssli::Mat m(3);
  try {
    std::string text = opt.inline_matrix;
    if (text.empty()) {
      if (opt.input.empty())
        throw std::invalid_argument("matrix: provide --input FILE or -m JSON");
      text = read_all(opt.input);
      // allow either a bare matrix or an object {"M": ...}
      const json parsed = json::parse(text);
      text = parsed.is_object() && parsed.contains("M") ? parsed["M"].dump() : parsed.dump();
    }
    m = ssli::Mat::from_json_string(text);
  } catch (const json::exception& e) {
    std::cerr << "malformed input JSON: " << e.what() << "\n";
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitData;
  }

  ordered_json out = envelope("matrix");
  out["action"] = opt.action;
  if (!opt.as_json) std::cout << "ssli " << ssli::kVersion << "  matrix " << opt.action << "\n";
  try {
    if (opt.action == "log") {
      const double scale = std::max(1.0, std::sqrt(ssli::frobenius_sq(m)));
      bool symmetric = true;
      for (int i = 0; i < m.dim(); ++i)
        for (int j = i + 1; j < m.dim(); ++j)
          if (std::fabs(m(i, j) - m(j, i)) > 1e-12 * scale) symmetric = false;
      const ssli::Mat l = symmetric ? ssli::log_spd(ssli::sym_part(m)).full()
                                    : ssli::log_real_diagonalizable(m);
      out["result"] = json::parse(l.to_json_string());
      if (!opt.as_json) {
        std::cout << "log (" << (symmetric ? "symmetric" : "general") << " branch):\n";
        print_matrix_human(l);
      }
    } else if (opt.action == "polar") {
      const ssli::PolarDecomp pd = ssli::polar(m);
      ssli::Mat orth = pd.unitary.transpose() * pd.unitary;
      orth -= ssli::Mat::identity(m.dim());
      ssli::Mat recon = pd.unitary * pd.hermitian.full();
      recon -= m;
      const double orth_res = std::sqrt(ssli::frobenius_sq(orth));
      const double recon_res =
          std::sqrt(ssli::frobenius_sq(recon) / std::max(ssli::frobenius_sq(m), 1e-300));
      out["unitary"] = json::parse(pd.unitary.to_json_string());
      out["hermitian"] = json::parse(pd.hermitian.full().to_json_string());
      out["orthogonality_residual"] = orth_res;
      out["reconstruction_residual"] = recon_res;
      if (!opt.as_json) {
        std::cout << "unitary factor:\n";
        print_matrix_human(pd.unitary);
        std::cout << "hermitian factor:\n";
        print_matrix_human(pd.hermitian.full());
        std::cout << "orthogonality residual:  " << orth_res << "\n";
        std::cout << "reconstruction residual: " << recon_res << "\n";
      }
    } else if (opt.action == "hencky") {
      const ssli::Mat h = ssli::hencky(m).full();
      out["result"] = json::parse(h.to_json_string());
      out["hencky_norm_sq"] = ssli::frobenius_sq(h);
      if (!opt.as_json) {
        std::cout << "hencky strain:\n";
        print_matrix_human(h);
        std::cout << "squared norm: " << ssli::frobenius_sq(h) << "\n";
      }
    } else if (opt.action == "geodesic") {
      const double d2 = ssli::geodesic_dist_iso_sq(m);
      out["result"] = d2;
      if (!opt.as_json) std::cout << "squared geodesic distance to SO(3): " << d2 << "\n";
    } else if (opt.action == "dev3") {
      const ssli::Mat d = ssli::dev3(m);
      out["result"] = json::parse(d.to_json_string());
      if (!opt.as_json) {
        std::cout << "trace-free part:\n";
        print_matrix_human(d);
      }
    } else {
      std::cerr << "error: unknown action \"" << opt.action
                << "\" (expected log|polar|hencky|geodesic|dev3)\n";
      return kExitUsage;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitData;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitData;
  }
  if (opt.as_json) print_json(out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sum-of-squared-logarithms inequality toolkit"};
  app.require_subcommand(1);

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "check one formulation on given tuples/matrices");
  verify->add_option("--formulation", vopt.formulation,
                     "tuple3|elemsym|inverse-sum|means|squared|exp|exp0|charpol|frobenius");
  verify->add_option("--input", vopt.input, "JSON file ('-' for stdin) with y/a or P1/P2");
  verify->add_option("--y", vopt.y_inline, "inline JSON array");
  verify->add_option("--a", vopt.a_inline, "inline JSON array");
  verify->add_option("--p1", vopt.p1_inline, "inline JSON matrix (rows)");
  verify->add_option("--p2", vopt.p2_inline, "inline JSON matrix (rows)");
  verify->add_option("--tol", vopt.tol, "relative tolerance (default 1e-12)");
  verify->add_flag("--json", vopt.as_json, "machine-readable output");

  ScanOptions sopt;
  auto* scan = app.add_subcommand("lemma-scan", "grid-verify F <= 0 and dh/dr > 0");
  scan->add_option("--r-min", sopt.r_min, "smallest radius (default 0.01)");
  scan->add_option("--r-max", sopt.r_max, "largest radius (default 10)");
  scan->add_option("--r-steps", sopt.r_steps, "grid points in r (default 1000)");
  scan->add_option("--phi-steps", sopt.phi_steps, "intervals in phi (default 100)");
  scan->add_option("--tol", sopt.tol, "claim tolerance (default 1e-12)");
  scan->add_flag("--fd-check", sopt.fd_check, "cross-check dh/dr against central differences");
  scan->add_flag("--json", sopt.as_json, "machine-readable output");

  bool cx_json = false;
  auto* cx = app.add_subcommand("counterexamples", "run the pinned counterexample catalog");
  cx->add_flag("--json", cx_json, "machine-readable output");

  SampleOptions mopt;
  auto* sample = app.add_subcommand("sample", "run a randomized campaign");
  sample->add_option("--mode", mopt.mode, "conjecture|theorem3|optimality");
  sample->add_option("--n", mopt.cfg.n, "tuple length (conjecture mode)");
  sample->add_option("--trials", mopt.cfg.trials, "number of trials");
  sample->add_option("--seed", mopt.cfg.seed, "64-bit seed");
  sample->add_option("--spread", mopt.cfg.spread, "log-scale sampling width");
  sample->add_option("--rot-samples", mopt.cfg.rot_samples, "rotations per trial (optimality)");
  sample->add_option("--threads", mopt.cfg.threads, "worker threads (0 = auto)");
  sample->add_option("--csv", mopt.csv_path, "stream per-trial records to CSV file");
  sample->add_option("--output", mopt.output_path, "write the JSON summary to a file");
  sample->add_flag("--json", mopt.as_json, "machine-readable output");

  MatrixOptions xopt;
  auto* mat = app.add_subcommand("matrix", "small dense matrix computations");
  mat->add_option("action", xopt.action, "log|polar|hencky|geodesic|dev3")->required();
  mat->add_option("--input", xopt.input, "JSON file ('-' for stdin)");
  mat->add_option("-m,--matrix", xopt.inline_matrix, "inline JSON matrix (rows)");
  mat->add_flag("--json", xopt.as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (verify->parsed()) return run_verify(vopt);
  if (scan->parsed()) return run_lemma_scan(sopt);
  if (cx->parsed()) return run_counterexamples(cx_json);
  if (sample->parsed()) return run_sample(mopt);
  if (mat->parsed()) return run_matrix(xopt);
  return kExitUsage;
}
