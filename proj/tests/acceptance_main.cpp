// Acceptance suite: one pass/fail line per criterion, every tolerance pinned
// in code. Returns the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ssli/campaign.hpp"
#include "ssli/checks.hpp"
#include "ssli/counterexamples.hpp"
#include "ssli/lemma.hpp"
#include "ssli/matrix.hpp"
#include "ssli/rng.hpp"
#include "ssli/tuple.hpp"
#include "test_support.hpp"

using namespace ssli;

namespace {

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

void report(int number, bool pass, const std::string& what, double seconds,
            const std::string& detail) {
  std::printf("[%s] criterion %2d: %s (%.2f s)%s%s\n", pass ? "PASS" : "FAIL", number,
              what.c_str(), seconds, detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++failures;
}

bool rel_close(double got, double want, double tol) {
  return std::fabs(got - want) <= tol * std::fabs(want);
}

// ---------------------------------------------------------------------------

void criterion_1_pinned_counterexamples() {
  Timer timer;
  const auto cases = pinned_counterexamples();
  bool ok = cases.size() == 5;
  std::string detail;
  for (const auto& c : cases) {
    if (!c.pattern_ok) {
      ok = false;
      detail += c.name + " pattern mismatch; ";
    }
    for (const auto& v : c.values)
      if (!v.ok) {
        ok = false;
        detail += c.name + "/" + v.label + "; ";
      }
  }
  // explicit re-assertion of the four pinned squared-log pairs at 1e-12
  auto val = [&](std::size_t c, std::size_t v) { return cases[c].values[v].computed; };
  ok = ok && rel_close(val(0, 0), 72.0, 1e-12) && rel_close(val(0, 1), 96.0, 1e-12);
  ok = ok && rel_close(val(1, 0), 1.0, 1e-12) && rel_close(val(1, 1), 4.0, 1e-12);
  ok = ok && rel_close(val(2, 0), 324.0, 1e-12) && rel_close(val(2, 1), 482.0, 1e-12);
  const double lin_y = 64.0 + 16.0 + (44.0 / 45.0) * (44.0 / 45.0);
  ok = ok && rel_close(val(3, 0), lin_y, 1e-12) && rel_close(val(3, 1), 81.81, 1e-12);
  const double secs = timer.seconds();
  ok = ok && secs < 1.0;
  report(1, ok, "pinned counterexample catalog reproduces every value", secs, detail);
}

void criterion_2_majorization_gap() {
  Timer timer;
  const double s3 = std::sqrt(3.0);
  const LogTuple z({0.5 + 0.95 / (2 * s3), 0.5 + 0.85 / (2 * s3), -1.0 - 0.9 / s3});
  const LogTuple c({0.5 + 1.0 / (2 * s3), -0.5 + 1.0 / (2 * s3), -1.0 / s3});
  double ez = 0, ec = 0, enz = 0, enc = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    ez += std::exp(z[i]);
    ec += std::exp(c[i]);
    enz += std::exp(-z[i]);
    enc += std::exp(-c[i]);
  }
  bool ok = std::fabs(ez - 4.49497) < 1e-5 && std::fabs(ec - 3.57137) < 1e-5 &&
            std::fabs(enz - 5.50607) < 1e-5 && std::fabs(enc - 3.47107) < 1e-5;
  const HypothesisReport rep = check_exp(z, c);
  ok = ok && rep.hypotheses_hold && rep.margins[0] > 0 && rep.margins[1] > 0;
  ok = ok && !majorizes(z, c) && (z[0] - c[0] < 0.0);
  const double secs = timer.seconds();
  ok = ok && secs < 1.0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "sums %.5f > %.5f, %.5f > %.5f, z1 - c1 = %.3e", ez, ec,
                enz, enc, z[0] - c[0]);
  report(2, ok, "exponential-sum conditions without majorization", secs, buf);
}

void criterion_3_theorem3_campaign() {
  Timer timer;
  std::size_t violations = 0, premises = 0, trials = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    CampaignConfig cfg;
    cfg.mode = CampaignMode::kTheorem3;
    cfg.n = 3;
    cfg.trials = 100000;
    cfg.seed = seed;
    const CampaignSummary s = run_theorem3_campaign(cfg);
    violations += s.violations.size();
    premises += s.premises_hold_count;
    trials += s.trial_count;
    min_margin = std::min(min_margin, s.min_conclusion_margin);
  }
  const double rate = static_cast<double>(premises) / static_cast<double>(trials);
  const double secs = timer.seconds();
  const bool ok =
      violations == 0 && rate >= 0.2 && min_margin >= -1e-9 && secs < 60.0;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "10^6 trials, %zu violations, premise rate %.1f%%, min margin %.2e",
                violations, 100.0 * rate, min_margin);
  report(3, ok, "main-theorem property campaign over seeds 1..10", secs, buf);
}

void criterion_4_lemma_grid() {
  Timer timer;
  const double phi_max = std::numbers::pi / 3.0;
  double max_f = -std::numeric_limits<double>::infinity();
  double min_dh = std::numeric_limits<double>::infinity();
  double fd_max_rel = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double r = 0.01 + (10.0 - 0.01) * i / 999.0;
    for (int k = 0; k <= 100; ++k) {
      const double phi = phi_max * k / 100.0;
      max_f = std::max(max_f, lemma_F(r, phi));
      const double dh = lemma_dh_dr(r, phi);
      min_dh = std::min(min_dh, dh);
      const double step = 1e-6 * r;
      const double fd = (lemma_h(r + step, phi) - lemma_h(r - step, phi)) / (2.0 * step);
      fd_max_rel = std::max(fd_max_rel, std::fabs(fd - dh) / std::fabs(dh));
    }
  }
  const double secs = timer.seconds();
  const bool ok = max_f <= 1e-12 && min_dh > 0.0 && fd_max_rel <= 1e-5 && secs < 10.0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "max F = %.2e, min dh/dr = %.2e, fd dev = %.2e", max_f,
                min_dh, fd_max_rel);
  report(4, ok, "monotonicity scan on the 1000x100 grid", secs, buf);
}

void criterion_5_lemma1_equivalence() {
  Timer timer;
  SplitMix64 rng(505);
  bool ok = true;
  for (int it = 0; it < 10000; ++it) {
    const double r = 0.05 + 5.0 * rng.next_unit();
    const double a = r * (0.5 + 0.5 * rng.next_unit());
    const double x = r * (0.5 + 0.5 * rng.next_unit());
    const auto e = lemma1_equivalence(a, x, r);
    if (e.exp_inequality != e.lead_le || e.lead_le != e.trail_le) ok = false;
  }
  report(5, ok, "three-way equivalence on 10^4 random leading-entry triples",
         timer.seconds(), "");
}

void criterion_6_rigidity_and_scaling() {
  Timer timer;
  SplitMix64 rng(606);
  bool ok = true;
  std::string detail;
  std::size_t qualified = 0;

  // equal-norm admissible pairs: exact copies and renormalized tiny
  // perturbations; equality must always be recognized and imply coincidence
  for (int it = 0; it < 10000; ++it) {
    const LogTuple z = support::random_sum_zero_triple(rng, 1.0);
    double nz = 0;
    for (std::size_t i = 0; i < 3; ++i) nz += z[i] * z[i];
    if (!(nz > 1e-6)) continue;
    std::vector<double> wv(z.values());
    if (it % 2 == 1) {
      const double eta = 1e-13 * (1.0 + 99.0 * rng.next_unit());  // up to 1e-11
      double mean = 0;
      for (auto& w : wv) {
        w += eta * rng.next_gaussian();
        mean += w;
      }
      mean /= 3.0;
      double nw = 0;
      for (auto& w : wv) {
        w -= mean;
        nw += w * w;
      }
      const double scale = std::sqrt(nz / nw);
      for (auto& w : wv) w *= scale;
    }
    const LogTuple w(wv);
    try {
      if (!equality_case(z, w)) {
        ok = false;
        detail = "equal-norm pair not recognized as the equality case";
        break;
      }
      ++qualified;
      for (std::size_t i = 0; i < 3; ++i)
        if (std::fabs(z[i] - w[i]) > 1e-8) {
          ok = false;
          detail = "coincidence beyond 1e-8";
        }
    } catch (const std::invalid_argument&) {
      // hypotheses rejected for this perturbation; precondition path
    }
  }
  ok = ok && qualified >= 5000;

  // strict-scaling pairs via scale_to_norm with k > 1
  for (int it = 0; it < 10000 && ok; ++it) {
    const LogTuple z = support::random_sum_zero_triple(rng, 1.0);
    double nz = 0;
    for (std::size_t i = 0; i < 3; ++i) nz += z[i] * z[i];
    if (!(nz > 1e-9)) continue;
    const double k0 = 1.0 + 0.001 + 2.0 * rng.next_unit();
    std::vector<double> cv(3);
    for (std::size_t i = 0; i < 3; ++i) cv[i] = k0 * z[i];
    const ScaledTuple st = scale_to_norm(z, LogTuple(cv));
    double ez = 0, et = 0, enz = 0, ent = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      ez += std::exp(z[i]);
      et += std::exp(st.t[i]);
      enz += std::exp(-z[i]);
      ent += std::exp(-st.t[i]);
    }
    if (!(st.k > 1.0) || !(ez < et) || !(enz < ent)) {
      ok = false;
      detail = "strict scaling inequality failed";
    }
  }
  char buf[120];
  std::snprintf(buf, sizeof buf, "%zu equality pairs qualified%s%s", qualified,
                detail.empty() ? "" : "; ", detail.c_str());
  report(6, ok, "equality rigidity and the strict radial-scaling inequalities",
         timer.seconds(), buf);
}

void criterion_7_cross_formulation() {
  Timer timer;
  SplitMix64 rng(707);
  bool ok = true;
  std::string detail;
  auto sign_agrees = [](double m1, double m2) {
    if (std::fabs(m1) <= 1e-9 && std::fabs(m2) <= 1e-9) return true;
    return (m1 > 0) == (m2 > 0);
  };
  for (int it = 0; it < 100000 && ok; ++it) {
    const PositiveTuple y = support::random_unit_product_tuple(rng, 3, 1.0);
    const PositiveTuple a = support::random_unit_product_tuple(rng, 3, 1.0);
    const HypothesisReport rt = check_tuple3(y, a);
    const HypothesisReport ri = check_inverse_sum(y, a);
    const HypothesisReport rm = check_means(y, a);
    const HypothesisReport rx = check_exp(log_tuple(y), log_tuple(a));
    std::vector<double> sy(3), sa(3);
    for (std::size_t i = 0; i < 3; ++i) {
      sy[i] = std::sqrt(y[i]);
      sa[i] = std::sqrt(a[i]);
    }
    const HypothesisReport rq = check_squared(PositiveTuple(sy), PositiveTuple(sa));

    const Mat r1 = support::random_rotation(rng);
    const SymMat p1 = sym_part(r1 * SymMat::diagonal(y.values()).full() * r1.transpose());
    const Mat r2 = support::random_rotation(rng);
    const SymMat p2 = sym_part(r2 * SymMat::diagonal(a.values()).full() * r2.transpose());
    const HypothesisReport rc = check_charpol(p1, p2);
    const HypothesisReport rf = check_frobenius(p1, p2);

    const bool holds = rt.hypotheses_hold;
    if (ri.hypotheses_hold != holds || rm.hypotheses_hold != holds ||
        rx.hypotheses_hold != holds || rq.hypotheses_hold != holds ||
        rc.hypotheses_hold != holds) {
      ok = false;
      detail = "hypotheses_hold disagreement at trial " + std::to_string(it);
    }
    // frobenius checks the squared-variable form: lift x = sqrt(eigenvalues)
    std::vector<double> y2(3), a2(3);
    for (std::size_t i = 0; i < 3; ++i) {
      y2[i] = y[i] * y[i];
      a2[i] = a[i] * a[i];
    }
    const HypothesisReport rq2 = check_elem_sym(PositiveTuple(y2), PositiveTuple(a2));
    if (rf.hypotheses_hold != rq2.hypotheses_hold) {
      ok = false;
      detail = "frobenius/squared disagreement at trial " + std::to_string(it);
    }
    if (!sign_agrees(rt.conclusion_margin, ri.conclusion_margin) ||
        !sign_agrees(rt.conclusion_margin, rm.conclusion_margin) ||
        !sign_agrees(rt.conclusion_margin, rx.conclusion_margin) ||
        !sign_agrees(rt.conclusion_margin, 4.0 * rq.conclusion_margin) ||
        !sign_agrees(rt.conclusion_margin, rc.conclusion_margin) ||
        !sign_agrees(rt.conclusion_margin, rf.conclusion_margin)) {
      ok = false;
      detail = "conclusion sign disagreement at trial " + std::to_string(it);
    }
  }
  report(7, ok, "cross-formulation agreement on 10^5 equal-product pairs",
         timer.seconds(), detail);
}

void criterion_8_matrix_layer() {
  Timer timer;
  SplitMix64 rng(808);
  double w_explog = 0, w_logsq = 0, w_tr = 0, w_cof = 0, w_det = 0, w_orth = 0,
         w_recon = 0;
  const double half = 0.5 * std::log(1e6);
  for (int it = 0; it < 10000; ++it) {
    std::vector<double> lam(3);
    for (auto& l : lam) l = std::exp((2.0 * rng.next_unit() - 1.0) * half);
    const Mat r = support::random_rotation(rng);
    const SymMat p = sym_part(r * SymMat::diagonal(lam).full() * r.transpose());
    const EigenDecomp d = sym_eig(p);
    const SymMat l = log_spd(p);

    Mat recon = oracle::expm(l.full());
    recon -= p.full();
    w_explog = std::max(w_explog, std::sqrt(frobenius_sq(recon) / frobenius_sq(p)));

    double want = 0;
    for (double x : d.eigenvalues) want += std::log(x) * std::log(x);
    w_logsq = std::max(w_logsq,
                       std::fabs(frobenius_sq(l) - want) / std::max(1.0, std::fabs(want)));

    const auto e = elem_sym_all(PositiveTuple(d.eigenvalues));
    w_tr = std::max(w_tr, std::fabs(p.trace() - e[1]) / std::fabs(e[1]));
    w_cof = std::max(w_cof, std::fabs(trace_cof(p.full()) - e[2]) / std::fabs(e[2]));
    w_det = std::max(w_det, std::fabs(p.det() - e[3]) / std::fabs(e[3]));

    const Mat z = support::random_posdet(rng, 1e6);
    const PolarDecomp pd = polar(z);
    Mat g = pd.unitary.transpose() * pd.unitary;
    g -= Mat::identity(3);
    w_orth = std::max(w_orth, std::sqrt(frobenius_sq(g)));
    Mat rc = pd.unitary * pd.hermitian.full();
    rc -= z;
    w_recon = std::max(w_recon, std::sqrt(frobenius_sq(rc) / frobenius_sq(z)));
  }
  const bool ok = w_explog <= 1e-10 && w_logsq <= 1e-10 && w_tr <= 1e-10 &&
                  w_cof <= 1e-10 && w_det <= 1e-10 && w_orth <= 1e-10 && w_recon <= 1e-10;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "exp.log %.1e, logsq %.1e, tr %.1e, trcof %.1e, det %.1e, orth %.1e, "
                "recon %.1e",
                w_explog, w_logsq, w_tr, w_cof, w_det, w_orth, w_recon);
  report(8, ok, "matrix layer on 10^4 SPD draws up to condition 1e6", timer.seconds(),
         buf);
}

void criterion_9_optimality() {
  Timer timer;
  CampaignConfig cfg;
  cfg.mode = CampaignMode::kOptimality;
  cfg.n = 3;
  cfg.trials = 100;
  cfg.rot_samples = 10000;
  cfg.seed = 909;
  const CampaignSummary s = run_optimality_campaign(cfg);
  const double secs = timer.seconds();
  const double skip_rate =
      static_cast<double>(s.skipped_total) /
      static_cast<double>(std::max<std::size_t>(1, s.skipped_total + s.admissible_total));
  const bool ok = s.violations.empty() && s.min_conclusion_margin >= -1e-8 &&
                  s.admissible_total > 0 && secs < 120.0;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "min margin %.2e, skip rate %.1f%%, low-coverage trials %zu",
                s.min_conclusion_margin, 100.0 * skip_rate, s.low_coverage_trials);
  report(9, ok, "polar-factor optimality over 100 x 10^4 rotation samples", secs, buf);
}

void criterion_10_conjecture_campaigns() {
  Timer timer;
  bool ok = true;
  std::string detail;
  for (std::size_t n : {4, 5, 6}) {
    CampaignConfig cfg;
    cfg.mode = CampaignMode::kConjecture;
    cfg.n = n;
    cfg.trials = 100000;
    cfg.seed = 100 * n + 1;
    const CampaignSummary s1 = run_conjecture_campaign(cfg);
    const CampaignSummary s2 = run_conjecture_campaign(cfg);
    if (!s1.violations.empty()) {
      ok = false;
      detail += "violation at n = " + std::to_string(n) + " (reportable finding); ";
    }
    if (s1.to_json_string() != s2.to_json_string()) {
      ok = false;
      detail += "summary not byte-identical at n = " + std::to_string(n) + "; ";
    }
  }
  report(10, ok, "conjecture campaigns n in {4,5,6}, 10^5 trials, reproducible",
         timer.seconds(), detail);
}

void criterion_11_geodesic() {
  Timer timer;
  SplitMix64 rng(1111);
  bool ok = true;
  for (int it = 0; it < 1000 && ok; ++it) {
    const Mat f = support::random_posdet(rng, 1e3);
    const double base = geodesic_dist_iso_sq(f);
    for (double alpha : {0.1, 1.0, 10.0}) {
      Mat scaled = f;
      scaled *= alpha;
      const double got = geodesic_dist_iso_sq(scaled);
      if (std::fabs(got - base) > 1e-10 * std::max(1.0, base)) ok = false;
    }
  }
  const double e = std::exp(1.0);
  const double pinned = geodesic_dist_iso_sq(SymMat::diagonal({e, 1.0, 1.0 / e}).full());
  ok = ok && std::fabs(pinned - 2.0) <= 1e-12 * 2.0;
  char buf[80];
  std::snprintf(buf, sizeof buf, "diag(e,1,1/e) -> %.15f", pinned);
  report(11, ok, "geodesic distance: scale invariance and the pinned diagonal",
         timer.seconds(), buf);
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  Timer total;
  criterion_1_pinned_counterexamples();
  criterion_2_majorization_gap();
  criterion_3_theorem3_campaign();
  criterion_4_lemma_grid();
  criterion_5_lemma1_equivalence();
  criterion_6_rigidity_and_scaling();
  criterion_7_cross_formulation();
  criterion_8_matrix_layer();
  criterion_9_optimality();
  criterion_10_conjecture_campaigns();
  criterion_11_geodesic();
  std::printf("%d of 11 criteria failed (%.1f s total)\n", failures, total.seconds());
  return failures;
}
