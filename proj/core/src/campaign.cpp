#include "ssli/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "ssli/checks.hpp"
#include "ssli/matrix.hpp"

namespace ssli {

namespace {

struct ModeName {
  CampaignMode m;
  const char* name;
};

constexpr ModeName kModeNames[] = {
    {CampaignMode::kConjecture, "conjecture"},
    {CampaignMode::kTheorem3, "theorem3"},
    {CampaignMode::kOptimality, "optimality"},
};

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_hex(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%a", v);
  return buf;
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SSLI_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? hc : 1;
}

}  // namespace

const char* campaign_mode_name(CampaignMode m) {
  for (const auto& e : kModeNames)
    if (e.m == m) return e.name;
  return "?";
}

std::optional<CampaignMode> campaign_mode_from_name(std::string_view name) {
  for (const auto& e : kModeNames)
    if (name == e.name) return e.m;
  return std::nullopt;
}

void CampaignConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("campaign: trials must be >= 1");
  // 50 * 8 sigma stays far below the exp() overflow bound of ~709
  if (!(spread > 0.0) || !(spread <= 50.0))
    throw std::invalid_argument("campaign: spread must lie in (0, 50]");
  if (n < 2) throw std::invalid_argument("campaign: n must be >= 2");
  if ((mode == CampaignMode::kTheorem3 || mode == CampaignMode::kOptimality) && n != 3)
    throw std::invalid_argument("campaign: this mode requires n = 3");
  if (mode == CampaignMode::kOptimality && rot_samples < 1)
    throw std::invalid_argument("campaign: rot_samples must be >= 1");
}

std::pair<PositiveTuple, PositiveTuple> sample_equal_product_pair(std::size_t n,
                                                                  SplitMix64& rng,
                                                                  double spread) {
  auto draw = [&]() {
    std::vector<double> logs(n);
    double mean = 0.0;
    for (auto& l : logs) {
      l = spread * rng.next_gaussian();
      mean += l;
    }
    mean /= static_cast<double>(n);
    for (auto& l : logs) l = std::exp(l - mean);  // product shifted to 1
    return PositiveTuple(std::move(logs));
  };
  PositiveTuple y = draw();
  PositiveTuple a = draw();
  return {std::move(y), std::move(a)};
}

namespace {

bool strict_premises(const HypothesisReport& rep) {
  if (!rep.hypotheses_hold) return false;
  for (double m : rep.margins)
    if (m <= kViolationTol) return false;
  return true;
}

TrialRecord tuple_trial_record(std::size_t t, const PositiveTuple& y,
                               const PositiveTuple& a, const HypothesisReport& rep) {
  TrialRecord rec;
  rec.trial = t;
  rec.y = y.values();
  rec.a = a.values();
  rec.margins = rep.margins;
  rec.eq_defect = rep.equality_defects.empty() ? 0.0 : rep.equality_defects[0];
  rec.premises_hold = rep.hypotheses_hold;
  rec.conclusion_margin = rep.conclusion_margin;
  rec.violation = strict_premises(rep) && rep.conclusion_margin < -kViolationTol;
  return rec;
}

TrialRecord conjecture_trial(const CampaignConfig& cfg, std::size_t t) {
  SplitMix64 rng(mix_seed(cfg.seed, t));
  auto [y, a] = sample_equal_product_pair(cfg.n, rng, cfg.spread);
  return tuple_trial_record(t, y, a, check_elem_sym(y, a));
}

TrialRecord theorem3_trial(const CampaignConfig& cfg, std::size_t t) {
  SplitMix64 rng(mix_seed(cfg.seed, t));
  std::vector<double> logs(3);
  double mean = 0.0;
  for (auto& l : logs) {
    l = cfg.spread * rng.next_gaussian();
    mean += l;
  }
  mean /= 3.0;
  for (auto& l : logs) l = std::exp(l - mean);
  const PositiveTuple a(std::move(logs));

  // Move mass outward in log coordinates: raise the largest entry, lower the
  // smallest, and let the middle entry restore the product exactly. This
  // keeps e3 fixed while e1 and e2 almost always grow, so the premises hold
  // for most proposals (pure independent pairs essentially never satisfy
  // both dominance lines with equal products).
  const double up = std::fabs(rng.next_gaussian()) * cfg.spread;
  const double down = -std::fabs(rng.next_gaussian()) * cfg.spread;
  const PositiveTuple y({a[0] * std::exp(up), a[1] * std::exp(-(up + down)),
                         a[2] * std::exp(down)});
  return tuple_trial_record(t, y, a, check_tuple3(y, a));
}

TrialRecord optimality_trial(const CampaignConfig& cfg, std::size_t t) {
  SplitMix64 rng(mix_seed(cfg.seed, t));
  auto random_rotation = [&]() {
    return rotation_from_quaternion(rng.next_gaussian(), rng.next_gaussian(),
                                    rng.next_gaussian(), rng.next_gaussian());
  };

  // Z = R1 diag(sigma) R2^T with log-uniform singular values, cond <= 1e3.
  const Mat r1 = random_rotation();
  const Mat r2 = random_rotation();
  const double half_width = 0.5 * std::log(1e3);
  std::vector<double> sigma(3);
  for (auto& s : sigma) s = std::exp((2.0 * rng.next_unit() - 1.0) * half_width);
  const Mat z = r1 * SymMat::diagonal(sigma).full() * r2.transpose();

  const PolarDecomp pd = polar(z);
  const double ref = frobenius_sq(log_spd(pd.hermitian));

  TrialRecord rec;
  rec.trial = t;
  rec.y.resize(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rec.y[static_cast<std::size_t>(3 * i + j)] = z(i, j);

  double attain_defect;
  try {
    const double attained = frobenius_sq(log_real_diagonalizable(pd.unitary.transpose() * z));
    attain_defect = -std::fabs(attained - ref);
  } catch (const std::domain_error&) {
    attain_defect = -std::numeric_limits<double>::infinity();
  }

  double min_full = std::numeric_limits<double>::infinity();
  double min_sym = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < cfg.rot_samples; ++s) {
    const Mat q = random_rotation();
    Mat l(3);
    try {
      l = log_real_diagonalizable(q.transpose() * z);
    } catch (const std::domain_error&) {
      ++rec.skipped;
      continue;
    }
    ++rec.admissible;
    min_full = std::min(min_full, frobenius_sq(l));
    min_sym = std::min(min_sym, frobenius_sq(sym_part(l)));
  }

  rec.margins = {min_full - ref, min_sym - ref, attain_defect};
  rec.premises_hold = true;
  rec.conclusion_margin = std::min(min_full - ref, min_sym - ref);
  rec.violation = attain_defect < -kOptimalityTol ||
                  (rec.admissible > 0 && (min_full - ref < -kOptimalityTol ||
                                          min_sym - ref < -kOptimalityTol));
  return rec;
}

std::string csv_header(std::size_t margin_count) {
  std::string h = "trial,premises_hold";
  for (std::size_t i = 1; i <= margin_count; ++i) h += ",margin_" + std::to_string(i);
  h += ",eq_defect,conclusion_margin,violation\n";
  return h;
}

std::string csv_row(const TrialRecord& rec) {
  std::string row = std::to_string(rec.trial);
  row += rec.premises_hold ? ",1" : ",0";
  for (double m : rec.margins) {
    row += ',';
    row += fmt_double(m);
  }
  row += ',';
  row += fmt_double(rec.eq_defect);
  row += ',';
  row += fmt_double(rec.conclusion_margin);
  row += rec.violation ? ",1" : ",0";
  row += '\n';
  return row;
}

template <typename TrialFn>
CampaignSummary run_campaign_impl(const CampaignConfig& cfg, std::ostream* csv,
                                  std::size_t margin_count, TrialFn&& trial_fn) {
  cfg.validate();
  const auto t0 = std::chrono::steady_clock::now();

  struct Shard {
    std::size_t trial_count = 0;
    std::size_t premises_hold_count = 0;
    std::vector<TrialRecord> violations;
    double min_margin = std::numeric_limits<double>::infinity();
    std::size_t admissible = 0, skipped = 0, low_coverage = 0;
    std::string csv;
  };

  const unsigned nthreads =
      static_cast<unsigned>(std::min<std::size_t>(resolve_threads(cfg.threads), cfg.trials));
  std::vector<Shard> shards(nthreads);

  auto worker = [&](unsigned s) {
    Shard& sh = shards[s];
    // contiguous trial ranges; per-trial seeding makes any split equivalent
    const std::size_t lo = cfg.trials * s / nthreads;
    const std::size_t hi = cfg.trials * (s + 1) / nthreads;
    for (std::size_t t = lo; t < hi; ++t) {
      const TrialRecord rec = trial_fn(cfg, t);
      ++sh.trial_count;
      if (rec.premises_hold) {
        ++sh.premises_hold_count;
        sh.min_margin = std::min(sh.min_margin, rec.conclusion_margin);
      }
      sh.admissible += rec.admissible;
      sh.skipped += rec.skipped;
      if (rec.skipped > rec.admissible) ++sh.low_coverage;
      if (rec.violation) sh.violations.push_back(rec);
      if (csv != nullptr) sh.csv += csv_row(rec);
    }
  };

  if (nthreads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned s = 0; s < nthreads; ++s) pool.emplace_back(worker, s);
    for (auto& th : pool) th.join();
  }

  CampaignSummary sum;
  sum.config = cfg;
  if (csv != nullptr) *csv << csv_header(margin_count);
  for (const Shard& sh : shards) {
    sum.trial_count += sh.trial_count;
    sum.premises_hold_count += sh.premises_hold_count;
    sum.min_conclusion_margin = std::min(sum.min_conclusion_margin, sh.min_margin);
    sum.admissible_total += sh.admissible;
    sum.skipped_total += sh.skipped;
    sum.low_coverage_trials += sh.low_coverage;
    sum.violations.insert(sum.violations.end(), sh.violations.begin(), sh.violations.end());
    if (csv != nullptr) *csv << sh.csv;
  }
  if (csv != nullptr) csv->flush();

  sum.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return sum;
}

}  // namespace

CampaignSummary run_conjecture_campaign(const CampaignConfig& cfg, std::ostream* csv) {
  if (cfg.mode != CampaignMode::kConjecture)
    throw std::invalid_argument("run_conjecture_campaign: config mode mismatch");
  return run_campaign_impl(cfg, csv, cfg.n - 1, conjecture_trial);
}

CampaignSummary run_theorem3_campaign(const CampaignConfig& cfg, std::ostream* csv) {
  if (cfg.mode != CampaignMode::kTheorem3)
    throw std::invalid_argument("run_theorem3_campaign: config mode mismatch");
  return run_campaign_impl(cfg, csv, 2, theorem3_trial);
}

CampaignSummary run_optimality_campaign(const CampaignConfig& cfg, std::ostream* csv) {
  if (cfg.mode != CampaignMode::kOptimality)
    throw std::invalid_argument("run_optimality_campaign: config mode mismatch");
  return run_campaign_impl(cfg, csv, 3, optimality_trial);
}

double CampaignSummary::premise_holding_rate() const {
  return trial_count == 0
             ? 0.0
             : static_cast<double>(premises_hold_count) / static_cast<double>(trial_count);
}

namespace {

nlohmann::ordered_json trial_json(const TrialRecord& rec) {
  nlohmann::ordered_json j;
  j["trial"] = rec.trial;
  j["y"] = rec.y;
  j["a"] = rec.a;
  nlohmann::ordered_json yh = nlohmann::ordered_json::array();
  for (double v : rec.y) yh.push_back(fmt_hex(v));
  nlohmann::ordered_json ah = nlohmann::ordered_json::array();
  for (double v : rec.a) ah.push_back(fmt_hex(v));
  j["y_hex"] = yh;
  j["a_hex"] = ah;
  j["margins"] = rec.margins;
  j["eq_defect"] = rec.eq_defect;
  j["premises_hold"] = rec.premises_hold;
  j["conclusion_margin"] = rec.conclusion_margin;
  j["violation"] = rec.violation;
  j["admissible"] = rec.admissible;
  j["skipped"] = rec.skipped;
  return j;
}

std::vector<double> parse_values(const nlohmann::json& j, const char* dec_key,
                                 const char* hex_key) {
  std::vector<double> out;
  if (j.contains(hex_key) && j[hex_key].is_array() && !j[hex_key].empty()) {
    for (const auto& s : j[hex_key]) out.push_back(std::strtod(s.get<std::string>().c_str(), nullptr));
  } else if (j.contains(dec_key)) {
    for (const auto& v : j[dec_key]) out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

std::string CampaignSummary::to_json_string() const {
  nlohmann::ordered_json j;
  nlohmann::ordered_json c;
  c["mode"] = campaign_mode_name(config.mode);
  c["n"] = config.n;
  c["trials"] = config.trials;
  c["seed"] = config.seed;
  c["spread"] = config.spread;
  c["rot_samples"] = config.rot_samples;
  c["threads"] = config.threads;
  j["config"] = c;
  nlohmann::ordered_json tols;
  tols["checker"] = kDefaultTol;
  tols["violation"] = kViolationTol;
  tols["optimality"] = kOptimalityTol;
  j["tolerances"] = tols;
  j["trials_run"] = trial_count;
  j["premises_hold_count"] = premises_hold_count;
  j["premise_holding_rate"] = premise_holding_rate();
  j["violation_count"] = violations.size();
  nlohmann::ordered_json v = nlohmann::ordered_json::array();
  for (const auto& rec : violations) v.push_back(trial_json(rec));
  j["violations"] = v;
  if (premises_hold_count > 0)
    j["min_conclusion_margin_over_premise_holding"] = min_conclusion_margin;
  else
    j["min_conclusion_margin_over_premise_holding"] = nullptr;
  j["admissible_total"] = admissible_total;
  j["skipped_total"] = skipped_total;
  j["low_coverage_trials"] = low_coverage_trials;
  return j.dump();
}

HypothesisReport replay_trial(const TrialRecord& rec) {
  const PositiveTuple y(rec.y);
  const PositiveTuple a(rec.a);
  return check_elem_sym(y, a);
}

std::string trial_to_json_string(const TrialRecord& rec) { return trial_json(rec).dump(); }

TrialRecord trial_from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("trial JSON parse error: ") + e.what());
  }
  TrialRecord rec;
  rec.trial = j.value("trial", std::size_t{0});
  rec.y = parse_values(j, "y", "y_hex");
  rec.a = parse_values(j, "a", "a_hex");
  if (j.contains("margins")) rec.margins = j["margins"].get<std::vector<double>>();
  rec.eq_defect = j.value("eq_defect", 0.0);
  rec.premises_hold = j.value("premises_hold", false);
  rec.conclusion_margin = j.value("conclusion_margin", 0.0);
  rec.violation = j.value("violation", false);
  rec.admissible = j.value("admissible", std::size_t{0});
  rec.skipped = j.value("skipped", std::size_t{0});
  return rec;
}

}  // namespace ssli
