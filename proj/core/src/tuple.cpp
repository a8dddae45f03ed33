#include "ssli/tuple.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include <json.hpp>

namespace ssli {

namespace {

void sort_non_increasing(std::vector<double>& v) {
  std::sort(v.begin(), v.end(), std::greater<double>());
}

std::vector<double> parse_number_array(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("tuple JSON parse error: ") + e.what());
  }
  if (!j.is_array()) throw std::invalid_argument("tuple JSON must be an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_number()) throw std::invalid_argument("tuple JSON must be an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

std::string dump_number_array(const std::vector<double>& v) {
  return nlohmann::json(v).dump();
}

}  // namespace

PositiveTuple::PositiveTuple(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) throw std::invalid_argument("PositiveTuple needs length >= 2");
  for (double v : values_) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::invalid_argument("PositiveTuple entries must be finite and > 0");
  }
  sort_non_increasing(values_);
}

std::string PositiveTuple::to_json_string() const { return dump_number_array(values_); }

PositiveTuple PositiveTuple::from_json_string(const std::string& text) {
  return PositiveTuple(parse_number_array(text));
}

LogTuple::LogTuple(std::vector<double> values) : values_(std::move(values)), sum_(0.0) {
  if (values_.size() < 2) throw std::invalid_argument("LogTuple needs length >= 2");
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("LogTuple entries must be finite");
  }
  sort_non_increasing(values_);
  for (double v : values_) sum_ += v;
}

std::string LogTuple::to_json_string() const { return dump_number_array(values_); }

LogTuple LogTuple::from_json_string(const std::string& text) {
  return LogTuple(parse_number_array(text));
}

PositiveTuple exp_tuple(const LogTuple& z) {
  std::vector<double> v(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) v[i] = std::exp(z[i]);
  return PositiveTuple(std::move(v));
}

LogTuple log_tuple(const PositiveTuple& t) {
  std::vector<double> v(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) v[i] = std::log(t[i]);
  return LogTuple(std::move(v));
}

std::vector<double> elem_sym_all(const PositiveTuple& t) {
  // Coefficients of prod(X + t_i), built one factor at a time; e_k is the
  // coefficient of X^{n-k}. All terms are positive, so no cancellation.
  const std::size_t n = t.size();
  std::vector<double> e(n + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = std::min(i + 1, n); k >= 1; --k) e[k] += t[i] * e[k - 1];
  }
  return e;
}

double elem_sym(std::size_t k, const PositiveTuple& t) {
  if (k > t.size())
    throw std::invalid_argument("elem_sym: k must lie in [0, n]");
  return elem_sym_all(t)[k];
}

MeanSet means(const PositiveTuple& t) {
  const double n = static_cast<double>(t.size());
  double sum = 0.0, inv_sum = 0.0, log_sum = 0.0, sq_sum = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    sum += t[i];
    inv_sum += 1.0 / t[i];
    log_sum += std::log(t[i]);
    sq_sum += t[i] * t[i];
  }
  MeanSet m;
  m.arithmetic = sum / n;
  m.harmonic = n / inv_sum;
  m.geometric = std::exp(log_sum / n);  // (e_n)^{1/n} without overflow
  m.quadratic = std::sqrt(sq_sum / n);
  return m;
}

bool majorizes(const LogTuple& z, const LogTuple& c) {
  if (z.size() != c.size()) throw std::invalid_argument("majorizes: length mismatch");
  if (std::fabs(z.sum() - c.sum()) > kMajorizationSumTol)
    throw std::invalid_argument("majorizes: sums differ; majorization undefined");
  double pz = 0.0, pc = 0.0;
  for (std::size_t k = 0; k + 1 < z.size(); ++k) {
    pz += z[k];
    pc += c[k];
    if (pz < pc) return false;
  }
  return true;
}

bool karamata_dominance_sumsq(const LogTuple& z, const LogTuple& c) {
  if (z.size() != c.size())
    throw std::invalid_argument("karamata_dominance_sumsq: length mismatch");
  double sz = 0.0, sc = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    sz += z[i] * z[i];
    sc += c[i] * c[i];
  }
  return sz >= sc;
}

double sum_sq_log(const PositiveTuple& t) {
  double s = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    double l = std::log(t[i]);
    s += l * l;
  }
  return s;
}

}  // namespace ssli
