#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ssli {

/// Ordered tuple of strictly positive reals, length >= 2, kept sorted
/// non-increasing. All downstream operations may assume sortedness.
class PositiveTuple {
 public:
  explicit PositiveTuple(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }

  std::string to_json_string() const;
  static PositiveTuple from_json_string(const std::string& text);

 private:
  std::vector<double> values_;
};

/// Tuple of reals sorted non-increasing, with its sum cached at construction.
class LogTuple {
 public:
  explicit LogTuple(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }
  double sum() const { return sum_; }

  std::string to_json_string() const;
  static LogTuple from_json_string(const std::string& text);

 private:
  std::vector<double> values_;
  double sum_;
};

/// Entrywise transforms. exp/log are monotone, so sortedness carries over.
PositiveTuple exp_tuple(const LogTuple& z);
LogTuple log_tuple(const PositiveTuple& t);

/// e_k(t) via the coefficient recurrence for prod(X + t_i); e_0 = 1,
/// e_n = product of all entries. Throws std::invalid_argument for k > n.
double elem_sym(std::size_t k, const PositiveTuple& t);

/// All of e_0..e_n in one O(n^2) pass.
std::vector<double> elem_sym_all(const PositiveTuple& t);

struct MeanSet {
  double arithmetic;
  double harmonic;
  double geometric;
  double quadratic;
};

MeanSet means(const PositiveTuple& t);

/// Sorted-partial-sum dominance with equal totals. The equal-sum
/// precondition is checked to absolute 1e-9 on the sums and violations are
/// argument errors; dominance rows are plain comparisons.
bool majorizes(const LogTuple& z, const LogTuple& c);

/// sum z_i^2 >= sum c_i^2 -- the Karamata conclusion for f(t) = t^2.
bool karamata_dominance_sumsq(const LogTuple& z, const LogTuple& c);

/// sum of (log t_i)^2.
double sum_sq_log(const PositiveTuple& t);

inline constexpr double kMajorizationSumTol = 1e-9;

}  // namespace ssli
