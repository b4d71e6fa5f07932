#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bootcov {

/// A deterministic interval [lower(y), upper(y)] for each outcome y = 0..n.
struct IntervalRow {
  long y = 0;
  double lower = 0.0;
  double upper = 0.0;
};

class IntervalTable {
 public:
  IntervalTable() = default;
  /// Rows may come in any order; throws DomainError when y values are
  /// missing for 0..n (the message lists them), duplicated, out of range,
  /// or when lower > upper.
  IntervalTable(long n, std::vector<IntervalRow> rows);

  long n() const { return n_; }
  const std::vector<IntervalRow>& rows() const { return rows_; }
  const IntervalRow& row(long y) const { return rows_.at(static_cast<std::size_t>(y)); }

  /// CSV with header `y,lower,upper`.
  static IntervalTable read_csv(std::istream& in, long n);
  static IntervalTable read_csv_file(const std::string& path, long n);
  void write_csv(std::ostream& out) const;

  /// All finite endpoints strictly inside (0,1).
  std::vector<double> breakpoints() const;

 private:
  long n_ = 0;
  std::vector<IntervalRow> rows_;
};

/// p-hat +- z sqrt(p-hat(1-p-hat)/n), optionally clipped to [0,1].
IntervalTable wald_table(long n, double alpha, bool clip = false);
IntervalTable wilson_table(long n, double alpha);
IntervalTable agresti_coull_table(long n, double alpha);
IntervalTable clopper_pearson_table(long n, double alpha);

double coverage_table(double p, const IntervalTable& table);
double el_table(double p, const IntervalTable& table);

}  // namespace bootcov
