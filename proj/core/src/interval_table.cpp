#include "bootcov/interval_table.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "bootcov/error.hpp"
#include "bootcov/stats.hpp"

namespace bootcov {

IntervalTable::IntervalTable(long n, std::vector<IntervalRow> rows) : n_(n) {
  if (n < 1) throw DomainError("interval table: n must be at least 1");
  std::vector<int> seen(static_cast<std::size_t>(n + 1), 0);
  for (const auto& r : rows) {
    if (r.y < 0 || r.y > n) throw DomainError(fmt::format("interval table: y={} outside 0..{}", r.y, n));
    if (seen[r.y]++) throw DomainError(fmt::format("interval table: duplicate row for y={}", r.y));
    if (!(r.lower <= r.upper)) throw DomainError(fmt::format("interval table: lower > upper at y={}", r.y));
  }
  std::string missing;
  for (long y = 0; y <= n; ++y)
    if (!seen[y]) missing += (missing.empty() ? "" : ",") + std::to_string(y);
  if (!missing.empty()) throw DomainError("interval table: missing rows for y=" + missing);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.y < b.y; });
  rows_ = std::move(rows);
}

IntervalTable IntervalTable::read_csv(std::istream& in, long n) {
  std::string line;
  if (!std::getline(in, line)) throw DomainError("interval table: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "y,lower,upper") throw DomainError("interval table: expected header y,lower,upper");
  std::vector<IntervalRow> rows;
  long lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string a, b, c;
    if (!std::getline(ls, a, ',') || !std::getline(ls, b, ',') || !std::getline(ls, c))
      throw DomainError(fmt::format("interval table: malformed line {}", lineno));
    try {
      std::size_t pos = 0;
      IntervalRow r;
      r.y = std::stol(a, &pos);
      r.lower = std::stod(b);
      r.upper = std::stod(c);
      rows.push_back(r);
    } catch (const std::logic_error&) {
      throw DomainError(fmt::format("interval table: unparsable number on line {}", lineno));
    }
  }
  return IntervalTable(n, std::move(rows));
}

IntervalTable IntervalTable::read_csv_file(const std::string& path, long n) {
  std::ifstream in(path);
  if (!in) throw DomainError("interval table: cannot open " + path);
  return read_csv(in, n);
}

void IntervalTable::write_csv(std::ostream& out) const {
  out << "y,lower,upper\n";
  for (const auto& r : rows_) out << fmt::format("{},{:.17g},{:.17g}\n", r.y, r.lower, r.upper);
}

std::vector<double> IntervalTable::breakpoints() const {
  std::vector<double> b;
  for (const auto& r : rows_) {
    if (r.lower > 0.0 && r.lower < 1.0) b.push_back(r.lower);
    if (r.upper > 0.0 && r.upper < 1.0) b.push_back(r.upper);
  }
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return b;
}

namespace {

double z_for(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0,1)");
  return normal_quantile(1.0 - alpha / 2.0);
}

}  // namespace

IntervalTable wald_table(long n, double alpha, bool clip) {
  const double z = z_for(alpha);
  std::vector<IntervalRow> rows;
  for (long y = 0; y <= n; ++y) {
    const double ph = static_cast<double>(y) / static_cast<double>(n);
    const double h = z * std::sqrt(ph * (1.0 - ph) / static_cast<double>(n));
    double lo = ph - h, hi = ph + h;
    if (clip) {
      lo = std::max(0.0, lo);
      hi = std::min(1.0, hi);
    }
    rows.push_back({y, lo, hi});
  }
  return IntervalTable(n, std::move(rows));
}

IntervalTable wilson_table(long n, double alpha) {
  const double z = z_for(alpha);
  const double z2 = z * z;
  const double dn = static_cast<double>(n);
  std::vector<IntervalRow> rows;
  for (long y = 0; y <= n; ++y) {
    const double ph = static_cast<double>(y) / dn;
    const double center = (ph + z2 / (2.0 * dn)) / (1.0 + z2 / dn);
    const double h = z / (1.0 + z2 / dn) * std::sqrt(ph * (1.0 - ph) / dn + z2 / (4.0 * dn * dn));
    rows.push_back({y, std::max(0.0, center - h), std::min(1.0, center + h)});
  }
  return IntervalTable(n, std::move(rows));
}

IntervalTable agresti_coull_table(long n, double alpha) {
  const double z = z_for(alpha);
  const double z2 = z * z;
  const double nt = static_cast<double>(n) + z2;
  std::vector<IntervalRow> rows;
  for (long y = 0; y <= n; ++y) {
    const double pt = (static_cast<double>(y) + z2 / 2.0) / nt;
    const double h = z * std::sqrt(pt * (1.0 - pt) / nt);
    rows.push_back({y, std::max(0.0, pt - h), std::min(1.0, pt + h)});
  }
  return IntervalTable(n, std::move(rows));
}

IntervalTable clopper_pearson_table(long n, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0,1)");
  std::vector<IntervalRow> rows;
  for (long y = 0; y <= n; ++y) {
    const double dy = static_cast<double>(y);
    const double lo = y == 0 ? 0.0 : beta_quantile(alpha / 2.0, dy, static_cast<double>(n - y + 1));
    const double hi = y == n ? 1.0 : beta_quantile(1.0 - alpha / 2.0, dy + 1.0, static_cast<double>(n - y));
    rows.push_back({y, lo, hi});
  }
  return IntervalTable(n, std::move(rows));
}

double coverage_table(double p, const IntervalTable& table) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("p must lie in [0,1]");
  double s = 0.0;
  for (const auto& r : table.rows())
    if (r.lower <= p && p <= r.upper) s += binom_pmf(r.y, table.n(), p);
  return s;
}

double el_table(double p, const IntervalTable& table) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("p must lie in [0,1]");
  double s = 0.0;
  for (const auto& r : table.rows()) s += (r.upper - r.lower) * binom_pmf(r.y, table.n(), p);
  return s;
}

}  // namespace bootcov
