#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace bootcov {

/// Exact rational with 64-bit numerator/denominator. Always normalized:
/// den > 0 and gcd(|num|, den) == 1, so equality is structural.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  bool is_integer() const { return den_ == 1; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return Rational(-num_, den_); }

  bool operator==(const Rational& o) const = default;
  // Cross-multiplication in 128-bit so near-equal ratios never misorder.
  std::strong_ordering operator<=>(const Rational& o) const;

  std::string str() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace bootcov
