#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers over arbitrary-precision integers.
 *
 * Values are always stored fully reduced with a positive denominator, so
 * equality is plain member comparison and never goes through floating point.
 */

#include <cmnp/numeric.hpp>

#include <compare>
#include <iosfwd>
#include <string>

namespace cmnp {

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Integer n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n) : num_(n), den_(1) {}           // NOLINT(google-explicit-constructor)

  /// Throws std::domain_error on a zero denominator.
  Rational(Integer num, Integer den);
  Rational(long long num, long long den)
      : Rational(Integer(num), Integer(den)) {}

  const Integer& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  Rational operator+(const Rational& rhs) const;
  Rational operator-(const Rational& rhs) const;
  Rational operator*(const Rational& rhs) const;
  Rational operator/(const Rational& rhs) const;
  Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
  Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }

  bool operator==(const Rational& rhs) const = default;
  std::strong_ordering operator<=>(const Rational& rhs) const;

  /// "2/3"; integers render without the slash.
  std::string str() const;

 private:
  void reduce();

  Integer num_;
  Integer den_;  // > 0
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace cmnp
