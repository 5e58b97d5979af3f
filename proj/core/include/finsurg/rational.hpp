#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace finsurg {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction over arbitrary-precision integers.
///
/// Always stored in lowest terms with a positive denominator; every
/// operation is exact. There is deliberately no conversion to or from
/// floating point.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}

  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    reduce();
  }

  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_negative() const { return num_ < 0; }
  bool is_positive() const { return num_ > 0; }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Rational operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  /// ⌊x⌋ as an integer.
  BigInt floor_int() const {
    BigInt q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) --q;
    return q;
  }

  /// Fractional part x − ⌊x⌋, in [0, 1).
  Rational frac() const { return *this - Rational(floor_int()); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  /// Renders "num/den" in lowest terms; an integer renders as "num".
  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

  /// Parses "num" or "num/den" (optional leading '-').
  static Rational parse(std::string_view text);

private:
  void reduce() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    num_ /= g;
    den_ /= g;
  }

  BigInt num_;
  BigInt den_;  // > 0
};

}  // namespace finsurg
