#ifndef SEIFERTK_RATIONAL_HPP
#define SEIFERTK_RATIONAL_HPP

#include <string>
#include <utility>

#include "seifertk/bigint.hpp"

namespace sfk {

// Exact rational number, always in lowest terms with positive denominator.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}
  Rational(int v) : num_(v), den_(1) {}
  Rational(BigInt v) : num_(std::move(v)), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  // parses "a/b" or "a"
  static Rational from_string(const std::string &s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt::from_string(s));
    return Rational(BigInt::from_string(s.substr(0, slash)),
                    BigInt::from_string(s.substr(slash + 1)));
  }

  const BigInt &num() const { return num_; }
  const BigInt &den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_.is_one(); }
  int sign() const { return num_.sign(); }

  friend Rational operator+(const Rational &a, const Rational &b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational &a, const Rational &b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational &a, const Rational &b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational &a, const Rational &b) {
    if (b.is_zero()) throw error("rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }
  Rational &operator+=(const Rational &b) { return *this = *this + b; }
  Rational &operator-=(const Rational &b) { return *this = *this - b; }
  Rational &operator*=(const Rational &b) { return *this = *this * b; }
  Rational &operator/=(const Rational &b) { return *this = *this / b; }

  friend bool operator==(const Rational &a, const Rational &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational &a, const Rational &b) { return !(a == b); }
  friend bool operator<(const Rational &a, const Rational &b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational &a, const Rational &b) { return b < a; }
  friend bool operator<=(const Rational &a, const Rational &b) { return !(b < a); }
  friend bool operator>=(const Rational &a, const Rational &b) { return !(a < b); }

  BigInt floor() const { return BigInt::fdiv(num_, den_); }

  // fractional part {x} = x - floor(x), in [0,1)
  Rational frac() const { return *this - Rational(floor()); }

  // generalized sawtooth ((x)) = {x} - 1/2 for x non-integral, 0 otherwise
  Rational sawtooth() const {
    if (is_integer()) return Rational(0);
    return frac() - Rational(1, 2);
  }

  // B2(x) = {x}^2 - {x} + 1/6
  Rational bernoulli2() const {
    Rational f = frac();
    return f * f - f + Rational(1, 6);
  }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
  }

  double to_double() const { return num_.to_double() / den_.to_double(); }

private:
  BigInt num_, den_;

  void normalize() {
    if (den_.is_zero()) throw error("rational with zero denominator");
    if (den_.is_neg()) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_.is_zero()) {
      den_ = BigInt(1);
      return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
};

// delta(x, n) = n when x is an integer divisible by n, else 0
inline long long delta_div(const Rational &x, long long n) {
  if (!x.is_integer()) return 0;
  if (n == 0) throw error("delta with n = 0");
  return BigInt::fmod(x.num(), BigInt(n)).is_zero() ? n : 0;
}

} // namespace sfk

#endif
