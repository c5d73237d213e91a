#ifndef SEIFERTK_NUMERIC_HPP
#define SEIFERTK_NUMERIC_HPP

#include <string>
#include <utility>

#include "seifertk/cyclotomic.hpp"

namespace sfk {

// Fixed-point real number with a 512-bit fractional part (~154 decimal digits).
// Only used as a numeric cross-check and for printing approximations; all
// authoritative arithmetic in this library is exact.
class BigFloat {
public:
  static constexpr int kScaleBits = 512;

  BigFloat() : mant_(0) {}
  explicit BigFloat(long long v) : mant_(BigInt(v) * scale_unit()) {}
  explicit BigFloat(const Rational &q)
      : mant_((q.num() * scale_unit()) / q.den()) {}

  static BigFloat from_mantissa(BigInt m) {
    BigFloat r;
    r.mant_ = std::move(m);
    return r;
  }
  const BigInt &mantissa() const { return mant_; }

  friend BigFloat operator+(const BigFloat &a, const BigFloat &b) {
    return from_mantissa(a.mant_ + b.mant_);
  }
  friend BigFloat operator-(const BigFloat &a, const BigFloat &b) {
    return from_mantissa(a.mant_ - b.mant_);
  }
  BigFloat operator-() const { return from_mantissa(-mant_); }
  friend BigFloat operator*(const BigFloat &a, const BigFloat &b) {
    return from_mantissa(shift_down(a.mant_ * b.mant_));
  }
  friend BigFloat operator/(const BigFloat &a, const BigFloat &b) {
    if (b.mant_.is_zero()) throw error("bigfloat division by zero");
    return from_mantissa((a.mant_ * scale_unit()) / b.mant_);
  }
  BigFloat &operator+=(const BigFloat &b) { return *this = *this + b; }
  BigFloat &operator-=(const BigFloat &b) { return *this = *this - b; }
  BigFloat &operator*=(const BigFloat &b) { return *this = *this * b; }

  BigFloat abs() const { return from_mantissa(mant_.abs()); }
  int sign() const { return mant_.sign(); }
  friend bool operator<(const BigFloat &a, const BigFloat &b) { return a.mant_ < b.mant_; }

  double to_double() const { return mant_.to_double() / scale_unit().to_double(); }

  // |*this| < 10^-digits
  bool abs_below_pow10(int digits) const {
    return mant_.abs() * BigInt(10).pow(static_cast<unsigned>(digits)) < scale_unit();
  }

  std::string to_decimal_string(int digits) const {
    BigInt scaled = mant_.abs() * BigInt(10).pow(static_cast<unsigned>(digits));
    BigInt q = scaled / scale_unit();
    std::string d = q.to_string();
    if (static_cast<int>(d.size()) <= digits) d = std::string(digits + 1 - d.size(), '0') + d;
    d.insert(d.size() - static_cast<size_t>(digits), ".");
    if (mant_.is_neg()) d = "-" + d;
    return d;
  }

  static const BigFloat &pi() {
    static BigFloat v = compute_pi();
    return v;
  }

  // cos(2*pi*t) and sin(2*pi*t) for rational t
  static std::pair<BigFloat, BigFloat> cos_sin_tau(const Rational &t) {
    // reduce t to [-1/2, 1/2)
    Rational tr = (t + Rational(1, 2)).frac() - Rational(1, 2);
    BigFloat theta = BigFloat(Rational(2) * tr) * pi();
    // Taylor with term recurrence; |theta| <= pi
    BigFloat c(1), s(0), term(1);
    BigFloat theta2 = theta * theta;
    for (int n = 1; n < 300; ++n) {
      // term_n = theta^n / n!
      if (n % 2 == 1) {
        term = term * theta;
        term = from_mantissa(term.mant_ / BigInt(n));
        if (n % 4 == 1)
          s += term;
        else
          s -= term;
      } else {
        term = term * theta;
        term = from_mantissa(term.mant_ / BigInt(n));
        if (n % 4 == 2)
          c -= term;
        else
          c += term;
      }
      if (n > 8 && term.mant_.abs() < BigInt(1)) break;
    }
    return {c, s};
  }

private:
  BigInt mant_;

  static const BigInt &scale_unit() {
    static BigInt u = BigInt(1) * BigInt(2).pow(kScaleBits);
    return u;
  }
  static BigInt shift_down(const BigInt &v) { return v / scale_unit(); }

  static BigFloat atan_inv(long long x) {
    // atan(1/x) = sum (-1)^k / ((2k+1) x^(2k+1))
    BigFloat sum(0);
    BigInt power = scale_unit() / BigInt(x);
    long long k = 0;
    while (!power.is_zero()) {
      BigInt term = power / BigInt(2 * k + 1);
      if (term.is_zero() && k > 0) break;
      if (k % 2 == 0)
        sum += from_mantissa(term);
      else
        sum -= from_mantissa(term);
      power = power / BigInt(x * x);
      ++k;
    }
    return sum;
  }
  static BigFloat compute_pi() {
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
    BigFloat a = atan_inv(5), b = atan_inv(239);
    return from_mantissa(a.mantissa() * BigInt(16) - b.mantissa() * BigInt(4));
  }
};

struct ComplexApprox {
  BigFloat re, im;
};

// Numeric value of a cyclotomic number at ~150 digits.
inline ComplexApprox approx(const Cyclotomic &v) {
  ComplexApprox out;
  for (const auto &[e, q] : v.terms()) {
    auto [c, s] = BigFloat::cos_sin_tau(Rational(e, v.modulus()));
    BigFloat w(q);
    out.re += w * c;
    out.im += w * s;
  }
  return out;
}

// True when v agrees with the rational q to the stated number of digits.
inline bool approx_equals(const Cyclotomic &v, const Rational &q, int digits = 100) {
  ComplexApprox a = approx(v);
  return (a.re - BigFloat(q)).abs_below_pow10(digits) && a.im.abs_below_pow10(digits);
}

inline bool approx_equals(const Cyclotomic &u, const Cyclotomic &v, int digits = 100) {
  ComplexApprox a = approx(u), b = approx(v);
  return (a.re - b.re).abs_below_pow10(digits) && (a.im - b.im).abs_below_pow10(digits);
}

} // namespace sfk

#endif
