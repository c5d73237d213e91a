#ifndef SEIFERTK_BIGINT_HPP
#define SEIFERTK_BIGINT_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "seifertk/errors.hpp"

namespace sfk {

// Sign-magnitude arbitrary-precision integer, little-endian base 2^32 limbs.
// Invariant: no leading zero limbs; sgn == 0 iff limbs is empty.
class BigInt {
public:
  BigInt() = default;

  BigInt(long long v) {
    if (v == 0) return;
    sgn_ = v < 0 ? -1 : 1;
    unsigned long long u =
        v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL : static_cast<unsigned long long>(v);
    while (u) {
      limbs_.push_back(static_cast<uint32_t>(u & 0xffffffffULL));
      u >>= 32;
    }
  }
  BigInt(int v) : BigInt(static_cast<long long>(v)) {}
  BigInt(unsigned v) : BigInt(static_cast<long long>(v)) {}
  BigInt(long v) : BigInt(static_cast<long long>(v)) {}

  static BigInt from_string(const std::string &s) {
    BigInt r;
    size_t i = 0;
    int sgn = 1;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      if (s[i] == '-') sgn = -1;
      ++i;
    }
    if (i == s.size()) throw error("bad integer literal: '" + s + "'");
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw error("bad integer literal: '" + s + "'");
      r.mul_small_inplace(10);
      r.add_small_inplace(static_cast<uint32_t>(s[i] - '0'));
    }
    if (!r.limbs_.empty()) r.sgn_ = sgn;
    return r;
  }

  int sign() const { return sgn_; }
  bool is_zero() const { return sgn_ == 0; }
  bool is_one() const { return sgn_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }
  bool is_neg() const { return sgn_ < 0; }
  bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }
  bool is_odd() const { return !is_even(); }

  bool fits_ll() const {
    if (limbs_.size() > 2) return false;
    unsigned long long u = mag_ull();
    if (sgn_ >= 0) return u <= 0x7fffffffffffffffULL;
    return u <= 0x8000000000000000ULL;
  }
  long long to_ll() const {
    if (!fits_ll()) throw error("BigInt does not fit in long long");
    unsigned long long u = mag_ull();
    if (sgn_ >= 0) return static_cast<long long>(u);
    if (u == 0x8000000000000000ULL) return -0x7fffffffffffffffLL - 1;
    return -static_cast<long long>(u);
  }

  friend bool operator==(const BigInt &a, const BigInt &b) {
    return a.sgn_ == b.sgn_ && a.limbs_ == b.limbs_;
  }
  friend bool operator!=(const BigInt &a, const BigInt &b) { return !(a == b); }
  friend bool operator<(const BigInt &a, const BigInt &b) {
    if (a.sgn_ != b.sgn_) return a.sgn_ < b.sgn_;
    int c = cmp_mag(a.limbs_, b.limbs_);
    return a.sgn_ >= 0 ? c < 0 : c > 0;
  }
  friend bool operator>(const BigInt &a, const BigInt &b) { return b < a; }
  friend bool operator<=(const BigInt &a, const BigInt &b) { return !(b < a); }
  friend bool operator>=(const BigInt &a, const BigInt &b) { return !(a < b); }

  BigInt operator-() const {
    BigInt r = *this;
    r.sgn_ = -r.sgn_;
    return r;
  }

  friend BigInt operator+(const BigInt &a, const BigInt &b) {
    if (a.sgn_ == 0) return b;
    if (b.sgn_ == 0) return a;
    BigInt r;
    if (a.sgn_ == b.sgn_) {
      r.limbs_ = add_mag(a.limbs_, b.limbs_);
      r.sgn_ = a.sgn_;
    } else {
      int c = cmp_mag(a.limbs_, b.limbs_);
      if (c == 0) return r;
      if (c > 0) {
        r.limbs_ = sub_mag(a.limbs_, b.limbs_);
        r.sgn_ = a.sgn_;
      } else {
        r.limbs_ = sub_mag(b.limbs_, a.limbs_);
        r.sgn_ = b.sgn_;
      }
    }
    return r;
  }
  friend BigInt operator-(const BigInt &a, const BigInt &b) { return a + (-b); }

  friend BigInt operator*(const BigInt &a, const BigInt &b) {
    BigInt r;
    if (a.sgn_ == 0 || b.sgn_ == 0) return r;
    r.limbs_ = mul_mag(a.limbs_, b.limbs_);
    r.sgn_ = a.sgn_ * b.sgn_;
    return r;
  }

  BigInt &operator+=(const BigInt &b) { return *this = *this + b; }
  BigInt &operator-=(const BigInt &b) { return *this = *this - b; }
  BigInt &operator*=(const BigInt &b) { return *this = *this * b; }

  // Truncated division (C semantics): quotient rounds toward zero.
  static void divmod_trunc(const BigInt &a, const BigInt &b, BigInt &q, BigInt &r) {
    if (b.sgn_ == 0) throw error("division by zero");
    if (a.sgn_ == 0) {
      q = BigInt();
      r = BigInt();
      return;
    }
    int c = cmp_mag(a.limbs_, b.limbs_);
    if (c < 0) {
      q = BigInt();
      r = a;
      return;
    }
    std::vector<uint32_t> qm, rm;
    divmod_mag(a.limbs_, b.limbs_, qm, rm);
    q.limbs_ = std::move(qm);
    q.sgn_ = q.limbs_.empty() ? 0 : a.sgn_ * b.sgn_;
    r.limbs_ = std::move(rm);
    r.sgn_ = r.limbs_.empty() ? 0 : a.sgn_;
  }

  friend BigInt operator/(const BigInt &a, const BigInt &b) {
    BigInt q, r;
    divmod_trunc(a, b, q, r);
    return q;
  }
  friend BigInt operator%(const BigInt &a, const BigInt &b) {
    BigInt q, r;
    divmod_trunc(a, b, q, r);
    return r;
  }

  // Floor division and the matching nonnegative-when-b>0 remainder.
  static void divmod_floor(const BigInt &a, const BigInt &b, BigInt &q, BigInt &r) {
    divmod_trunc(a, b, q, r);
    if (!r.is_zero() && (r.sgn_ * b.sgn_ < 0)) {
      q -= BigInt(1);
      r += b;
    }
  }
  static BigInt fdiv(const BigInt &a, const BigInt &b) {
    BigInt q, r;
    divmod_floor(a, b, q, r);
    return q;
  }
  static BigInt fmod(const BigInt &a, const BigInt &b) {
    BigInt q, r;
    divmod_floor(a, b, q, r);
    return r;
  }

  BigInt abs() const {
    BigInt r = *this;
    if (r.sgn_ < 0) r.sgn_ = 1;
    return r;
  }

  static BigInt gcd(BigInt a, BigInt b) {
    a.sgn_ = a.limbs_.empty() ? 0 : 1;
    b.sgn_ = b.limbs_.empty() ? 0 : 1;
    // fast path: both magnitudes fit in 64 bits
    if (a.limbs_.size() <= 2 && b.limbs_.size() <= 2) {
      unsigned long long x = a.mag_ull(), y = b.mag_ull();
      while (y) {
        unsigned long long t = x % y;
        x = y;
        y = t;
      }
      BigInt r;
      if (x) {
        r.sgn_ = 1;
        r.limbs_.push_back(static_cast<uint32_t>(x & 0xffffffffULL));
        if (x >> 32) r.limbs_.push_back(static_cast<uint32_t>(x >> 32));
      }
      return r;
    }
    while (!b.is_zero()) {
      BigInt t = a % b;
      a = std::move(b);
      b = std::move(t);
    }
    return a;
  }

  static BigInt lcm(const BigInt &a, const BigInt &b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    return (a / gcd(a, b) * b).abs();
  }

  // Extended gcd: returns g = gcd(a,b) and x,y with a*x + b*y = g.
  static BigInt egcd(const BigInt &a, const BigInt &b, BigInt &x, BigInt &y) {
    BigInt old_r = a, r = b;
    BigInt old_s(1), s(0), old_t(0), t(1);
    while (!r.is_zero()) {
      BigInt q, rem;
      divmod_trunc(old_r, r, q, rem);
      old_r = std::move(r);
      r = std::move(rem);
      BigInt ns = old_s - q * s;
      old_s = std::move(s);
      s = std::move(ns);
      BigInt nt = old_t - q * t;
      old_t = std::move(t);
      t = std::move(nt);
    }
    if (old_r.sgn_ < 0) {
      old_r.sgn_ = 1;
      old_s = -old_s;
      old_t = -old_t;
    }
    x = old_s;
    y = old_t;
    return old_r;
  }

  BigInt pow(unsigned e) const {
    BigInt r(1), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  std::string to_string() const {
    if (sgn_ == 0) return "0";
    std::vector<uint32_t> m = limbs_;
    std::string digits;
    while (!m.empty()) {
      // divide magnitude by 10^9, emit remainder
      uint64_t rem = 0;
      for (size_t i = m.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | m[i];
        m[i] = static_cast<uint32_t>(cur / 1000000000ULL);
        rem = cur % 1000000000ULL;
      }
      while (!m.empty() && m.back() == 0) m.pop_back();
      for (int k = 0; k < 9; ++k) {
        digits.push_back(static_cast<char>('0' + rem % 10));
        rem /= 10;
      }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    std::string out;
    if (sgn_ < 0) out.push_back('-');
    out.append(digits.rbegin(), digits.rend());
    return out;
  }

  double to_double() const {
    double v = 0;
    for (size_t i = limbs_.size(); i-- > 0;) v = v * 4294967296.0 + limbs_[i];
    return sgn_ < 0 ? -v : v;
  }

  size_t limb_count() const { return limbs_.size(); }

private:
  int sgn_ = 0;
  std::vector<uint32_t> limbs_;

  unsigned long long mag_ull() const {
    unsigned long long u = 0;
    if (limbs_.size() > 0) u = limbs_[0];
    if (limbs_.size() > 1) u |= static_cast<unsigned long long>(limbs_[1]) << 32;
    return u;
  }

  void trim(std::vector<uint32_t> &v) { while (!v.empty() && v.back() == 0) v.pop_back(); }

  void mul_small_inplace(uint32_t f) {
    uint64_t carry = 0;
    for (auto &l : limbs_) {
      uint64_t cur = static_cast<uint64_t>(l) * f + carry;
      l = static_cast<uint32_t>(cur & 0xffffffffULL);
      carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
    if (limbs_.empty()) sgn_ = 0;
  }
  void add_small_inplace(uint32_t v) {
    if (v == 0) return;
    uint64_t carry = v;
    for (size_t i = 0; i < limbs_.size() && carry; ++i) {
      uint64_t cur = static_cast<uint64_t>(limbs_[i]) + carry;
      limbs_[i] = static_cast<uint32_t>(cur & 0xffffffffULL);
      carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
    if (sgn_ == 0 && !limbs_.empty()) sgn_ = 1;
  }

  static int cmp_mag(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static std::vector<uint32_t> add_mag(const std::vector<uint32_t> &a,
                                       const std::vector<uint32_t> &b) {
    const std::vector<uint32_t> &big = a.size() >= b.size() ? a : b;
    const std::vector<uint32_t> &small = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r(big.size());
    uint64_t carry = 0;
    for (size_t i = 0; i < big.size(); ++i) {
      uint64_t cur = static_cast<uint64_t>(big[i]) + (i < small.size() ? small[i] : 0) + carry;
      r[i] = static_cast<uint32_t>(cur & 0xffffffffULL);
      carry = cur >> 32;
    }
    if (carry) r.push_back(static_cast<uint32_t>(carry));
    return r;
  }

  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t> &a,
                                       const std::vector<uint32_t> &b) {
    std::vector<uint32_t> r(a.size());
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
      int64_t cur = static_cast<int64_t>(a[i]) - (i < b.size() ? b[i] : 0) - borrow;
      borrow = cur < 0;
      if (cur < 0) cur += (1LL << 32);
      r[i] = static_cast<uint32_t>(cur);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t> &a,
                                       const std::vector<uint32_t> &b) {
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
      uint64_t carry = 0;
      uint64_t av = a[i];
      if (av == 0) continue;
      for (size_t j = 0; j < b.size(); ++j) {
        uint64_t cur = av * b[j] + r[i + j] + carry;
        r[i + j] = static_cast<uint32_t>(cur & 0xffffffffULL);
        carry = cur >> 32;
      }
      size_t k = i + b.size();
      while (carry) {
        uint64_t cur = r[k] + carry;
        r[k] = static_cast<uint32_t>(cur & 0xffffffffULL);
        carry = cur >> 32;
        ++k;
      }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  // Knuth algorithm D on magnitudes; requires |a| >= |b|, b nonzero.
  static void divmod_mag(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b,
                         std::vector<uint32_t> &q, std::vector<uint32_t> &r) {
    if (b.size() == 1) {
      q.assign(a.size(), 0);
      uint64_t rem = 0;
      for (size_t i = a.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | a[i];
        q[i] = static_cast<uint32_t>(cur / b[0]);
        rem = cur % b[0];
      }
      while (!q.empty() && q.back() == 0) q.pop_back();
      r.clear();
      if (rem) r.push_back(static_cast<uint32_t>(rem));
      return;
    }
    int shift = 0;
    uint32_t top = b.back();
    while (!(top & 0x80000000u)) {
      top <<= 1;
      ++shift;
    }
    std::vector<uint32_t> u = shl_bits(a, shift);
    std::vector<uint32_t> v = shl_bits(b, shift);
    size_t n = v.size(), m = u.size() - n;
    u.push_back(0);
    q.assign(m + 1, 0);
    const uint64_t base = 1ULL << 32;
    for (size_t j = m + 1; j-- > 0;) {
      uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
      uint64_t qhat = num / v[n - 1];
      uint64_t rhat = num % v[n - 1];
      while (qhat >= base ||
             qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
        --qhat;
        rhat += v[n - 1];
        if (rhat >= base) break;
      }
      // multiply-subtract
      int64_t borrow = 0;
      uint64_t carry = 0;
      for (size_t i = 0; i < n; ++i) {
        uint64_t p = qhat * v[i] + carry;
        carry = p >> 32;
        int64_t sub = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffULL) - borrow;
        borrow = sub < 0;
        if (sub < 0) sub += static_cast<int64_t>(base);
        u[i + j] = static_cast<uint32_t>(sub);
      }
      int64_t sub = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
      bool neg = sub < 0;
      if (neg) sub += static_cast<int64_t>(base);
      u[j + n] = static_cast<uint32_t>(sub);
      if (neg) {
        // qhat was one too large; add back
        --qhat;
        uint64_t c = 0;
        for (size_t i = 0; i < n; ++i) {
          uint64_t cur = static_cast<uint64_t>(u[i + j]) + v[i] + c;
          u[i + j] = static_cast<uint32_t>(cur & 0xffffffffULL);
          c = cur >> 32;
        }
        u[j + n] = static_cast<uint32_t>(u[j + n] + c);
      }
      q[j] = static_cast<uint32_t>(qhat);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    u.resize(n);
    r = shr_bits(u, shift);
  }

  static std::vector<uint32_t> shl_bits(const std::vector<uint32_t> &a, int s) {
    if (s == 0) return a;
    std::vector<uint32_t> r(a.size() + 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
      r[i] |= a[i] << s;
      r[i + 1] = static_cast<uint32_t>(static_cast<uint64_t>(a[i]) >> (32 - s));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }
  static std::vector<uint32_t> shr_bits(std::vector<uint32_t> a, int s) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (s == 0) return a;
    for (size_t i = 0; i < a.size(); ++i) {
      a[i] >>= s;
      if (i + 1 < a.size()) a[i] |= a[i + 1] << (32 - s);
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
  }
};

inline BigInt operator*(long long a, const BigInt &b) { return BigInt(a) * b; }

// Smallest nonnegative representative of a mod m (m > 0).
inline BigInt mod_norm(const BigInt &a, const BigInt &m) { return BigInt::fmod(a, m.abs()); }

// Inverse of a mod m; throws not_coprime if gcd(a,m) != 1.
inline BigInt mod_inverse(const BigInt &a, const BigInt &m) {
  BigInt x, y;
  BigInt g = BigInt::egcd(mod_norm(a, m), m, x, y);
  if (!g.is_one()) throw not_coprime("no inverse of " + a.to_string() + " mod " + m.to_string());
  return mod_norm(x, m);
}

// Solve a*x = c (mod m); throws not_coprime when gcd(a,m) does not divide c.
inline BigInt mod_solve(const BigInt &a, const BigInt &c, const BigInt &m) {
  BigInt x, y;
  BigInt g = BigInt::egcd(mod_norm(a, m), m, x, y);
  BigInt q, r;
  BigInt::divmod_trunc(c, g, q, r);
  if (!r.is_zero())
    throw not_coprime("no solution of " + a.to_string() + "*x = " + c.to_string() + " mod " +
                      m.to_string());
  return mod_norm(x * q, m / g);
}

inline long long gcd_ll(long long a, long long b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

} // namespace sfk

#endif
