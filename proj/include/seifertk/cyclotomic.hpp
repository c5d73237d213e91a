#ifndef SEIFERTK_CYCLOTOMIC_HPP
#define SEIFERTK_CYCLOTOMIC_HPP

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "seifertk/rational.hpp"

namespace sfk {

namespace detail {

// Coefficients of the m-th cyclotomic polynomial, constant term first, monic.
// Computed by exact division of x^m - 1 by the proper-divisor cyclotomics.
inline const std::vector<BigInt> &cyclotomic_poly(long long m) {
  static std::map<long long, std::vector<BigInt>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  // iterative: fill all divisors of m bottom-up
  std::vector<long long> divs;
  for (long long d = 1; d * d <= m; ++d)
    if (m % d == 0) {
      divs.push_back(d);
      if (d != m / d) divs.push_back(m / d);
    }
  std::sort(divs.begin(), divs.end());
  for (long long d : divs) {
    if (cache.count(d)) continue;
    std::vector<BigInt> num(static_cast<size_t>(d) + 1);
    num[0] = BigInt(-1);
    num[static_cast<size_t>(d)] = BigInt(1);
    for (long long e : divs) {
      if (e == d || d % e != 0) continue;
      const auto &phi_e = cache.at(e);
      // exact synthetic division num /= phi_e (both monic up to sign handling)
      std::vector<BigInt> q(num.size() - phi_e.size() + 1);
      for (size_t i = q.size(); i-- > 0;) {
        BigInt c = num[i + phi_e.size() - 1];
        q[i] = c;
        if (c.is_zero()) continue;
        for (size_t j = 0; j < phi_e.size(); ++j) num[i + j] -= c * phi_e[j];
      }
      num = std::move(q);
    }
    cache.emplace(d, std::move(num));
  }
  return cache.at(m);
}

inline long long euler_phi(long long m) {
  long long r = m;
  for (long long p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      r -= r / p;
      while (m % p == 0) m /= p;
    }
  if (m > 1) r -= r / m;
  return r;
}

} // namespace detail

// Element of the cyclotomic field Q(zeta_m), zeta_m = exp(2*pi*i/m).
// Stored as a sparse Laurent combination of powers of zeta_m (exponents mod m);
// the canonical form (reduced mod the m-th cyclotomic polynomial) is produced
// on demand for equality, rationality and serialization.  Values of different
// moduli embed into the lcm before combining, which preserves the value.
class Cyclotomic {
public:
  Cyclotomic() : m_(1) {}
  explicit Cyclotomic(const Rational &q) : m_(1) {
    if (!q.is_zero()) c_[0] = q;
  }
  Cyclotomic(long long v) : Cyclotomic(Rational(v)) {}

  static Cyclotomic root(long long m, long long k) { return monomial(m, k, Rational(1)); }

  static Cyclotomic monomial(long long m, long long k, const Rational &coeff) {
    if (m <= 0) throw error("cyclotomic modulus must be positive");
    Cyclotomic r;
    r.m_ = m;
    if (!coeff.is_zero()) r.c_[((k % m) + m) % m] = coeff;
    return r;
  }

  long long modulus() const { return m_; }
  bool structurally_zero() const { return c_.empty(); }

  // Injective ring embedding Q(zeta_m) -> Q(zeta_M) for m | M.
  Cyclotomic embedded(long long M) const {
    if (M % m_ != 0) throw error("embedding target modulus must be a multiple");
    if (M == m_) return *this;
    Cyclotomic r;
    r.m_ = M;
    long long f = M / m_;
    for (const auto &[e, q] : c_) r.c_[e * f] = q;
    return r;
  }

  friend Cyclotomic operator+(const Cyclotomic &a, const Cyclotomic &b) {
    long long M = lcm_ll(a.m_, b.m_);
    Cyclotomic x = a.embedded(M), y = b.embedded(M);
    for (const auto &[e, q] : y.c_) {
      auto it = x.c_.find(e);
      if (it == x.c_.end()) {
        x.c_.emplace(e, q);
      } else {
        it->second += q;
        if (it->second.is_zero()) x.c_.erase(it);
      }
    }
    return x;
  }
  friend Cyclotomic operator-(const Cyclotomic &a, const Cyclotomic &b) { return a + (-b); }
  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto &[e, q] : r.c_) q = -q;
    return r;
  }

  friend Cyclotomic operator*(const Cyclotomic &a, const Cyclotomic &b) {
    long long M = lcm_ll(a.m_, b.m_);
    Cyclotomic x = a.embedded(M), y = b.embedded(M);
    Cyclotomic r;
    r.m_ = M;
    for (const auto &[e1, q1] : x.c_)
      for (const auto &[e2, q2] : y.c_) {
        long long e = e1 + e2;
        if (e >= M) e -= M;
        auto it = r.c_.find(e);
        if (it == r.c_.end())
          r.c_.emplace(e, q1 * q2);
        else
          it->second += q1 * q2;
      }
    for (auto it = r.c_.begin(); it != r.c_.end();)
      it = it->second.is_zero() ? r.c_.erase(it) : std::next(it);
    return r;
  }

  friend Cyclotomic operator*(const Rational &s, const Cyclotomic &a) {
    Cyclotomic r;
    r.m_ = a.m_;
    if (s.is_zero()) return r;
    for (const auto &[e, q] : a.c_) r.c_[e] = s * q;
    return r;
  }
  friend Cyclotomic operator*(const Cyclotomic &a, const Rational &s) { return s * a; }

  Cyclotomic &operator+=(const Cyclotomic &b) { return *this = *this + b; }
  Cyclotomic &operator-=(const Cyclotomic &b) { return *this = *this - b; }
  Cyclotomic &operator*=(const Cyclotomic &b) { return *this = *this * b; }

  // complex conjugation zeta -> zeta^{-1}
  Cyclotomic conjugate() const {
    Cyclotomic r;
    r.m_ = m_;
    for (const auto &[e, q] : c_) r.c_[e == 0 ? 0 : m_ - e] = q;
    return r;
  }

  // Galois substitution zeta -> zeta^u, gcd(u, m) = 1.
  Cyclotomic galois(long long u) const {
    u = ((u % m_) + m_) % m_;
    if (gcd_ll(u, m_) != 1) throw error("galois exponent not coprime to modulus");
    Cyclotomic r;
    r.m_ = m_;
    for (const auto &[e, q] : c_) r.c_[(e * u) % m_] = q;
    return r;
  }

  // Canonical coefficient vector: length phi(m), entry k = coefficient of
  // zeta_m^k after reduction mod the m-th cyclotomic polynomial.
  std::vector<Rational> canonical() const {
    long long phi = detail::euler_phi(m_);
    std::vector<Rational> dense(static_cast<size_t>(m_));
    for (const auto &[e, q] : c_) dense[static_cast<size_t>(e)] += q;
    if (m_ > 1) {
      const auto &poly = detail::cyclotomic_poly(m_);
      for (size_t e = dense.size(); e-- > static_cast<size_t>(phi);) {
        if (dense[e].is_zero()) continue;
        Rational c = dense[e];
        dense[e] = Rational(0);
        size_t base = e - static_cast<size_t>(phi);
        for (size_t j = 0; j + 1 < poly.size(); ++j)
          if (!poly[j].is_zero()) dense[base + j] -= c * Rational(poly[j]);
      }
    }
    dense.resize(static_cast<size_t>(phi));
    return dense;
  }

  bool is_zero() const {
    if (c_.empty()) return true;
    for (const auto &q : canonical())
      if (!q.is_zero()) return false;
    return true;
  }

  friend bool operator==(const Cyclotomic &a, const Cyclotomic &b) { return (a - b).is_zero(); }
  friend bool operator!=(const Cyclotomic &a, const Cyclotomic &b) { return !(a == b); }

  bool is_rational() const {
    auto can = canonical();
    for (size_t k = 1; k < can.size(); ++k)
      if (!can[k].is_zero()) return false;
    return true;
  }

  // Collapse to Q; throws not_rational (carrying the canonical form) otherwise.
  Rational as_rational() const {
    auto can = canonical();
    for (size_t k = 1; k < can.size(); ++k)
      if (!can[k].is_zero()) throw not_rational(to_string());
    return can.empty() ? Rational(0) : can[0];
  }

  std::string to_string() const {
    auto can = canonical();
    std::string out;
    for (size_t k = 0; k < can.size(); ++k) {
      if (can[k].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += can[k].to_string();
      if (k > 0) out += "*z" + std::to_string(m_) + "^" + std::to_string(k);
    }
    if (out.empty()) out = "0";
    return out;
  }

  // access to the raw (unreduced) sparse terms; exponents in [0, m)
  const std::map<long long, Rational> &terms() const { return c_; }

  static long long lcm_ll(long long a, long long b) { return a / gcd_ll(a, b) * b; }

private:
  long long m_;
  std::map<long long, Rational> c_;
};

// 1 / (zeta_m^j - 1) for zeta_m^j != 1, via 1/(w-1) = (1/t) sum_{k=1}^{t-1} k w^k
// where t is the multiplicative order of w = zeta_m^j.
inline Cyclotomic root_minus_one_inverse(long long m, long long j) {
  j = ((j % m) + m) % m;
  if (j == 0) throw pole_error("1/(zeta^0 - 1)");
  long long t = m / gcd_ll(j, m);
  Cyclotomic r;
  Cyclotomic sum = Cyclotomic::monomial(m, 0, Rational(0));
  for (long long k = 1; k < t; ++k)
    sum += Cyclotomic::monomial(m, j * k % m, Rational(k, t));
  return sum;
}

enum class TrigKind { cot, csc, csc2, cos, sin, exp_i_pi };

// Exact value of the named trig function at pi*a/b as a cyclotomic number.
// cot, csc, csc2 require a/b not an integer (pole otherwise).
inline Cyclotomic trig_value(TrigKind kind, long long a, long long b) {
  if (b <= 0) throw error("trig denominator must be positive");
  const long long two_b = 2 * b;
  switch (kind) {
  case TrigKind::exp_i_pi:
    return Cyclotomic::root(two_b, a);
  case TrigKind::cos: {
    Cyclotomic z = Cyclotomic::root(two_b, a), zc = Cyclotomic::root(two_b, -a);
    return Rational(1, 2) * (z + zc);
  }
  case TrigKind::sin: {
    long long M = Cyclotomic::lcm_ll(4, two_b);
    Cyclotomic z = Cyclotomic::root(two_b, a).embedded(M);
    Cyclotomic zc = Cyclotomic::root(two_b, -a).embedded(M);
    Cyclotomic minus_i = Cyclotomic::root(4, -1).embedded(M);
    return Rational(1, 2) * ((z - zc) * minus_i);
  }
  case TrigKind::cot: {
    if (a % b == 0) throw pole_error("cot at integer multiple of pi");
    long long M = Cyclotomic::lcm_ll(4, b);
    Cyclotomic w = Cyclotomic::root(b, a).embedded(M);
    Cyclotomic i = Cyclotomic::root(4, 1).embedded(M);
    return i * (w + Cyclotomic(1)) * root_minus_one_inverse(b, a).embedded(M);
  }
  case TrigKind::csc: {
    if (a % b == 0) throw pole_error("csc at integer multiple of pi");
    long long M = Cyclotomic::lcm_ll(4, two_b);
    Cyclotomic z = Cyclotomic::root(two_b, a).embedded(M);
    Cyclotomic i = Cyclotomic::root(4, 1).embedded(M);
    return Rational(2) * i * z * root_minus_one_inverse(b, a).embedded(M);
  }
  case TrigKind::csc2: {
    Cyclotomic c = trig_value(TrigKind::csc, a, b);
    return c * c;
  }
  }
  throw error("unreachable trig kind");
}

// cot(pi*x) extended by c(z) = 0 for integral z, as in cotangent sums
inline Cyclotomic cot_or_zero(const Rational &x) {
  if (x.is_integer()) return Cyclotomic();
  Rational f = x.frac();
  return trig_value(TrigKind::cot, f.num().to_ll(), f.den().to_ll());
}

// csc^2(pi*x) extended by value 1/3 at integers (the regularized value used
// by cotangent-sum reciprocity)
inline Cyclotomic csc2_or_third(const Rational &x) {
  if (x.is_integer()) return Cyclotomic(Rational(1, 3));
  Rational f = x.frac();
  return trig_value(TrigKind::csc2, f.num().to_ll(), f.den().to_ll());
}

} // namespace sfk

#endif
