#ifndef SEIFERTK_SUMS_HPP
#define SEIFERTK_SUMS_HPP

#include <vector>

#include "seifertk/cyclotomic.hpp"

namespace sfk {

enum class SumMethod { brute, reciprocity };

// s(b,a;x,y) = sum_{k=0}^{|a|-1} ((x + (b/a)(k+y))) (((k+y)/a))
struct DedekindRademacherSpec {
  long long b = 0;
  long long a = 1; // nonzero
  Rational x, y;
};

// c(b,a;x,y) = (1/a) sum_{k=0}^{a-1} c((b/a)(k+y) - x) c((k+y)/a),  c(z)=cot(pi z), c(Z)=0
struct DedekindDieterSpec {
  long long b = 0;
  long long a = 1; // positive
  Rational x, y;
};

// S(q,r,p;eps) = (1/p) sum_{j=1}^{|p|-1} eps^j csc(j q pi / p) csc(j r pi / p)
struct CosecantSumSpec {
  long long q = 1, r = 1, p = 2;
  int eps = -1;
};

// ---------------------------------------------------------------------------
// Dedekind-Rademacher sums

inline Rational dedekind_rademacher_brute(const DedekindRademacherSpec &s) {
  if (s.a == 0) throw error("rademacher sum needs a != 0");
  long long n = std::llabs(s.a);
  Rational slope(s.b, s.a);
  Rational acc;
  for (long long k = 0; k < n; ++k) {
    Rational ky = s.y + Rational(k);
    acc += (s.x + slope * ky).sawtooth() * (ky / Rational(s.a)).sawtooth();
  }
  return acc;
}

// Two-term reciprocity for coprime h, k >= 1 on the stratum k*x + h*y in Z:
//   s(h,k;x,y) + s(k,h;y,x)
//     = ((x))((y)) + (k/2h) B2(x) + (h/2k) B2(y) + 1/(12hk) - 1/4*[x,y in Z]
inline Rational rademacher_reciprocity_rhs(long long h, long long k, const Rational &x,
                                           const Rational &y) {
  Rational r = x.sawtooth() * y.sawtooth() + Rational(k, 2 * h) * x.bernoulli2() +
               Rational(h, 2 * k) * y.bernoulli2() + Rational(1, 12 * h * k);
  if (x.is_integer() && y.is_integer()) r -= Rational(1, 4);
  return r;
}

inline Rational dedekind_rademacher_reciprocity(const DedekindRademacherSpec &s) {
  long long b = s.b, a = s.a;
  if (!(b > a && a > 0)) throw reciprocity_hypothesis_violated("need b > a > 0");
  if (gcd_ll(b, a) != 1) throw reciprocity_hypothesis_violated("need (b,a) = 1");
  if (s.x.is_integer() && s.y.is_integer())
    throw reciprocity_hypothesis_violated("x, y must not both be integers");
  if (!(Rational(a) * s.x + Rational(b) * s.y).is_integer())
    throw reciprocity_hypothesis_violated("need a*x + b*y integral");

  // Euclidean descent with canonical floor quotients:
  // s(h,k;X,Y) = s(h-qk, k; X+qY, Y) and then reciprocate to shrink k.
  long long h = b, k = a;
  Rational X = s.x.frac(), Y = s.y.frac();
  int sign = 1;
  Rational acc;
  while (k != 1) {
    long long q = h / k;
    long long c = h - q * k;
    Rational Xr = (X + Rational(q) * Y).frac();
    acc += Rational(sign) * rademacher_reciprocity_rhs(c, k, Xr, Y);
    sign = -sign;
    h = k;
    k = c;
    X = Y;
    Y = Xr;
  }
  acc += Rational(sign) * (X + Rational(h) * Y).sawtooth() * Y.sawtooth();
  return acc;
}

inline Rational dedekind_rademacher(const DedekindRademacherSpec &s, SumMethod m) {
  return m == SumMethod::brute ? dedekind_rademacher_brute(s) : dedekind_rademacher_reciprocity(s);
}

// ---------------------------------------------------------------------------
// Ordinary Dedekind sums s(b,a) = s(b,a;0,0)

inline Rational dedekind_sum_brute(long long b, long long a) {
  if (a < 1) throw error("dedekind sum needs a >= 1");
  if (gcd_ll(b, a) != 1) throw not_coprime("s(b,a) needs (b,a) = 1");
  DedekindRademacherSpec s;
  s.b = b;
  s.a = a;
  return dedekind_rademacher_brute(s);
}

inline Rational dedekind_sum_reciprocity(long long b, long long a) {
  if (a < 1) throw error("dedekind sum needs a >= 1");
  if (gcd_ll(b, a) != 1) throw not_coprime("s(b,a) needs (b,a) = 1");
  b %= a;
  if (b < 0) b += a;
  if (a == 1 || b == 0) return Rational(0);
  if (b == 1) return Rational((a - 1) * (a - 2), 12 * a);
  std::vector<long long> aa = {a, b};
  std::vector<long long> q = {0};
  std::vector<long long> ss = {0, 1};
  while (aa.back() != 1) {
    long long prev = aa[aa.size() - 2], cur = aa.back();
    long long quot = prev / cur;
    q.push_back(quot);
    aa.push_back(prev - quot * cur);
    size_t j = aa.size() - 1;
    ss.push_back(quot * ss[j - 1] + ss[j - 2]);
  }
  size_t n = aa.size() - 1;
  long long sgn = (n % 2 == 0) ? 1 : -1;
  Rational acc = Rational(-sgn * (aa[n - 1] * aa[n - 1] + 2), 12 * aa[n - 1]);
  acc += Rational(aa[1], 12 * aa[0]);
  acc += Rational(sgn * aa[n - 2], 12 * aa[n - 1]);
  acc += Rational(sgn * ss[n - 1], 12 * aa[0] * aa[n - 1]);
  for (size_t j = 1; j <= n - 2; ++j) acc += Rational(((j % 2 == 1) ? 1 : -1) * q[j], 12);
  if (n % 2 == 1) acc -= Rational(1, 4);
  return acc;
}

inline Rational dedekind_sum(long long b, long long a,
                             SumMethod m = SumMethod::reciprocity) {
  return m == SumMethod::brute ? dedekind_sum_brute(b, a) : dedekind_sum_reciprocity(b, a);
}

// ---------------------------------------------------------------------------
// Dedekind-Dieter cotangent sums

inline Cyclotomic dedekind_dieter_brute(const DedekindDieterSpec &s) {
  if (s.a < 1) throw error("dieter sum needs a >= 1");
  Rational slope(s.b, s.a);
  Cyclotomic acc;
  for (long long k = 0; k < s.a; ++k) {
    Rational ky = s.y + Rational(k);
    Rational u = slope * ky - s.x;
    Rational v = ky / Rational(s.a);
    if (u.is_integer() || v.is_integer()) continue;
    acc += cot_or_zero(u) * cot_or_zero(v);
  }
  return Rational(1, s.a) * acc;
}

// Euclidean form for arguments (x,y) = (b/r, a/r); the shape the eta formulas use.
inline Cyclotomic dedekind_dieter_euclidean(long long b, long long a, long long r) {
  if (!(a > b && b > 0)) throw reciprocity_hypothesis_violated("need a > b > 0");
  if (gcd_ll(a, b) != 1) throw reciprocity_hypothesis_violated("need (a,b) = 1");
  if (r < 2) throw reciprocity_hypothesis_violated("need r >= 2");
  std::vector<long long> aa = {a, b};
  std::vector<long long> q;
  std::vector<long long> ss = {0, 1};
  while (aa.back() != 1) {
    long long prev = aa[aa.size() - 2], cur = aa.back();
    long long quot = prev / cur;
    q.push_back(quot);
    aa.push_back(prev - quot * cur);
    size_t j = aa.size() - 1;
    ss.push_back(quot * ss[j - 1] + ss[j - 2]);
  }
  size_t n = aa.size() - 1;
  Cyclotomic acc;
  for (size_t j = 1; j <= n; ++j) {
    Cyclotomic term = cot_or_zero(Rational(aa[j - 1], r)) * cot_or_zero(Rational(aa[j], r));
    if (aa[j] % r == 0)
      term -= Rational(aa[j - 1], aa[j]) * csc2_or_third(Rational(aa[j - 1], r));
    if (aa[j - 1] % r == 0)
      term -= Rational(aa[j], aa[j - 1]) * csc2_or_third(Rational(aa[j], r));
    acc += (j % 2 == 1) ? -term : term;
  }
  Rational lead(ss[n], a);
  if (n % 2 == 0) lead = -lead;
  acc += lead * csc2_or_third(Rational(1, r));
  if (n % 2 == 1) acc -= Cyclotomic(1);
  return acc;
}

inline Cyclotomic dedekind_dieter(const DedekindDieterSpec &s, SumMethod m) {
  if (m == SumMethod::brute) return dedekind_dieter_brute(s);
  if (s.a == 1) return Cyclotomic(); // single term with c(integer) = 0
  if (s.x.is_zero()) throw reciprocity_hypothesis_violated("x = 0 has no (b/r, a/r) shape");
  Rational rr = Rational(s.b) / s.x;
  if (!rr.is_integer() || rr.sign() <= 0 || Rational(s.a) / rr != s.y)
    throw reciprocity_hypothesis_violated("arguments are not of the (b/r, a/r) shape");
  long long r = rr.num().to_ll();
  if (r < 2) throw reciprocity_hypothesis_violated("need r >= 2");
  return dedekind_dieter_euclidean(s.b, s.a, r);
}

// ---------------------------------------------------------------------------
// Dedekind cosecant sums

namespace detail {

// csc(pi*m1/P) * csc(pi*m2/P) as an element of Q(zeta_{2P}); exact, computed
// with integer convolutions over a single denominator.
// csc(pi*m/P) = 2i * zeta_{2P}^m * (1/t) sum_{k=1}^{t-1} k (zeta_P^m)^k.
struct CscPairAccumulator {
  long long P;
  std::vector<Rational> acc; // coefficient of zeta_{2P}^e

  explicit CscPairAccumulator(long long P_) : P(P_), acc(static_cast<size_t>(2 * P_)) {}

  void add(long long m1, long long m2, const Rational &scale) {
    long long M = 2 * P;
    long long t1 = P / gcd_ll(((m1 % P) + P) % P, P);
    long long t2 = P / gcd_ll(((m2 % P) + P) % P, P);
    std::vector<__int128> conv(static_cast<size_t>(M), 0);
    // weighted exponents of the two inverse factors
    std::vector<std::pair<long long, long long>> f1, f2;
    f1.reserve(static_cast<size_t>(t1 - 1));
    f2.reserve(static_cast<size_t>(t2 - 1));
    for (long long k = 1; k < t1; ++k) f1.emplace_back(((2 * m1 * k) % M + M) % M, k);
    for (long long k = 1; k < t2; ++k) f2.emplace_back(((2 * m2 * k) % M + M) % M, k);
    long long shift = (((m1 + m2) % M) + M) % M;
    for (auto &[e1, w1] : f1)
      for (auto &[e2, w2] : f2) {
        long long e = e1 + e2 + shift;
        e %= M;
        conv[static_cast<size_t>(e)] += static_cast<__int128>(w1) * w2;
      }
    Rational factor = scale * Rational(-4) / Rational(t1 * t2);
    for (long long e = 0; e < M; ++e)
      if (conv[static_cast<size_t>(e)] != 0)
        acc[static_cast<size_t>(e)] +=
            factor * Rational(BigInt(static_cast<long long>(conv[static_cast<size_t>(e)])));
  }

  Cyclotomic value() const {
    Cyclotomic v;
    long long M = 2 * P;
    for (long long e = 0; e < M; ++e)
      if (!acc[static_cast<size_t>(e)].is_zero())
        v += Cyclotomic::monomial(M, e, acc[static_cast<size_t>(e)]);
    return v;
  }
};

inline long long round_ties_away(long long n, long long d) {
  long long s = ((n < 0) != (d < 0)) ? -1 : 1;
  unsigned long long an = static_cast<unsigned long long>(std::llabs(n));
  unsigned long long ad = static_cast<unsigned long long>(std::llabs(d));
  unsigned long long k = (2 * an + ad) / (2 * ad);
  return s * static_cast<long long>(k);
}

} // namespace detail

inline void cosecant_validate(const CosecantSumSpec &s) {
  if (s.p == 0) throw error("cosecant sum needs p != 0");
  if (s.eps != 1 && s.eps != -1) throw error("eps must be +1 or -1");
  if (gcd_ll(s.q, s.p) != 1 || gcd_ll(s.r, s.p) != 1)
    throw not_coprime("cosecant sum needs (q,p) = (r,p) = 1");
}

inline Rational cosecant_sum_brute(const CosecantSumSpec &s) {
  cosecant_validate(s);
  long long P = std::llabs(s.p);
  if (P == 1) return Rational(0);
  detail::CscPairAccumulator acc(P);
  for (long long j = 1; j < P; ++j) {
    Rational scale(((j % 2 == 1) && s.eps == -1) ? -1 : 1, s.p);
    acc.add(j * s.q % (2 * P), j * s.r % (2 * P), scale);
  }
  return acc.value().as_rational();
}

// Property-(6) closed form: negative-even continued-fraction expansion of p/q,
// valid for p != q (mod 2), |p| > |q| >= 1, gcd = 1, eps = -1, r = 1.
inline Rational cosecant_even_expansion(long long p, long long q) {
  std::vector<long long> qs = {p, q};
  std::vector<long long> alpha; // alpha[j] multiplies qs[j+1]
  std::vector<long long> ss = {0, 1};
  while (std::llabs(qs.back()) != 1) {
    long long prev = qs[qs.size() - 2], cur = qs.back();
    long long a = 2 * detail::round_ties_away(prev, 2 * cur);
    long long nxt = a * cur - prev;
    if (!(std::llabs(nxt) < std::llabs(cur)) || a == 0) {
      // try the adjacent even integers
      bool fixed = false;
      for (long long d : {-2LL, 2LL}) {
        long long a2 = a + d;
        long long n2 = a2 * cur - prev;
        if (a2 != 0 && std::llabs(n2) < std::llabs(cur)) {
          a = a2;
          nxt = n2;
          fixed = true;
          break;
        }
      }
      if (!fixed) throw parity_obstruction("even expansion failed to descend");
    }
    alpha.push_back(a);
    qs.push_back(nxt);
  }
  size_t n = qs.size() - 1;
  if (n < 2) throw parity_obstruction("expansion too short (|q| = 1 with wrong parity)");
  for (size_t j = 2; j <= n - 1; ++j) ss.push_back(alpha[j - 2] * ss[j - 1] - ss[j - 2]);
  Rational acc = -Rational(qs[n] * (qs[n - 1] * qs[n - 1] + 2) + qs[n - 2], 6 * qs[n - 1]);
  acc -= Rational(qs[1], 6 * qs[0]);
  acc -= Rational(ss[n - 1], 6 * qs[0] * qs[n - 1]);
  for (size_t j = 1; j + 2 <= n; ++j) acc -= Rational(alpha[j - 1], 6);
  return acc;
}

inline Rational cosecant_sum_reciprocity(const CosecantSumSpec &s) {
  cosecant_validate(s);
  long long p = s.p;
  int outer_sign = 1;
  if (p < 0) {
    p = -p;
    outer_sign = -1;
  }
  if (p == 1) return Rational(0);
  // reduce the r argument to 1 via the index-shift identity:
  // S(q,r,p;eps) = S(r'q,1,p;eps3), r'r = 1 + (r-1)p (mod 2p).
  // For even r the congruence has two solutions mod 2p; the even one is the
  // lift for which the identity holds (checked against the defining sum).
  long long rr = mod_solve(BigInt(s.r), BigInt(1 + (s.r - 1) * p), BigInt(2 * p)).to_ll();
  if (s.r % 2 == 0 && rr % 2 != 0) rr = (rr + p) % (2 * p);
  // eps3 = (-1)^{(q+r+p)(r-1)} * eps^{r+r'+1}
  int eps3 = 1;
  if (((s.q + s.r + p) % 2 != 0) && ((s.r - 1) % 2 != 0)) eps3 = -eps3;
  if (s.eps == -1 && ((s.r + rr + 1) % 2 != 0)) eps3 = -eps3;
  long long qq = ((rr % (2 * p)) * (s.q % (2 * p))) % (2 * p);
  qq = ((qq % (2 * p)) + 2 * p) % (2 * p);
  // normalize to |q| < p with eps-preserving 2p steps
  if (qq > p) qq -= 2 * p;
  if (p % 2 == 1) {
    bool q_even = (((qq % 2) + 2) % 2) == 0;
    if (q_even != (eps3 == -1))
      throw parity_obstruction("cosecant reciprocity needs q even with eps = -1 (p odd)");
    if (!q_even) {
      // flip parity and eps together
      qq += (qq <= 0) ? p : -p;
      eps3 = -eps3;
    }
  } else {
    if (eps3 == 1) {
      qq += (qq <= 0) ? p : -p;
      eps3 = -eps3;
    }
  }
  while (qq > p) qq -= 2 * p;
  while (qq < -p) qq += 2 * p;
  if (eps3 != -1) throw parity_obstruction("could not normalize to eps = -1");
  if ((p % 2) == (((qq % 2) + 2) % 2)) throw parity_obstruction("p = q (mod 2) after reduction");
  Rational v;
  if (qq == 1 || qq == -1) {
    // base case S(+-1, 1, p; -1) for even p
    v = Rational(qq) * Rational(-p * p - 2, 6 * p);
  } else {
    v = cosecant_even_expansion(p, qq);
  }
  return outer_sign == 1 ? v : -v;
}

inline Rational cosecant_sum(const CosecantSumSpec &s, SumMethod m) {
  return m == SumMethod::brute ? cosecant_sum_brute(s) : cosecant_sum_reciprocity(s);
}

} // namespace sfk

#endif
