#ifndef SEIFERTK_ETA_HPP
#define SEIFERTK_ETA_HPP

#include <map>
#include <vector>

#include "seifertk/seifert.hpp"
#include "seifertk/sums.hpp"

namespace sfk {

// Generalized lens space L(p; a, b); (a,b) ~ (b,a) ~ (-a,-b).
struct LensSpaceData {
  long long p = 2;
  long long a = 1, b = 1;

  LensSpaceData(long long p_, long long a_, long long b_) : p(p_), a(a_), b(b_) {
    if (p < 2) throw error("lens space order must be >= 2");
    if (gcd_ll(a, p) != 1 || gcd_ll(b, p) != 1)
      throw not_coprime("lens space weights must be units mod p");
  }

  std::pair<long long, long long> canonical() const {
    auto norm = [&](long long v) { return ((v % p) + p) % p; };
    long long a1 = norm(a), b1 = norm(b);
    std::pair<long long, long long> best{p, p};
    for (auto [u, v] : {std::pair<long long, long long>{a1, b1},
                        {b1, a1},
                        {norm(-a1), norm(-b1)},
                        {norm(-b1), norm(-a1)}})
      best = std::min(best, std::pair<long long, long long>{u, v});
    return best;
  }
  friend bool operator==(const LensSpaceData &x, const LensSpaceData &y) {
    return x.p == y.p && x.canonical() == y.canonical();
  }
};

// alpha(L(p;a,b)) = cot(a pi/p) cot(b pi/p)
inline Cyclotomic alpha_invariant_lens(const LensSpaceData &L) {
  return trig_value(TrigKind::cot, L.a, L.p) * trig_value(TrigKind::cot, L.b, L.p);
}

// Equivariant signature eta invariant of Y at the q-th power of the standard
// Z/r action:  eta = 1 - (1/alpha) csc^2(q pi/r) - sum_i c(p_i, alpha_i; p_i q/r, alpha_i q/r).
inline Cyclotomic eta_sign(const SeifertData &Y, long long r, long long q) {
  if (q < 1 || q >= r) throw error("need 1 <= q <= r-1");
  SeifertConstants c = derive_constants(Y, r);
  Cyclotomic acc = Cyclotomic(1) - Rational(1, Y.alpha()) * trig_value(TrigKind::csc2, q, r);
  long long g = gcd_ll(q, r);
  long long qh = q / g, rh = r / g;
  for (size_t i = 0; i < Y.alphas().size(); ++i) {
    long long ai = Y.alphas()[i], pi = c.p_small[i];
    Cyclotomic ci;
    if (qh == 1 && ai > 1 && pi < ai)
      ci = dedekind_dieter_euclidean(pi, ai, rh);
    else
      ci = dedekind_dieter_brute({pi, ai, Rational(pi * q, r), Rational(ai * q, r)});
    acc -= ci;
  }
  return acc;
}

// Independent route through the orbifold G-signature theorem applied to the
// disk bundle: eta = -sign + [Sigma]^2 csc^2 - sum_i (1/alpha_i) sum_k cot cot.
inline Cyclotomic eta_sign_gsignature(const SeifertData &Y, long long r, long long q) {
  if (q < 1 || q >= r) throw error("need 1 <= q <= r-1");
  SeifertConstants c = derive_constants(Y, r);
  Cyclotomic acc = Cyclotomic(1) - Rational(1, Y.alpha()) * trig_value(TrigKind::csc2, q, r);
  for (size_t i = 0; i < Y.alphas().size(); ++i) {
    long long ai = Y.alphas()[i], pi = c.p_small[i];
    Cyclotomic inner;
    for (long long k = 1; k < ai; ++k)
      inner += cot_or_zero(Rational(k * pi, ai)) * cot_or_zero(Rational(k, ai) + Rational(q, r));
    acc -= Rational(1, ai) * inner;
  }
  return acc;
}

// alpha(Q(r; alpha_1, ..., alpha_n)) = -eta_sign(Y, r, 1)
inline Cyclotomic alpha_invariant_seifert(const SeifertData &Y, long long r) {
  return -eta_sign(Y, r, 1);
}

namespace detail {

inline void check_admissible(const SeifertData &Y, long long r, const Rational &L) {
  if (!(Rational(2) * L).is_integer())
    throw inadmissible_level(L.to_string() + " not a half-integer");
  if (!(L - Y.rho()).is_integer())
    throw inadmissible_level(L.to_string() + " != rho(Y) mod Z");
  if (L < Rational(0) || L > Rational(r) - Rational(1, 2))
    throw inadmissible_level(L.to_string() + " outside [0, r - 1/2]");
}

} // namespace detail

// The L-component of the equivariant correction term of (Y, standard Z/r
// action), computed relative to the adiabatic connection.
inline Rational correction_term_with(const SeifertConstants &c, const Rational &L,
                                     bool alt_lift = false) {
  const SeifertData &Y = c.Y;
  long long r = c.r;
  detail::check_admissible(Y, r, L);
  const auto &alphas = Y.alphas();
  long long alpha = Y.alpha();
  Rational rho = Y.rho();
  bool even_case = !rho.is_zero();

  Rational acc;
  for (size_t i = 0; i < alphas.size(); ++i) {
    long long ai = alphas[i];
    Rational x = even_case ? (Rational(c.gamma[i]) + Rational(c.beta[i], 2)) / Rational(ai)
                           : Rational(c.gamma[i], ai);
    acc += dedekind_rademacher_brute({r * c.beta[i], ai, x, -L / Rational(r)});
    acc += Rational(1, 2 * r) * dedekind_sum(c.beta[i], ai);
    Rational saw_arg = even_case
                           ? (Rational(c.p_small[i] * c.gamma[i]) + Rational(1, 2)) / Rational(ai)
                           : Rational(c.p_small[i] * c.gamma[i], ai);
    acc += Rational(1, 2 * r) * saw_arg.sawtooth();
  }

  for (size_t i = 0; i < alphas.size(); ++i) {
    Rational Ap = c.A_prime(i, L, alt_lift);
    Rational ApR = (Ap / Rational(r)).frac();
    if (!even_case) {
      acc += Rational(1, 4) * (Rational(1) - Rational(2) * ApR);
    } else if (alphas[i] % 2 == 0) {
      long long d = delta_div(Rational(c.A[i]) - Rational(2) * L, 2);
      if (d != 0) {
        Rational half = (Ap - Rational(1, 2)).frac();
        Rational t1 = (Rational(r, 2) * ApR).frac();
        Rational t2 = Rational(r, 2).frac() * ApR;
        Rational t3 = Rational(4) * Rational(r - 1, 2).frac() * t1 * ApR;
        acc += Rational(d, 2) * half * (t1 - t2 - t3);
      }
    } else {
      acc += Rational(1, 2) * Ap.frac() * (Rational(1) - Rational(2) * ApR);
    }
  }

  Rational inv_sum;
  for (long long ai : alphas) inv_sum += Rational(1, 2 * ai);
  acc -= inv_sum * (L / Rational(r)).sawtooth();
  acc += Rational(r, 12 * alpha);
  acc += L * (L - Rational(r)) / Rational(2 * r * alpha);
  acc += Rational(1, 24 * r * alpha);
  acc -= Rational(1, 8 * r);
  return acc;
}

inline Rational correction_term(const SeifertData &Y, long long r, const Rational &L) {
  return correction_term_with(derive_constants(Y, r), L);
}

// All r components n_L, L = rho(Y), rho(Y)+1, ..., rho(Y)+r-1.
struct CorrectionVector {
  SeifertData Y;
  long long r = 0;
  std::map<Rational, Rational> entries; // L -> n_L

  Rational total() const {
    Rational t;
    for (const auto &[L, v] : entries) t += v;
    return t;
  }
};

inline CorrectionVector correction_vector(const SeifertData &Y, long long r) {
  SeifertConstants c = derive_constants(Y, r);
  CorrectionVector v;
  v.Y = Y;
  v.r = r;
  Rational L = Y.rho();
  for (long long j = 0; j < r; ++j, L += Rational(1)) v.entries[L] = correction_term_with(c, L);
  return v;
}

// The non-equivariant correction term n(Y, g, adiabatic connection): the
// grading (sum) of the correction vector; independent of r.
inline Rational correction_total(const SeifertData &Y, long long r) {
  return correction_vector(Y, r).total();
}

// Inversion of  n_L = (1/r) n + (1/2r) sum_{q=1}^{r-1} e^{-2 pi i q L / r} eta_q
// over Q(zeta_{2r}): recovers n (the q = 0 mode) and the Dirac eta values.
struct DiracEtaData {
  Rational n_plain;
  std::map<long long, Cyclotomic> etas; // q -> eta^{(q,r)}
  long long r = 0;
};

inline DiracEtaData dirac_eta_from_corrections(const CorrectionVector &v) {
  long long r = v.r;
  if (static_cast<long long>(v.entries.size()) != r)
    throw incomplete_vector("expected " + std::to_string(r) + " components");
  DiracEtaData out;
  out.r = r;
  for (long long q = 0; q < r; ++q) {
    Cyclotomic f;
    for (const auto &[L, nL] : v.entries) {
      // e^{2 pi i q L / r} = zeta_{2r}^{2 q L}
      long long twoL = (Rational(2) * L).num().to_ll();
      f += Cyclotomic::monomial(2 * r, q * twoL, nL);
    }
    if (q == 0)
      out.n_plain = f.as_rational();
    else
      out.etas[q] = Rational(2) * f;
  }
  return out;
}

// Forward direction, for round-trip checking.
inline CorrectionVector corrections_from_dirac_eta(const SeifertData &Y, const DiracEtaData &d) {
  CorrectionVector v;
  v.Y = Y;
  v.r = d.r;
  Rational L = Y.rho();
  for (long long j = 0; j < d.r; ++j, L += Rational(1)) {
    Cyclotomic acc(d.n_plain);
    long long twoL = (Rational(2) * L).num().to_ll();
    for (const auto &[q, eta] : d.etas)
      acc += Rational(1, 2) * (Cyclotomic::monomial(2 * d.r, -q * twoL, Rational(1)) * eta);
    v.entries[L] = (Rational(1, d.r) * acc).as_rational();
  }
  return v;
}

} // namespace sfk

#endif
