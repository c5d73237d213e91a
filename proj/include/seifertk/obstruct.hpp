#ifndef SEIFERTK_OBSTRUCT_HPP
#define SEIFERTK_OBSTRUCT_HPP

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "seifertk/kappa.hpp"

namespace sfk {

// ---------------------------------------------------------------------------
// Fixed-point data of a Z/p action: isolated points (a,b) and fixed surfaces
// (c, [S]^2), modulo (a,b) ~ (b,a) ~ (-a,-b) and (c,s) ~ (-c,s).

struct FixedPoint {
  long long a = 1, b = 1;
};

struct FixedSurface {
  long long c = 1;
  long long self_int = 0;
};

class FixedPointData {
public:
  FixedPointData() = default;
  FixedPointData(long long p, std::vector<FixedPoint> pts, std::vector<FixedSurface> surf = {})
      : p_(p), points_(std::move(pts)), surfaces_(std::move(surf)) {
    if (p_ < 3) throw error("fixed-point data needs p >= 3");
    for (const auto &q : points_)
      if (q.a % p_ == 0 || q.b % p_ == 0)
        throw error("isolated fixed-point weights must be units mod p");
    for (const auto &s : surfaces_)
      if (s.c % p_ == 0) throw error("surface rotation weight must be a unit mod p");
  }

  long long p() const { return p_; }
  const std::vector<FixedPoint> &points() const { return points_; }
  const std::vector<FixedSurface> &surfaces() const { return surfaces_; }
  bool pseudofree() const { return surfaces_.empty(); }

  std::pair<long long, long long> point_class(const FixedPoint &q) const {
    auto norm = [&](long long v) { return ((v % p_) + p_) % p_; };
    long long a = norm(q.a), b = norm(q.b);
    std::pair<long long, long long> best{p_, p_};
    for (auto [u, v] : {std::pair<long long, long long>{a, b},
                        {b, a},
                        {norm(-a), norm(-b)},
                        {norm(-b), norm(-a)}})
      best = std::min(best, std::pair<long long, long long>{u, v});
    return best;
  }

  std::vector<std::pair<long long, long long>> canonical_points() const {
    std::vector<std::pair<long long, long long>> out;
    for (const auto &q : points_) out.push_back(point_class(q));
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<std::pair<long long, long long>> canonical_surfaces() const {
    std::vector<std::pair<long long, long long>> out;
    for (const auto &s : surfaces_) {
      long long c = ((s.c % p_) + p_) % p_;
      out.emplace_back(std::min(c, p_ - c), s.self_int);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const FixedPointData &x, const FixedPointData &y) {
    return x.p_ == y.p_ && x.canonical_points() == y.canonical_points() &&
           x.canonical_surfaces() == y.canonical_surfaces();
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (auto [a, b] : canonical_points()) {
      if (!first) s += ",";
      first = false;
      s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
    for (auto [c, si] : canonical_surfaces()) {
      if (!first) s += ",";
      first = false;
      s += "[" + std::to_string(c) + ";" + std::to_string(si) + "]";
    }
    return s + "}";
  }

private:
  long long p_ = 3;
  std::vector<FixedPoint> points_;
  std::vector<FixedSurface> surfaces_;
};

// ---------------------------------------------------------------------------
// The signature-defect vector S(X,tau)_l, l = 0..p-1.

namespace detail {

// weighted exponent list over zeta_{2P} for 1/(zeta_P^m - 1) = (1/t) sum k w^k
inline void inverse_factor(long long m, long long P, std::vector<std::pair<long long, long long>> &terms,
                           long long &den) {
  long long M = 2 * P;
  long long t = P / gcd_ll(((m % P) + P) % P, P);
  den = t;
  terms.clear();
  for (long long k = 1; k < t; ++k) terms.emplace_back(((2 * m * k) % M + M) % M, k);
}

// accumulate scale * zeta^{shift} * f1 * f2 into acc (index = exponent mod 2P)
inline void convolve_into(std::vector<Rational> &acc, long long P,
                          const std::vector<std::pair<long long, long long>> &f1,
                          const std::vector<std::pair<long long, long long>> &f2,
                          long long shift, const Rational &scale) {
  long long M = 2 * P;
  std::vector<__int128> conv(static_cast<size_t>(M), 0);
  shift = ((shift % M) + M) % M;
  for (auto &[e1, w1] : f1)
    for (auto &[e2, w2] : f2) {
      long long e = e1 + e2 + shift;
      e %= M;
      conv[static_cast<size_t>(e)] += static_cast<__int128>(w1) * w2;
    }
  for (long long e = 0; e < M; ++e)
    if (conv[static_cast<size_t>(e)] != 0)
      acc[static_cast<size_t>(e)] +=
          scale * Rational(BigInt(static_cast<long long>(conv[static_cast<size_t>(e)])));
}

inline Rational collapse(const std::vector<Rational> &acc, long long P) {
  Cyclotomic v;
  for (long long e = 0; e < 2 * P; ++e)
    if (!acc[static_cast<size_t>(e)].is_zero())
      v += Cyclotomic::monomial(2 * P, e, acc[static_cast<size_t>(e)]);
  return v.as_rational();
}

} // namespace detail

// S(X,tau)_l = sigma/p + (2/p) sum_points sum_k (-1)^{k(a+b+l)} e^{-pi ikl/p} csc csc
//            + (2/p) sum_surfaces sum_k (-1)^{k(c+l)} [S]^2 e^{-pi ikl/p} csc cot
inline std::vector<Rational> sigma_vector(const FixedPointData &d, long long sigma_X) {
  long long p = d.p();
  std::vector<Rational> out;
  std::vector<std::pair<long long, long long>> f1, f2, cotf;
  long long t1, t2;
  for (long long l = 0; l < p; ++l) {
    std::vector<Rational> acc(static_cast<size_t>(2 * p));
    for (const auto &q : d.points()) {
      for (long long k = 1; k < p; ++k) {
        detail::inverse_factor(k * q.a, p, f1, t1);
        detail::inverse_factor(k * q.b, p, f2, t2);
        // csc csc = -4 zeta^{k(a+b)} inv1 inv2
        Rational scale(-4 * 2, p); // includes the leading 2/p
        scale = scale / Rational(t1 * t2);
        long long sgn = (k * (q.a + q.b + l)) % 2;
        if (sgn) scale = -scale;
        detail::convolve_into(acc, p, f1, f2, k * (q.a + q.b) - k * l, scale);
      }
    }
    for (const auto &s : d.surfaces()) {
      for (long long k = 1; k < p; ++k) {
        detail::inverse_factor(k * s.c, p, f1, t1);
        detail::inverse_factor(k * s.c, p, f2, t2);
        // cot = i (w+1) inv: weighted terms (2mk shifts) plus the same shifted by 2m
        cotf.clear();
        long long M = 2 * p, m = ((k * s.c) % M + M) % M;
        for (auto &[e, w] : f2) {
          cotf.emplace_back(e, w);
          cotf.emplace_back((e + 2 * m) % M, w);
        }
        // csc cot = (2i)(i) zeta^{m} inv1 (w+1) inv2 = -2 zeta^m ...
        Rational scale(-2 * 2 * s.self_int, p);
        scale = scale / Rational(t1 * t2);
        long long sgn = (k * (s.c + l)) % 2;
        if (sgn) scale = -scale;
        detail::convolve_into(acc, p, f1, cotf, m - k * l, scale);
      }
    }
    Rational val = Rational(sigma_X, p) + detail::collapse(acc, p);
    out.push_back(val);
  }
  Rational total;
  for (const auto &v : out) total += v;
  if (total != Rational(sigma_X)) throw error("sigma-defect vector does not sum to sigma(X)");
  return out;
}

// Independent route for the 0-component on pseudofree data:
// S_0 = sigma/p + sum 2 S(a,b,p;(-1)^{a+b})
inline Rational sigma0_via_cosecant(const FixedPointData &d, long long sigma_X) {
  if (!d.pseudofree()) throw surfaces_present("cosecant route needs pseudofree data");
  Rational acc(sigma_X, d.p());
  for (const auto &q : d.points()) {
    CosecantSumSpec spec{q.a, q.b, d.p(), (q.a + q.b) % 2 == 0 ? 1 : -1};
    Rational s;
    try {
      s = cosecant_sum_reciprocity(spec);
    } catch (const parity_obstruction &) {
      s = cosecant_sum_brute(spec);
    }
    acc += Rational(2) * s;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Equivariant manifold bookkeeping and stabilizations.

struct EquivariantManifoldData {
  long long sigma = 0;
  std::vector<long long> b2_plus_vector; // p slots
  FixedPointData fpd;
  std::string name;

  long long p() const { return fpd.p(); }
  long long b2_plus() const {
    long long t = 0;
    for (long long v : b2_plus_vector) t += v;
    return t;
  }
  bool homologically_trivial() const { return b2_plus_vector[0] == b2_plus(); }
};

// connected sum with (S^2 x S^2, tau_{a,b}) at a fixed point of type (a,b):
// consumes one (a,b), contributes {(a,b),(a,b),(-a,b)}
inline FixedPointData ht_stabilize(const FixedPointData &d, long long a, long long b) {
  auto target = d.point_class({a, b});
  std::vector<FixedPoint> pts = d.points();
  auto it = std::find_if(pts.begin(), pts.end(),
                         [&](const FixedPoint &q) { return d.point_class(q) == target; });
  if (it == pts.end())
    throw no_such_fixed_point("no fixed point of type (" + std::to_string(a) + "," +
                              std::to_string(b) + ")");
  pts.erase(it);
  pts.push_back({a, b});
  pts.push_back({a, b});
  pts.push_back({-a, b});
  return FixedPointData(d.p(), std::move(pts), d.surfaces());
}

inline EquivariantManifoldData ht_stabilize(const EquivariantManifoldData &m, long long a,
                                            long long b) {
  EquivariantManifoldData out = m;
  out.fpd = ht_stabilize(m.fpd, a, b);
  out.b2_plus_vector[0] += 1; // the new hyperbolic pair carries a trivial-character +-class
  return out;
}

// N-fold free stabilization: one +-class in every character slot per round
inline EquivariantManifoldData free_stabilize(const EquivariantManifoldData &m, long long N) {
  if (N < 0) throw error("free stabilization count must be >= 0");
  EquivariantManifoldData out = m;
  for (auto &v : out.b2_plus_vector) v += N;
  return out;
}

// ---------------------------------------------------------------------------
// The relative 10/8-ths inequality engine.

enum class Verdict { excluded, not_excluded, hypotheses_unmet };

inline std::string verdict_name(Verdict v) {
  switch (v) {
  case Verdict::excluded: return "excluded";
  case Verdict::not_excluded: return "not-excluded";
  case Verdict::hypotheses_unmet: return "hypotheses-unmet";
  }
  return "?";
}

inline long long filling_constant(long long b2_tau_0) {
  if (b2_tau_0 == 0) return 0;
  return (b2_tau_0 % 2 != 0) ? 1 : 2;
}

struct FillingElementCheck {
  PosetVector kappa; // (kappa_0, kappa_1)
  bool ineq0 = false;
  bool ineq1 = false;
};

struct FillingReport {
  Rational S0;
  long long C = 0;
  std::vector<FillingElementCheck> elements;
  bool excluded = false; // some element fails one of the two inequalities
};

// Check the two filling inequalities against every element of K^pi; a smooth
// homologically-trivial extension is excluded when any element fails.
inline FillingReport check_filling(const EquivariantManifoldData &m,
                                   const std::vector<PosetVector> &kappa_projected) {
  for (size_t k = 1; k < m.b2_plus_vector.size(); ++k)
    if (m.b2_plus_vector[k] % 2 != 0)
      throw parity_hypothesis_violated("b2+(X,tau)_k must be even for k >= 1");
  FillingReport rep;
  rep.S0 = sigma_vector(m.fpd, m.sigma)[0];
  rep.C = filling_constant(m.b2_plus_vector[0]);
  for (const auto &kv : kappa_projected) {
    if (kv.dim() != 2) throw index_out_of_range("projected kappa elements live in Q^2");
    FillingElementCheck ec;
    ec.kappa = kv;
    Rational lhs0 = Rational(m.b2_plus_vector[0]) + kv.entries[0];
    ec.ineq0 = lhs0 >= -Rational(1, 8) * rep.S0 + Rational(rep.C);
    Rational lhs1 = Rational(m.b2_plus() - m.b2_plus_vector[0]) + kv.entries[1];
    ec.ineq1 = lhs1 >= -Rational(m.sigma, 8) + Rational(1, 8) * rep.S0;
    if (!ec.ineq0 || !ec.ineq1) rep.excluded = true;
    rep.elements.push_back(ec);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Catalog of the spin fillings and Milnor-fiber cobordisms used by the
// non-extension results.  kappa values of the bounding spheres come from the
// grading of the computed kappa sets: kappa(+Y) = 2 - n(Y) for the 12n-1 and
// 12n-5 families, -n(Y) for the Floer-split 12n+1, 12n+5 families, and
// kappa(-Y) = n(Y), where n(Y) is the total correction term.

struct ManifoldCatalogEntry {
  std::string name;
  long long sigma = 0;
  long long b2_plus = 0;
  BrieskornFamily boundary_family;
  long long boundary_n = 0;
  bool boundary_minus = false; // boundary is -Sigma(...) when true
  Rational kappa_boundary;
  bool boundary_g_split = false;    // Floer split as an equivariant sphere
  bool boundary_pin2_split = false; // split for the plain Pin(2) theory
};

inline bool family_is_split(BrieskornFamily f) {
  return f == BrieskornFamily::plus5 || f == BrieskornFamily::plus1;
}

// total correction term n(Y) for Y = Sigma(2,3,12n+c), computed with the
// smallest admissible order
inline Rational family_n_total(BrieskornFamily f, long long n) {
  long long fiber = third_fiber(f, n);
  long long r = 5;
  while (!is_prime_ll(r) || gcd_ll(r, 6 * fiber) != 1) ++r;
  return correction_total(brieskorn(f, n), r);
}

inline Rational kappa_of_sphere(BrieskornFamily f, long long n, bool minus_side) {
  Rational nY = family_n_total(f, n);
  if (minus_side) return nY;
  return family_is_split(f) ? -nY : Rational(2) - nY;
}

namespace catalog {

inline ManifoldCatalogEntry nucleus(long long n, bool stabilized = false) {
  ManifoldCatalogEntry e;
  e.name = stabilized ? "N(" + std::to_string(2 * n) + ")#S2xS2" : "N(" + std::to_string(2 * n) + ")";
  e.sigma = 0;
  e.b2_plus = stabilized ? 2 : 1;
  e.boundary_family = BrieskornFamily::minus1;
  e.boundary_n = n;
  e.boundary_minus = true;
  e.kappa_boundary = kappa_of_sphere(e.boundary_family, n, true);
  e.boundary_g_split = false;
  e.boundary_pin2_split = false;
  return e;
}

inline ManifoldCatalogEntry plumbing(long long n, bool stabilized = false) {
  ManifoldCatalogEntry e;
  e.name = stabilized ? "P(" + std::to_string(2 * n) + ")#S2xS2" : "P(" + std::to_string(2 * n) + ")";
  e.sigma = -8;
  e.b2_plus = stabilized ? 2 : 1;
  e.boundary_family = BrieskornFamily::minus5;
  e.boundary_n = n;
  e.boundary_minus = true;
  e.kappa_boundary = kappa_of_sphere(e.boundary_family, n, true);
  e.boundary_g_split = false;
  e.boundary_pin2_split = false;
  return e;
}

// intersection forms of the Milnor fibers M(2,3,12n+c): -kE8 + mH
inline std::pair<long long, long long> milnor_form(BrieskornFamily f, long long n) {
  switch (f) {
  case BrieskornFamily::plus5: return {2 * n + 1, 4 * n};
  case BrieskornFamily::minus5: return {2 * n - 1, 4 * n - 2};
  case BrieskornFamily::minus1: return {2 * n, 4 * n - 2};
  case BrieskornFamily::plus1: return {2 * n, 4 * n};
  }
  throw error("bad family");
}

inline ManifoldCatalogEntry milnor(long long fiber) {
  long long n = 0;
  BrieskornFamily f = family_of_fiber(fiber, n);
  auto [k, m] = milnor_form(f, n);
  ManifoldCatalogEntry e;
  e.name = "M(2,3," + std::to_string(fiber) + ")";
  e.sigma = -8 * k;
  e.b2_plus = m;
  e.boundary_family = f;
  e.boundary_n = n;
  e.boundary_minus = false;
  e.kappa_boundary = kappa_of_sphere(f, n, false);
  e.boundary_g_split = family_is_split(f);
  e.boundary_pin2_split = family_is_split(f);
  return e;
}

} // namespace catalog

// Manolescu's relative 10/8-ths inequality, sharp case:
// b2+(X) + kappa(Y) = -sigma(X)/8 + C(b2+(X))
inline std::pair<bool, long long> sharpness(const ManifoldCatalogEntry &e) {
  long long C = filling_constant(e.b2_plus);
  bool sharp =
      Rational(e.b2_plus) + e.kappa_boundary == -Rational(e.sigma, 8) + Rational(C);
  return {sharp, C};
}

// Non-extension verdict for a filling: sharp 10/8 plus at least two
// equal-graded elements in K^pi of the boundary.
inline bool nonextension_verdict(const ManifoldCatalogEntry &e, long long p) {
  auto [sharp, C] = sharpness(e);
  (void)C;
  if (!sharp) return false;
  bool multiple =
      has_multiple_elements(e.boundary_family, e.boundary_n, p, e.boundary_minus);
  if (!multiple) return false;
  // equal-grading check wherever the kappa set is computable
  if (p >= 5 && gcd_ll(p, 6 * third_fiber(e.boundary_family, e.boundary_n)) == 1) {
    KappaSet K = kappa_set(e.boundary_family, e.boundary_n, p, e.boundary_minus);
    if (K.grading() != e.kappa_boundary) throw error("kappa grading mismatch vs catalog");
  }
  return true;
}

// ---------------------------------------------------------------------------
// Stabilization bounds.

struct StabilizationBound {
  long long certified = 0;          // non-smoothable for all 0 <= N <= certified
  long long smoothable_only_if = 0; // raw inequality threshold on N
};

enum class StabilizationFamily { nucleus, plumbing };

inline StabilizationBound min_free_stabilizations(StabilizationFamily f, long long n,
                                                  long long p) {
  if (p < 5 || !is_prime_ll(p)) throw outside_classified_range("p must be a prime >= 5");
  if (n < 1) throw outside_classified_range("n >= 1");
  StabilizationBound b;
  b.certified = 2 * n - 2;
  long long num = (f == StabilizationFamily::nucleus) ? 2 * p * n - 2 * n : 2 * p * n - 2 * n - 2;
  b.smoothable_only_if = (num + (p - 1) - 1) / (p - 1); // ceil
  return b;
}

// ---------------------------------------------------------------------------
// Z[Z/p] h-cobordism criterion for Seifert quotients vs generalized lens spaces.

struct HCobordismReport {
  bool product_congruence = false; // a1 a2 a3 = ab (mod p)
  bool triple_congruence = false;  // {a1,a2,a3} = {a,b,1} (mod p) up to sign
  bool alpha_equal = false;        // exact cyclotomic equality of alpha invariants
  bool ok() const { return product_congruence && triple_congruence && alpha_equal; }
};

inline HCobordismReport h_cobordism_check(const SeifertData &Y, long long p,
                                          const LensSpaceData &L) {
  if (Y.fiber_count() != 3) throw error("h-cobordism criterion wants a Brieskorn triple");
  if (L.p != p) throw error("lens space order must match p");
  for (long long a : Y.alphas())
    if (gcd_ll(a, p) != 1) throw not_coprime("p must be coprime to the fibers");
  HCobordismReport rep;
  const auto &al = Y.alphas();
  auto norm = [&](long long v) { return ((v % p) + p) % p; };
  rep.product_congruence = norm(al[0] * al[1] * al[2]) == norm(L.a * L.b);

  std::array<long long, 3> lhs{al[0], al[1], al[2]}, rhs{L.a, L.b, 1};
  std::sort(lhs.begin(), lhs.end());
  bool found = false;
  std::array<int, 3> perm{0, 1, 2};
  std::array<long long, 3> lhs_idx{0, 1, 2};
  do {
    bool all = true;
    for (int i = 0; i < 3; ++i) {
      long long x = norm(lhs[static_cast<size_t>(lhs_idx[static_cast<size_t>(perm[static_cast<size_t>(i)])])]);
      long long y = norm(rhs[static_cast<size_t>(i)]);
      if (x != y && x != norm(-y)) all = false;
    }
    if (all) found = true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  rep.triple_congruence = found;

  rep.alpha_equal = alpha_invariant_seifert(Y, p) == alpha_invariant_lens(L);
  return rep;
}

// ---------------------------------------------------------------------------
// The equivariant E8 # S^2xS^2 construction.

// Orientation-reversed CP^2 with the linear action of weights (a,b,c):
// fixed-point data {(a-c, c-b), (b-a, a-c), (a-b, b-c)}.
inline std::vector<FixedPoint> cp2_bar_points(long long a, long long b, long long c) {
  return {{a - c, c - b}, {b - a, a - c}, {a - b, b - c}};
}

// Fixed-point data of the homologically trivial pseudofree Z/p action on
// -E8 # S^2 x S^2 built from eight reversed CP^2 summands joined along seven
// cancelling pairs, followed by one homologically trivial stabilization at a
// point of type (-2,3).
inline FixedPointData e8_fixed_point_data(long long p, long long *cancelling_pairs = nullptr) {
  if (p < 5 || !is_prime_ll(p)) throw error("construction needs a prime p >= 5");
  struct Tagged {
    FixedPoint pt;
    int copy;
    bool used = false;
  };
  std::vector<Tagged> pts;
  for (int i = 1; i <= 8; ++i) {
    long long R = i % (p - 3);
    for (const auto &q : cp2_bar_points(-1, R, R + 1)) pts.push_back({q, i});
  }
  FixedPointData scratch(p, {}); // for the equivalence helpers
  auto cls = [&](const FixedPoint &q) { return scratch.point_class(q); };
  auto cancels = [&](const FixedPoint &x, const FixedPoint &y) {
    return cls({-x.a, x.b}) == cls(y);
  };
  // join the eight summands along a path, consuming one cancelling pair per link
  long long pairs = 0;
  for (int i = 1; i <= 7; ++i) {
    bool linked = false;
    for (size_t u = 0; u < pts.size() && !linked; ++u) {
      if (pts[u].copy != i || pts[u].used) continue;
      for (size_t v = 0; v < pts.size() && !linked; ++v) {
        if (pts[v].copy != i + 1 || pts[v].used) continue;
        if (cancels(pts[u].pt, pts[v].pt)) {
          pts[u].used = pts[v].used = true;
          ++pairs;
          linked = true;
        }
      }
    }
    if (!linked) throw error("equivariant connected sum failed to link copies");
  }
  if (cancelling_pairs) *cancelling_pairs = pairs;
  std::vector<FixedPoint> remaining;
  for (const auto &t : pts)
    if (!t.used) remaining.push_back(t.pt);
  if (remaining.size() != 10) throw error("expected ten fixed points after cancellation");
  FixedPointData e8(p, remaining);
  // homologically trivial stabilization at a (-2,3) point
  return ht_stabilize(e8, -2, 3);
}

// the fixed-point data of tau'_{p,n} on P(2pn-p+1): the E8 construction with
// one point of type (2,3) consumed by the equivariant boundary sum
inline FixedPointData p_family_fixed_point_data(long long p) {
  FixedPointData d = e8_fixed_point_data(p);
  auto target = d.point_class({2, 3});
  std::vector<FixedPoint> pts = d.points();
  auto it = std::find_if(pts.begin(), pts.end(),
                         [&](const FixedPoint &q) { return d.point_class(q) == target; });
  if (it == pts.end()) throw error("construction lost its (2,3) point");
  pts.erase(it);
  return FixedPointData(p, std::move(pts));
}

// the fixed-point data of tau_{p,n} on N(2pn)
inline FixedPointData n_family_fixed_point_data(long long p) {
  return FixedPointData(p, {{2, 3}, {2, 3}, {-2, 3}});
}

// ---------------------------------------------------------------------------
// Comparing (1/8) S_0 with the p/2-component of the correction term.

struct ComparingResult {
  Rational lhs;    // (1/8) S_0(X, tau)
  Rational rhs;    // n_{p/2}(-Sigma(...))
  Rational offset; // lhs - rhs
};

inline Rational expected_comparing_offset(StabilizationFamily f, long long p) {
  if (f == StabilizationFamily::nucleus) return Rational(0);
  if (p == 5) return Rational(4);
  if (p == 7) return Rational(0);
  long long m = p % 20;
  if (m == 13 || m == 17) return Rational(2);
  if (m == 1 || m == 9 || m == 11 || m == 19) return Rational(0);
  return Rational(-2); // p = 3, 7 (mod 20), p != 7
}

inline ComparingResult comparing_identity(StabilizationFamily f, long long n, long long p) {
  if (p < 5 || !is_prime_ll(p)) throw outside_classified_range("p must be a prime >= 5");
  ComparingResult res;
  if (f == StabilizationFamily::nucleus) {
    res.lhs = Rational(1, 8) * sigma_vector(n_family_fixed_point_data(p), 0)[0];
    res.rhs = -correction_term(SeifertData({2, 3, 12 * p * n - 1}), p, Rational(p, 2));
  } else {
    res.lhs = Rational(1, 8) * sigma_vector(p_family_fixed_point_data(p), -8)[0];
    res.rhs = -correction_term(SeifertData({2, 3, 12 * p * n - 6 * p + 1}), p, Rational(p, 2));
  }
  res.offset = res.lhs - res.rhs;
  if (res.offset != expected_comparing_offset(f, p))
    throw error("comparing identity offset differs from the classified table");
  return res;
}

// ---------------------------------------------------------------------------
// Cobordism variants of the inequality engine.

inline long long cobordism_constant(long long b2_tau_0, bool y0_split) {
  if (!y0_split) return (b2_tau_0 % 2 != 0) ? -1 : 0;
  return filling_constant(b2_tau_0);
}

// Sharpness of the relative 10/8-ths inequality for a cobordism:
// b2+(X) + kappa(Y1) = -sigma(X)/8 + kappa(Y0) + C'
inline std::pair<bool, long long> cobordism_sharpness(long long b2_plus, long long sigma,
                                                      const Rational &kappa0,
                                                      const Rational &kappa1,
                                                      bool y0_pin2_split) {
  long long C = cobordism_constant(b2_plus, y0_pin2_split);
  bool sharp =
      Rational(b2_plus) + kappa1 == -Rational(sigma, 8) + kappa0 + Rational(C);
  return {sharp, C};
}

struct CobordismElementCheck {
  PosetVector kappa0, kappa1;
  bool forward = false;  // ineq0 <= bound implies ineq1 >= bound
  bool backward = false; // ineq1 <= bound implies ineq0 >= bound
};

struct CobordismReport {
  Rational S0;
  long long C = 0;
  std::vector<CobordismElementCheck> elements;
  bool implications_hold = true;
  bool existential_holds = false; // item (2): some kappa1 making both inequalities hold
};

// Both implication directions of the cobordism inequality, evaluated over
// K^pi(Y0) x K^pi(Y1), plus the existential clause.
inline CobordismReport check_cobordism(const EquivariantManifoldData &m, bool y0_split,
                                       const std::vector<PosetVector> &kappa0_proj,
                                       const std::vector<PosetVector> &kappa1_proj) {
  for (size_t k = 1; k < m.b2_plus_vector.size(); ++k)
    if (m.b2_plus_vector[k] % 2 != 0)
      throw parity_hypothesis_violated("b2+(X,tau)_k must be even for k >= 1");
  CobordismReport rep;
  rep.S0 = sigma_vector(m.fpd, m.sigma)[0];
  rep.C = cobordism_constant(m.b2_plus_vector[0], y0_split);
  rep.existential_holds = true;
  for (const auto &k0 : kappa0_proj) {
    bool exists_for_this_k0 = false;
    for (const auto &k1 : kappa1_proj) {
      CobordismElementCheck ec;
      ec.kappa0 = k0;
      ec.kappa1 = k1;
      Rational lhs0 = Rational(m.b2_plus_vector[0]) + k1.entries[0];
      Rational bound0 = -Rational(1, 8) * rep.S0 + k0.entries[0] + Rational(rep.C);
      Rational lhs1 = Rational(m.b2_plus() - m.b2_plus_vector[0]) + k1.entries[1];
      Rational bound1 = -Rational(m.sigma, 8) + Rational(1, 8) * rep.S0 + k0.entries[1];
      ec.forward = !(lhs0 <= bound0) || (lhs1 >= bound1);
      ec.backward = !(lhs1 <= bound1) || (lhs0 >= bound0);
      if (!ec.forward || !ec.backward) rep.implications_hold = false;
      if (lhs0 >= bound0 && lhs1 >= bound1) exists_for_this_k0 = true;
      rep.elements.push_back(ec);
    }
    if (!exists_for_this_k0) rep.existential_holds = false;
  }
  return rep;
}

// Non-extension over the complement of M(2,3,m0) in M(2,3,m1): sharpness of
// the relative inequality plus a split side paired with a multiple-element
// side, per the cobordism analogue of the filling criterion.
inline bool nonextension_cobordism_verdict(long long m0, long long m1, long long p) {
  if (p < 3 || !is_prime_ll(p)) throw outside_classified_range("p must be an odd prime");
  ManifoldCatalogEntry e0 = catalog::milnor(m0), e1 = catalog::milnor(m1);
  long long b2 = e1.b2_plus - e0.b2_plus;
  long long sigma = e1.sigma - e0.sigma;
  if (b2 < 0) throw error("not a Milnor-fiber complement");
  auto [sharp, C] =
      cobordism_sharpness(b2, sigma, e0.kappa_boundary, e1.kappa_boundary, e0.boundary_pin2_split);
  (void)C;
  if (!sharp) return false;
  bool cond_a = e0.boundary_g_split &&
                has_multiple_elements(e1.boundary_family, e1.boundary_n, p, false);
  bool cond_b = e1.boundary_g_split &&
                has_multiple_elements(e0.boundary_family, e0.boundary_n, p, false);
  return cond_a || cond_b;
}

} // namespace sfk

#endif
