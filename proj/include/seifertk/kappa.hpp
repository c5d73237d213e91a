#ifndef SEIFERTK_KAPPA_HPP
#define SEIFERTK_KAPPA_HPP

#include <algorithm>
#include <vector>

#include "seifertk/eta.hpp"

namespace sfk {

// Vector in Q^n carrying the product partial order and the grading |v| = sum.
struct PosetVector {
  std::vector<Rational> entries;

  PosetVector() = default;
  explicit PosetVector(size_t dim) : entries(dim) {}
  explicit PosetVector(std::vector<Rational> e) : entries(std::move(e)) {}
  static PosetVector of(std::initializer_list<Rational> e) {
    return PosetVector(std::vector<Rational>(e));
  }

  size_t dim() const { return entries.size(); }

  Rational grading() const {
    Rational g;
    for (const auto &e : entries) g += e;
    return g;
  }

  bool leq(const PosetVector &o) const {
    if (dim() != o.dim()) throw index_out_of_range("dimension mismatch in poset order");
    for (size_t i = 0; i < entries.size(); ++i)
      if (entries[i] > o.entries[i]) return false;
    return true;
  }

  friend PosetVector operator+(const PosetVector &a, const PosetVector &b) {
    if (a.dim() != b.dim()) throw index_out_of_range("dimension mismatch");
    PosetVector r(a.dim());
    for (size_t i = 0; i < a.dim(); ++i) r.entries[i] = a.entries[i] + b.entries[i];
    return r;
  }
  friend PosetVector operator-(const PosetVector &a, const PosetVector &b) {
    if (a.dim() != b.dim()) throw index_out_of_range("dimension mismatch");
    PosetVector r(a.dim());
    for (size_t i = 0; i < a.dim(); ++i) r.entries[i] = a.entries[i] - b.entries[i];
    return r;
  }
  PosetVector operator-() const {
    PosetVector r(dim());
    for (size_t i = 0; i < dim(); ++i) r.entries[i] = -entries[i];
    return r;
  }
  friend PosetVector operator*(const Rational &s, const PosetVector &v) {
    PosetVector r(v.dim());
    for (size_t i = 0; i < v.dim(); ++i) r.entries[i] = s * v.entries[i];
    return r;
  }
  friend bool operator==(const PosetVector &a, const PosetVector &b) {
    return a.entries == b.entries;
  }
  friend bool operator<(const PosetVector &a, const PosetVector &b) {
    // lexicographic, for deterministic set output only
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (size_t i = 0; i < a.dim(); ++i) {
      if (a.entries[i] < b.entries[i]) return true;
      if (b.entries[i] < a.entries[i]) return false;
    }
    return false;
  }

  static PosetVector basis(size_t dim, size_t i, const Rational &c = Rational(1)) {
    if (i >= dim) throw index_out_of_range("basis index");
    PosetVector r(dim);
    r.entries[i] = c;
    return r;
  }

  std::string to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < entries.size(); ++i) {
      if (i) s += ",";
      s += entries[i].to_string();
    }
    return s + ")";
  }
};

enum class DoublingKind { even, odd };

// The doubling maps: e_i -> e_{2i} or e_{2i-p} (even, integer slots), and
// e_{(2i+1)/2} -> e_{2i+1} or e_{2i+1-p} (odd, half-integer slots i = 0..p-1).
inline PosetVector doubling_map(DoublingKind kind, const PosetVector &v, long long p) {
  if (static_cast<long long>(v.dim()) != p)
    throw index_out_of_range("doubling input must have dimension p");
  PosetVector out(static_cast<size_t>(p));
  for (long long i = 0; i < p; ++i) {
    long long target = (kind == DoublingKind::even) ? (2 * i) % p : (2 * i + 1) % p;
    out.entries[static_cast<size_t>(target)] += v.entries[static_cast<size_t>(i)];
  }
  return out;
}

// projection (a_0, ..., a_{p-1}) -> (a_0, a_1 + ... + a_{p-1})
inline PosetVector poset_project(const PosetVector &v) {
  PosetVector out(2);
  if (v.dim() == 0) return out;
  out.entries[0] = v.entries[0];
  for (size_t i = 1; i < v.dim(); ++i) out.entries[1] += v.entries[i];
  return out;
}

struct NVector {
  PosetVector full;      // in Q^p
  PosetVector projected; // in Q^2
  NVector negated() const { return {-full, -projected}; }
};

// n(Y,p) = D^*(correction vector as an R(Z_2p)-weight vector), projected copy included.
inline NVector n_vector(const SeifertData &Y, long long p) {
  CorrectionVector v = correction_vector(Y, p);
  PosetVector full(static_cast<size_t>(p));
  for (const auto &[L, nL] : v.entries) {
    long long twoL = (Rational(2) * L).num().to_ll();
    full.entries[static_cast<size_t>(((twoL % p) + p) % p)] += nL;
  }
  return {full, poset_project(full)};
}

// A_{n,p,j} = #{1 <= k <= n : 12k = 11 - j (mod p)}
inline long long count_A(long long n, long long p, long long j) {
  if (n < 0 || j < 0 || j >= p) throw index_out_of_range("count_A arguments");
  long long c = 0;
  for (long long k = 1; k <= n; ++k)
    if (((12 * k - (11 - j)) % p + p) % p == 0) ++c;
  return c;
}

// B_{n,p,j} = #{1 <= k <= n : 12k = 7 - j (mod p)}
inline long long count_B(long long n, long long p, long long j) {
  if (n < 0 || j < 0 || j >= p) throw index_out_of_range("count_B arguments");
  long long c = 0;
  for (long long k = 1; k <= n; ++k)
    if (((12 * k - (7 - j)) % p + p) % p == 0) ++c;
  return c;
}

inline bool is_prime_ll(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace detail {

inline void check_family_domain(BrieskornFamily f, long long n, long long p) {
  long long min_n = (f == BrieskornFamily::plus5) ? 0 : 1;
  if (n < min_n) throw outside_classified_range("n out of range for " + family_name(f));
  if (p < 3 || !is_prime_ll(p) || p % 2 == 0)
    throw outside_classified_range("p must be an odd prime");
}

} // namespace detail

// Cardinality criterion for the kappa sets of +-Sigma(2,3,12n-+5), 12n-+1.
inline bool has_multiple_elements(BrieskornFamily f, long long n, long long p, bool minus_side) {
  detail::check_family_domain(f, n, p);
  switch (f) {
  case BrieskornFamily::plus5:
  case BrieskornFamily::plus1:
    return false; // Floer split: singleton on both sides
  case BrieskornFamily::minus5:
    if (!minus_side) return p == 3 || (p >= 5 && n == 1) || (n == 2 && p == 7);
    return true;
  case BrieskornFamily::minus1:
    if (!minus_side) return p == 3 || (p >= 7 && n == 1) || (n == 2 && p == 11);
    return !(n == 1 && p == 5);
  }
  throw error("bad family");
}

// The kappa-invariant set of (+-Sigma(2,3,12n+c), standard Z/p action).
// Representatives are pre-quotient vectors in Q^p; for the minus-side
// families with infinitely many representatives, a canonical finite slice
// realizing every projected value is stored, together with the bound vector
// that cuts out the full representative set.
struct KappaSet {
  BrieskornFamily family;
  long long n = 0, p = 0;
  bool minus_side = false;
  std::vector<PosetVector> representatives; // dim p
  std::vector<PosetVector> projected;       // dim 2, deduplicated, sorted
  std::vector<long long> bound;             // minus side: a >= (0,-X_1,...,-X_{p-1}), |a|=0
  NVector n_vec;                            // n(Y,p) of the +oriented sphere

  // grading shared by every element (checked during construction)
  Rational grading() const {
    if (representatives.empty()) throw error("empty kappa set");
    return representatives.front().grading();
  }

  // is 2a + n(Y,p) with the stated constraints? (minus side only)
  bool is_valid_representative(const PosetVector &v) const {
    if (bound.empty()) {
      for (const auto &r : representatives)
        if (r == v) return true;
      return false;
    }
    PosetVector a = Rational(1, 2) * (v - n_vec.full);
    if (!a.grading().is_zero()) return false;
    if (a.entries[0] < Rational(0)) return false;
    for (size_t j = 1; j < a.dim(); ++j)
      if (a.entries[j] < Rational(-bound[j])) return false;
    return true;
  }
};

inline KappaSet kappa_set(BrieskornFamily f, long long n, long long p, bool minus_side) {
  detail::check_family_domain(f, n, p);
  if (p < 5) throw outside_classified_range("kappa sets are computed for p >= 5");
  long long fiber = third_fiber(f, n);
  if (gcd_ll(p, 6 * fiber) != 1)
    throw outside_classified_range("p must be coprime to 6 and to the third fiber");

  KappaSet K;
  K.family = f;
  K.n = n;
  K.p = p;
  K.minus_side = minus_side;
  K.n_vec = n_vector(brieskorn(f, n), p);
  const PosetVector &nv = K.n_vec.full;
  size_t P = static_cast<size_t>(p);

  auto push_plus = [&](std::vector<long long> idx) {
    for (long long j : idx)
      K.representatives.push_back(PosetVector::basis(P, static_cast<size_t>(j), Rational(2)) -
                                  nv);
  };

  if (f == BrieskornFamily::plus5 || f == BrieskornFamily::plus1) {
    K.representatives.push_back(minus_side ? nv : -nv);
  } else if (!minus_side) {
    bool three;
    std::vector<long long> idx;
    if (f == BrieskornFamily::minus5) {
      three = (n == 1) || (n == 2 && p == 7);
      idx = {0, 1, p - 1};
    } else {
      three = (n == 1 && p >= 7) || (n == 2 && p == 11);
      idx = {0, 5, p - 5};
    }
    push_plus(three ? idx : std::vector<long long>{0});
  } else {
    // minus side: bound vector from the counting functions
    K.bound.resize(P);
    for (long long j = 0; j < p; ++j)
      K.bound[static_cast<size_t>(j)] =
          (f == BrieskornFamily::minus5) ? count_A(n, p, j) : count_B(n, p, j);
    long long kmax = n - K.bound[0];
    for (long long k = 0; k <= kmax; ++k) {
      // canonical slice element: a_0 = k, then greedily lower the later slots
      PosetVector a(P);
      a.entries[0] = Rational(k);
      long long remaining = k;
      for (size_t j = 1; j < P && remaining > 0; ++j) {
        long long take = std::min(remaining, K.bound[j]);
        a.entries[j] = Rational(-take);
        remaining -= take;
      }
      if (remaining != 0) throw error("representative slice construction failed");
      K.representatives.push_back(Rational(2) * a + nv);
    }
  }

  for (const auto &r : K.representatives) K.projected.push_back(poset_project(r));
  std::sort(K.projected.begin(), K.projected.end());
  K.projected.erase(std::unique(K.projected.begin(), K.projected.end()), K.projected.end());

  // every element of a classified set shares one grading
  Rational g = K.representatives.front().grading();
  for (const auto &r : K.representatives)
    if (r.grading() != g) throw error("kappa set grading mismatch");
  return K;
}

} // namespace sfk

#endif
