#ifndef SEIFERTK_SEIFERT_HPP
#define SEIFERTK_SEIFERT_HPP

#include <string>
#include <vector>

#include "seifertk/rational.hpp"

namespace sfk {

// Seifert-fibered integer homology sphere, given by its exceptional fiber
// multiplicities (alpha_1,...,alpha_n), pairwise coprime and >= 2.
class SeifertData {
public:
  SeifertData() = default;
  explicit SeifertData(std::vector<long long> alphas) : alphas_(std::move(alphas)) {
    for (size_t i = 0; i < alphas_.size(); ++i) {
      if (alphas_[i] < 2) throw error("fiber multiplicities must be >= 2");
      for (size_t j = i + 1; j < alphas_.size(); ++j)
        if (gcd_ll(alphas_[i], alphas_[j]) != 1)
          throw error("fiber multiplicities must be pairwise coprime");
    }
  }

  const std::vector<long long> &alphas() const { return alphas_; }
  size_t fiber_count() const { return alphas_.size(); }

  long long alpha() const {
    long long a = 1;
    for (long long v : alphas_) a *= v;
    return a;
  }

  // 0 when all multiplicities are odd, 1/2 when one of them is even
  Rational rho() const {
    for (long long v : alphas_)
      if (v % 2 == 0) return Rational(1, 2);
    return Rational(0);
  }

  std::string to_string() const {
    std::string s = "sigma(";
    for (size_t i = 0; i < alphas_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(alphas_[i]);
    }
    return s + ")";
  }

private:
  std::vector<long long> alphas_;
};

// The arithmetic constants attached to (Y, r): beta_i, gamma_i, p_i, A_i and
// the inverse lifts alpha'_i used by the correction-term formulas.
struct SeifertConstants {
  SeifertData Y;
  long long r = 0;
  std::vector<long long> beta;
  std::vector<long long> gamma;
  std::vector<long long> p_small;
  std::vector<long long> alpha_prime; // normalized to [0, 2r)
  std::vector<long long> A;

  // A'_i = (1/2) alpha'_i (A_i - 2L); lift selects the alternative alpha'_i
  Rational A_prime(size_t i, const Rational &L, bool alt_lift = false) const {
    long long ap = alpha_prime[i];
    if (alt_lift) ap += (Y.alphas()[i] % 2 == 0) ? r : 2 * r;
    return Rational(ap, 2) * (Rational(A[i]) - Rational(2) * L);
  }
};

inline SeifertConstants derive_constants(const SeifertData &Y, long long r) {
  if (r < 2) throw error("order r must be >= 2");
  for (long long a : Y.alphas())
    if (gcd_ll(r, a) != 1)
      throw not_coprime_to_fibers(Y.to_string() + " with r = " + std::to_string(r));

  SeifertConstants c;
  c.Y = Y;
  c.r = r;
  const auto &alphas = Y.alphas();
  long long alpha = Y.alpha();
  Rational rho = Y.rho();

  // right-hand side of the gamma congruence: rho(Y) + sum alpha(alpha_j-1)/(2 alpha_j)
  Rational gamma_rhs = rho;
  for (long long aj : alphas) gamma_rhs += Rational(alpha * (aj - 1), 2 * aj);
  if (!gamma_rhs.is_integer()) throw error("gamma congruence right-hand side not integral");
  BigInt grhs = gamma_rhs.num();

  for (size_t i = 0; i < alphas.size(); ++i) {
    long long ai = alphas[i];
    long long quot = alpha / ai;
    long long beta = mod_solve(BigInt(quot), BigInt(-1), BigInt(ai)).to_ll();
    c.beta.push_back(beta); // lands in 1..ai-1 since ai >= 2

    c.gamma.push_back(mod_solve(BigInt(quot), grhs, BigInt(ai)).to_ll());
    long long p = mod_solve(BigInt(beta), BigInt(1), BigInt(ai)).to_ll();
    // the two characterizations of p_i agree: p_i = -alpha/alpha_i (mod alpha_i)
    if (mod_norm(BigInt(p + quot), BigInt(ai)).to_ll() != 0)
      throw error("p_i characterizations disagree");
    c.p_small.push_back(p);
    Rational frac_arg = (Rational(p * c.gamma[i]) + rho) / Rational(ai);
    Rational A = Rational(2 * ai) * frac_arg.frac() - Rational(ai);
    if (!A.is_integer()) throw error("A_i failed integrality");
    c.A.push_back(A.num().to_ll());
    long long ap;
    if (ai % 2 == 0)
      ap = mod_solve(BigInt(ai), BigInt(2), BigInt(2 * r)).to_ll(); // defined mod r
    else
      ap = mod_solve(BigInt(ai), BigInt(1), BigInt(2 * r)).to_ll();
    c.alpha_prime.push_back(ap);
  }
  return c;
}

// Orbifold circle fibration data: genus, degree, cone multiplicities.
struct SeifertFibration {
  long long genus = 0;
  Rational degree; // nonzero
  std::vector<long long> cone_alphas;
  bool homology_sphere = false;

  static SeifertFibration of(const SeifertData &Y) {
    SeifertFibration f;
    f.genus = 0;
    f.degree = Rational(-1, Y.alpha());
    f.cone_alphas = Y.alphas();
    f.homology_sphere = true;
    return f;
  }
};

// Orbifold line bundle E = (e; eps_1, ..., eps_n).
struct LineBundleData {
  long long e = 0;
  std::vector<long long> epsilons;
};

// rot(E) = (1/l) (g - e + (n-2)/2 - sum (2 eps_i + 1)/(2 alpha_i))
inline Rational rotation_number(const SeifertFibration &F, const LineBundleData &E) {
  if (F.degree.is_zero()) throw error("fibration degree must be nonzero");
  if (E.epsilons.size() != F.cone_alphas.size())
    throw error("bundle data does not match cone points");
  long long n = static_cast<long long>(F.cone_alphas.size());
  Rational acc = Rational(F.genus) - Rational(E.e) + Rational(n - 2, 2);
  for (size_t i = 0; i < F.cone_alphas.size(); ++i) {
    if (E.epsilons[i] < 0 || E.epsilons[i] >= F.cone_alphas[i])
      throw error("epsilon out of range");
    acc -= Rational(2 * E.epsilons[i] + 1, 2 * F.cone_alphas[i]);
  }
  Rational rot = acc / F.degree;
  if (F.homology_sphere && !(Rational(2) * rot).is_integer())
    throw error("rotation number not a half-integer on a homology sphere");
  return rot;
}

inline Rational rotation_number(const SeifertData &Y, const LineBundleData &E) {
  return rotation_number(SeifertFibration::of(Y), E);
}

enum class BrieskornFamily {
  plus5,  // Sigma(2,3,12n+5)
  minus5, // Sigma(2,3,12n-5)
  minus1, // Sigma(2,3,12n-1)
  plus1   // Sigma(2,3,12n+1)
};

inline long long family_offset(BrieskornFamily f) {
  switch (f) {
  case BrieskornFamily::plus5: return 5;
  case BrieskornFamily::minus5: return -5;
  case BrieskornFamily::minus1: return -1;
  case BrieskornFamily::plus1: return 1;
  }
  throw error("bad family");
}

inline std::string family_name(BrieskornFamily f) {
  switch (f) {
  case BrieskornFamily::plus5: return "12n+5";
  case BrieskornFamily::minus5: return "12n-5";
  case BrieskornFamily::minus1: return "12n-1";
  case BrieskornFamily::plus1: return "12n+1";
  }
  throw error("bad family");
}

inline long long third_fiber(BrieskornFamily f, long long n) { return 12 * n + family_offset(f); }

inline SeifertData brieskorn(BrieskornFamily f, long long n) {
  return SeifertData({2, 3, third_fiber(f, n)});
}

// classify m = 12n+c; throws for m not coprime to 6
inline BrieskornFamily family_of_fiber(long long m, long long &n_out) {
  long long rem = ((m % 12) + 12) % 12;
  switch (rem) {
  case 5: n_out = (m - 5) / 12; return BrieskornFamily::plus5;
  case 7: n_out = (m + 5) / 12; return BrieskornFamily::minus5;
  case 11: n_out = (m + 1) / 12; return BrieskornFamily::minus1;
  case 1: n_out = (m - 1) / 12; return BrieskornFamily::plus1;
  default: throw unsupported_family("fiber " + std::to_string(m) + " is not 12n+-1, 12n+-5");
  }
}

// The rotation numbers of the irreducible components on Sigma(2,3,12n+c):
// bundles E = (0;0,0,k), 0 <= k <= n-1.
inline Rational table_rotation(BrieskornFamily f, long long n, long long k) {
  switch (f) {
  case BrieskornFamily::plus5: return Rational(-(12 * (n - k) - 1), 2);
  case BrieskornFamily::minus5: return Rational(-(12 * (n - k) - 11), 2);
  case BrieskornFamily::minus1: return Rational(-(12 * (n - k) - 7), 2);
  case BrieskornFamily::plus1: return Rational(-(12 * (n - k) - 5), 2);
  }
  throw error("bad family");
}

inline std::vector<std::pair<LineBundleData, Rational>> brieskorn_components(BrieskornFamily f,
                                                                             long long n) {
  long long min_n = (f == BrieskornFamily::plus5) ? 0 : 1;
  if (n < min_n) throw unsupported_family("n out of range for " + family_name(f));
  SeifertData Y = brieskorn(f, n);
  std::vector<std::pair<LineBundleData, Rational>> out;
  for (long long k = 0; k < n; ++k) {
    LineBundleData E{0, {0, 0, k}};
    Rational rot = rotation_number(Y, E);
    if (rot != table_rotation(f, n, k)) throw error("rotation table mismatch");
    out.emplace_back(E, rot);
  }
  return out;
}

// |CSD(E)|/(4 pi^2) recovered from the rotation number: rot^2 * |l|.
// The rotation number of a component shares the sign of the fibration degree
// (or vanishes); other combinations are rejected.
inline Rational csd_from_rotation(const Rational &rot, const Rational &ell) {
  if (ell.is_zero()) throw error("fibration degree must be nonzero");
  if (!rot.is_zero() && rot.sign() != ell.sign())
    throw sign_mismatch("rot(E) must vanish or share the sign of the degree");
  Rational abs_ell = ell.sign() < 0 ? -ell : ell;
  return rot * rot * abs_ell;
}

} // namespace sfk

#endif
