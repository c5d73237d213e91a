#ifndef SEIFERTK_VERIFY_HPP
#define SEIFERTK_VERIFY_HPP

#include <atomic>
#include <functional>
#include <thread>

#include "seifertk/obstruct.hpp"

namespace sfk {

struct FixtureResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::vector<long long> primes = {5, 7, 11, 13};
  std::vector<long long> levels = {1, 2};
  unsigned threads = 1;
};

namespace verify_detail {

// run the fixture closures, in parallel when asked, with deterministic output order
inline std::vector<FixtureResult> run_fixtures(
    const std::vector<std::pair<std::string, std::function<std::string()>>> &fixtures,
    unsigned threads) {
  std::vector<FixtureResult> out(fixtures.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= fixtures.size()) return;
      FixtureResult r;
      r.name = fixtures[i].first;
      try {
        r.detail = fixtures[i].second(); // empty detail means pass
        r.pass = r.detail.empty();
      } catch (const std::exception &e) {
        r.pass = false;
        r.detail = e.what();
      }
      out[i] = std::move(r);
    }
  };
  unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(fixtures.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto &t : pool) t.join();
  }
  return out;
}

inline std::string expect_eq(const Rational &got, const Rational &want) {
  if (got == want) return "";
  return "got " + got.to_string() + ", want " + want.to_string();
}

// closed forms of Prop-correction-terms
inline Rational closed_minus1(long long p) {
  long long m = ((p % 12) + 12) % 12;
  if (m == 1) return Rational(p * p - 14 * p + 13, 144 * p);
  if (m == 11) return Rational(p * p + 14 * p + 13, 144 * p);
  if (m == 5) return Rational(p * p + 50 * p + 13, 144 * p);
  return Rational(p * p - 50 * p + 13, 144 * p);
}
inline Rational closed_6p1(long long p) {
  long long m = ((p % 12) + 12) % 12;
  if (m == 1) return Rational(-p * p + 158 * p - 13, 144 * p);
  if (m == 11) return Rational(-p * p - 158 * p - 13, 144 * p);
  if (m == 5) return Rational(-p * p + 94 * p - 13, 144 * p);
  return Rational(-p * p - 94 * p - 13, 144 * p);
}

// Residue tables for S(q,r,p;-1): value = (lead p^2 + coef p + constant)/(den p),
// where coef carries the sign of the matched residue class.
struct CosecantTable {
  long long q, r;
  long long modulus, den, constant;
  int lead; // sign of the p^2 term
  std::vector<std::pair<long long, std::vector<long long>>> rows; // upper coef -> residues
};

inline const std::vector<CosecantTable> &cosecant_tables() {
  static const std::vector<CosecantTable> tables = {
      {1, 2, 4, 12, -5, -1, {{6, {1}}}},
      {-1, 10, 20, 60, 101, 1, {{-102, {1}}, {-90, {3, 7}}, {-198, {9}}}},
      {-2, 3, 12, 36, 13, 1, {{-14, {1}}, {50, {5}}}},
      {-3, 4, 24, 72, 25, 1, {{-26, {1}}, {-10, {5}}, {154, {7}}, {-118, {11}}}},
      {-4, 5, 40, 120, 41, 1,
       {{-42, {1}}, {90, {3, -13}}, {-150, {7, -17}}, {342, {9}}, {-102, {11}}, {282, {19}}}},
      {-5, 6, 60, 180, 61, 1,
       {{-62, {1}}, {190, {7, -17}}, {638, {11}}, {-350, {13, -23}}, {-98, {19}}, {-478, {29}}}},
      {-6, 7, 84, 252, 85, 1,
       {{-86, {1}},
        {-22, {5, 17}},
        {-202, {11, 23}},
        {1066, {13}},
        {-554, {19, 31}},
        {778, {25, 37}},
        {-310, {29}},
        {842, {41}}}},
      {-7, 8, 112, 336, 113, 1,
       {{-114, {1}},
        {258, {3, 19, -37, -53}},
        {510, {5, -11, 45, -51}},
        {78, {9, 25}},
        {-642, {13, -43}},
        {1650, {15}},
        {-498, {17, 33}},
        {-846, {23, 39}},
        {-894, {27, -29}},
        {1266, {31, 47}},
        {-306, {41}},
        {-1230, {55}}}},
      {-8, 9, 144, 432, 145, 1,
       {{-146, {1}},
        {-34, {5, 29, -43, -67}},
        {466, {7, -41}},
        {290, {11, -13, 59, -61}},
        {2414, {17}},
        {-1118, {19, -53}},
        {722, {23, -25}},
        {-1262, {31, -65}},
        {1442, {35, -37}},
        {-1006, {47, -49}},
        {-686, {55}},
        {1874, {71}}}},
      {-9, 10, 180, 540, 181, 1,
       {{-182, {1}},
        {-650, {7, 43, 67, -77}},
        {758, {11, -49}},
        {970, {13, -23, -47, -83}},
        {-790, {17, 53}},
        {3382, {19}},
        {-1078, {29, -31}},
        {2410, {37, 73}},
        {-1942, {41, -79}},
        {1622, {59, -61}},
        {-682, {71}},
        {-2518, {89}}}}};
  return tables;
}

inline Rational table_value(const CosecantTable &t, long long coef, int sign, long long p) {
  return Rational(t.lead * p * p + sign * coef * p + t.constant, t.den * p);
}

// smallest prime in the residue class res (mod M), coprime to q and r
inline long long sample_prime(long long res, long long M, long long q, long long r) {
  long long p = res;
  while (p < 11) p += M;
  for (;; p += M)
    if (is_prime_ll(p) && gcd_ll(q, p) == 1 && gcd_ll(r, p) == 1) return p;
}

} // namespace verify_detail

// ---------------------------------------------------------------------------
// suites

inline std::vector<FixtureResult> verify_correction_terms(const VerifyOptions &opt) {
  using namespace verify_detail;
  std::vector<std::pair<std::string, std::function<std::string()>>> fx;
  for (long long p : opt.primes) {
    if (p < 5 || !is_prime_ll(p)) continue;
    for (long long n : opt.levels) {
      fx.emplace_back("n_{p/2} sigma(2,3," + std::to_string(12 * p * n - 1) + ") p=" +
                          std::to_string(p),
                      [p, n] {
                        Rational got = correction_term(SeifertData({2, 3, 12 * p * n - 1}), p,
                                                       Rational(p, 2));
                        return expect_eq(got, closed_minus1(p));
                      });
      fx.emplace_back("n_{p/2} sigma(2,3," + std::to_string(12 * p * n - 6 * p + 1) + ") p=" +
                          std::to_string(p),
                      [p, n] {
                        Rational got = correction_term(
                            SeifertData({2, 3, 12 * p * n - 6 * p + 1}), p, Rational(p, 2));
                        return expect_eq(got, closed_6p1(p));
                      });
    }
  }
  return run_fixtures(fx, opt.threads);
}

inline std::vector<FixtureResult> verify_cosecant_tables(const VerifyOptions &opt) {
  using namespace verify_detail;
  std::vector<std::pair<std::string, std::function<std::string()>>> fx;
  fx.emplace_back("S(1,1,2;-1)", [] {
    return expect_eq(cosecant_sum({1, 1, 2, -1}, SumMethod::brute), Rational(-1, 2));
  });
  for (const auto &t : cosecant_tables()) {
    for (const auto &[coef, residues] : t.rows) {
      for (long long res : residues) {
        for (int sgn : {1, -1}) {
          long long cls = sgn > 0 ? res : -res;
          long long norm = ((cls % t.modulus) + t.modulus) % t.modulus;
          long long p = sample_prime(norm, t.modulus, t.q, t.r);
          std::string name = "S(" + std::to_string(t.q) + "," + std::to_string(t.r) + "," +
                             std::to_string(p) + ";-1) [p=" + std::to_string(cls) + " mod " +
                             std::to_string(t.modulus) + "]";
          long long c = coef;
          fx.emplace_back(name, [t, c, sgn, p] {
            Rational want = table_value(t, c, sgn, p);
            Rational got = cosecant_sum({t.q, t.r, p, -1}, SumMethod::reciprocity);
            return expect_eq(got, want);
          });
        }
      }
    }
  }
  return run_fixtures(fx, opt.threads);
}

inline std::vector<FixtureResult> verify_alpha_equality(const VerifyOptions &opt) {
  using namespace verify_detail;
  std::vector<std::pair<std::string, std::function<std::string()>>> fx;
  for (long long p : opt.primes) {
    if (p < 5 || !is_prime_ll(p)) continue;
    for (long long n : opt.levels) {
      fx.emplace_back("alpha Q(" + std::to_string(p) + ";2,3," +
                          std::to_string(12 * p * n - 1) + ") = alpha L(p;-2,3)",
                      [p, n]() -> std::string {
                        bool eq = alpha_invariant_seifert(SeifertData({2, 3, 12 * p * n - 1}),
                                                          p) ==
                                  alpha_invariant_lens(LensSpaceData(p, -2, 3));
                        return eq ? "" : "cyclotomic values differ";
                      });
      fx.emplace_back("alpha Q(" + std::to_string(p) + ";2,3," +
                          std::to_string(12 * p * n - 6 * p + 1) + ") = alpha L(p;2,3)",
                      [p, n]() -> std::string {
                        bool eq = alpha_invariant_seifert(
                                      SeifertData({2, 3, 12 * p * n - 6 * p + 1}), p) ==
                                  alpha_invariant_lens(LensSpaceData(p, 2, 3));
                        return eq ? "" : "cyclotomic values differ";
                      });
    }
  }
  return run_fixtures(fx, opt.threads);
}

inline std::vector<FixtureResult> verify_rotation_table(const VerifyOptions &opt) {
  std::vector<std::pair<std::string, std::function<std::string()>>> fx;
  for (auto f : {BrieskornFamily::plus5, BrieskornFamily::minus5, BrieskornFamily::minus1,
                 BrieskornFamily::plus1}) {
    for (long long n = (f == BrieskornFamily::plus5 ? 0 : 1); n <= 5; ++n) {
      fx.emplace_back("rotations " + family_name(f) + " n=" + std::to_string(n),
                      [f, n]() -> std::string {
                        auto comps = brieskorn_components(f, n); // asserts table equality
                        if (comps.size() != static_cast<size_t>(n)) return "wrong count";
                        return "";
                      });
    }
  }
  return verify_detail::run_fixtures(fx, opt.threads);
}

inline std::vector<FixtureResult> verify_comparing(const VerifyOptions &opt) {
  using namespace verify_detail;
  std::vector<std::pair<std::string, std::function<std::string()>>> fx;
  for (long long p : opt.primes) {
    if (p < 5 || !is_prime_ll(p)) continue;
    for (long long n : opt.levels) {
      fx.emplace_back(
          "comparing N p=" + std::to_string(p) + " n=" + std::to_string(n), [p, n] {
            return expect_eq(comparing_identity(StabilizationFamily::nucleus, n, p).offset,
                             Rational(0));
          });
      fx.emplace_back(
          "comparing P p=" + std::to_string(p) + " n=" + std::to_string(n), [p, n] {
            return expect_eq(comparing_identity(StabilizationFamily::plumbing, n, p).offset,
                             expected_comparing_offset(StabilizationFamily::plumbing, p));
          });
    }
  }
  return run_fixtures(fx, opt.threads);
}

inline std::vector<FixtureResult> verify_e8(const VerifyOptions &opt) {
  std::vector<std::pair<std::string, std::function<std::string()>>> fx;
  auto mk = [](long long p, std::vector<std::pair<long long, long long>> pts) {
    std::vector<FixedPoint> fp;
    for (auto [a, b] : pts) fp.push_back({a, b});
    return FixedPointData(p, fp);
  };
  std::vector<std::pair<long long, FixedPointData>> expected;
  expected.emplace_back(5, mk(5, {{1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 2}, {-1, 2},
                                  {-2, 3}, {-2, 3}, {-2, 3}, {-2, 3}, {-2, 3}, {2, 3}}));
  expected.emplace_back(7, mk(7, {{1, 1}, {1, 1}, {1, 2}, {-1, 2}, {-2, 3}, {-2, 3},
                                  {-2, 3}, {-2, 3}, {-2, 3}, {2, 3}, {3, 3}, {3, 3}}));
  expected.emplace_back(11, mk(11, {{1, 1}, {1, 2}, {-1, 2}, {-2, 3}, {-2, 3}, {2, 3},
                                    {-3, 4}, {-4, 5}, {-5, 6}, {-6, 7}, {-7, 8}, {-8, 9}}));
  for (long long p : {13, 17}) {
    expected.emplace_back(p, mk(p, {{1, 2}, {-1, 10}, {-2, 3}, {-2, 3}, {2, 3}, {-3, 4},
                                    {-4, 5}, {-5, 6}, {-6, 7}, {-7, 8}, {-8, 9}, {-9, 10}}));
  }
  for (auto &[p, want] : expected) {
    long long pp = p;
    FixedPointData w = want;
    fx.emplace_back("e8 data p=" + std::to_string(pp), [pp, w]() -> std::string {
      long long pairs = 0;
      FixedPointData got = e8_fixed_point_data(pp, &pairs);
      if (pairs != 7) return "cancellation count " + std::to_string(pairs);
      if (!(got == w)) return "data " + got.to_string() + " != " + w.to_string();
      return "";
    });
  }
  return verify_detail::run_fixtures(fx, opt.threads);
}

inline std::vector<FixtureResult> verify_reciprocity(const VerifyOptions &opt) {
  std::vector<std::pair<std::string, std::function<std::string()>>> fx;
  fx.emplace_back("dedekind brute == recursion (500 specs, a <= 500)", []() -> std::string {
    uint64_t state = 99;
    auto next = [&] {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return state;
    };
    int done = 0;
    while (done < 500) {
      long long a = 1 + static_cast<long long>(next() % 500);
      long long b = static_cast<long long>(next() % 2001) - 1000;
      if (gcd_ll(b, a) != 1) continue;
      if (dedekind_sum_brute(b, a) != dedekind_sum_reciprocity(b, a))
        return "mismatch at (b,a)=(" + std::to_string(b) + "," + std::to_string(a) + ")";
      ++done;
    }
    return "";
  });
  fx.emplace_back("rademacher brute == reciprocity (200 specs)", []() -> std::string {
    uint64_t state = 7;
    auto next = [&] {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return state;
    };
    int done = 0;
    while (done < 200) {
      long long a = 1 + static_cast<long long>(next() % 60);
      long long b = a + 1 + static_cast<long long>(next() % 140);
      if (gcd_ll(b, a) != 1) continue;
      Rational y(static_cast<long long>(next() % 41) - 20,
                 1 + static_cast<long long>(next() % 12));
      Rational x = (Rational(static_cast<long long>(next() % 9) - 4) - Rational(b) * y) /
                   Rational(a);
      if (x.is_integer() && y.is_integer()) continue;
      DedekindRademacherSpec s{b, a, x, y};
      if (dedekind_rademacher_brute(s) != dedekind_rademacher_reciprocity(s))
        return "mismatch at (b,a)=(" + std::to_string(b) + "," + std::to_string(a) + ")";
      ++done;
    }
    return "";
  });
  fx.emplace_back("dieter brute == euclidean (60 specs)", []() -> std::string {
    uint64_t state = 23;
    auto next = [&] {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return state;
    };
    int done = 0;
    while (done < 60) {
      long long a = 2 + static_cast<long long>(next() % 34);
      long long b = 1 + static_cast<long long>(next() % (a - 1));
      if (gcd_ll(a, b) != 1) continue;
      long long r = 2 + static_cast<long long>(next() % 10);
      DedekindDieterSpec s{b, a, Rational(b, r), Rational(a, r)};
      if (!(dedekind_dieter(s, SumMethod::brute) == dedekind_dieter(s, SumMethod::reciprocity)))
        return "mismatch at (b,a,r)=(" + std::to_string(b) + "," + std::to_string(a) + "," +
               std::to_string(r) + ")";
      ++done;
    }
    return "";
  });
  fx.emplace_back("cosecant brute == reciprocity (300 specs, p <= 97)", []() -> std::string {
    uint64_t state = 59;
    auto next = [&] {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return state;
    };
    int done = 0;
    while (done < 300) {
      long long p = 2 + static_cast<long long>(next() % 96);
      long long q = static_cast<long long>(next() % 81) - 40;
      long long r = static_cast<long long>(next() % 81) - 40;
      if (q == 0 || r == 0 || gcd_ll(q, p) != 1 || gcd_ll(r, p) != 1) continue;
      int eps = (next() % 2) ? 1 : -1;
      Rational brute = cosecant_sum_brute({q, r, p, eps});
      try {
        if (cosecant_sum_reciprocity({q, r, p, eps}) != brute)
          return "mismatch at (q,r,p,eps)=(" + std::to_string(q) + "," + std::to_string(r) +
                 "," + std::to_string(p) + "," + std::to_string(eps) + ")";
      } catch (const parity_obstruction &) {
        // outside the reciprocity domain; the defining sum stands
      }
      ++done;
    }
    return "";
  });
  return verify_detail::run_fixtures(fx, opt.threads);
}

inline std::vector<FixtureResult> run_verify_suite(const std::string &suite,
                                                   const VerifyOptions &opt) {
  if (suite == "correction-terms") return verify_correction_terms(opt);
  if (suite == "cosecant-tables") return verify_cosecant_tables(opt);
  if (suite == "alpha-equality") return verify_alpha_equality(opt);
  if (suite == "rotation-table") return verify_rotation_table(opt);
  if (suite == "comparing") return verify_comparing(opt);
  if (suite == "e8") return verify_e8(opt);
  if (suite == "reciprocity") return verify_reciprocity(opt);
  throw error("unknown verify suite '" + suite + "'");
}

inline std::vector<std::string> verify_suite_names() {
  return {"correction-terms", "cosecant-tables", "alpha-equality", "rotation-table",
          "comparing",        "e8",              "reciprocity"};
}

} // namespace sfk

#endif
