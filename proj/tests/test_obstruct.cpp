#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prng.hpp"
#include "seifertk/obstruct.hpp"

using namespace sfk;

namespace {

FixedPointData make_data(long long p, std::vector<std::pair<long long, long long>> pts,
                         std::vector<std::pair<long long, long long>> surf = {}) {
  std::vector<FixedPoint> fp;
  for (auto [a, b] : pts) fp.push_back({a, b});
  std::vector<FixedSurface> fs;
  for (auto [c, s] : surf) fs.push_back({c, s});
  return FixedPointData(p, std::move(fp), std::move(fs));
}

} // namespace

TEST_CASE("fixed-point data equivalences") {
  FixedPointData d1 = make_data(7, {{2, 3}, {-2, -3}});
  FixedPointData d2 = make_data(7, {{3, 2}, {2, 3}});
  CHECK(d1 == d2);
  FixedPointData s1 = make_data(5, {}, {{2, -1}});
  FixedPointData s2 = make_data(5, {}, {{-2, -1}});
  CHECK(s1 == s2);
  CHECK(!(s1 == make_data(5, {}, {{2, 1}})));
  CHECK_THROWS(make_data(5, {{5, 1}}));
}

TEST_CASE("sigma vector: fixtures") {
  // D = {(2,3),(2,3),(-2,3)}, sigma = 0, p = 5: S_0 = 2 S(2,3,5;-1) = -16/5
  auto v = sigma_vector(n_family_fixed_point_data(5), 0);
  CHECK(v[0] == Rational(-16, 5));
  Rational sum;
  for (auto &x : v) sum += x;
  CHECK(sum == Rational(0));
  // empty data: S_l = sigma/p
  auto e = sigma_vector(make_data(7, {}), -3);
  for (auto &x : e) CHECK(x == Rational(-3, 7));
  // cancelling pair leaves the vector unchanged
  auto base = sigma_vector(make_data(7, {{1, 2}}), 4);
  auto padded = sigma_vector(make_data(7, {{1, 2}, {3, 5}, {-3, 5}}), 4);
  CHECK(base == padded);
}

TEST_CASE("sigma vector sums to sigma and matches the cosecant route") {
  Prng rng(271);
  int done = 0;
  while (done < 60) {
    long long p = 3 + 2 * rng.range(0, 8);
    if (!is_prime_ll(p)) continue;
    std::vector<FixedPoint> pts;
    long long npts = rng.range(0, 5);
    for (long long i = 0; i < npts; ++i) {
      long long a = rng.range(1, p - 1), b = rng.range(1, p - 1);
      pts.push_back({a, b});
    }
    std::vector<FixedSurface> surf;
    long long nsurf = rng.range(0, 2);
    for (long long i = 0; i < nsurf; ++i)
      surf.push_back({rng.range(1, p - 1), rng.range(-4, 4)});
    long long sig = rng.range(-10, 10);
    FixedPointData d(p, pts, surf);
    auto v = sigma_vector(d, sig);
    Rational sum;
    for (auto &x : v) sum += x;
    CHECK(sum == Rational(sig));
    if (surf.empty()) CHECK(sigma0_via_cosecant(d, sig) == v[0]);
    ++done;
  }
  CHECK_THROWS_AS(sigma0_via_cosecant(make_data(5, {}, {{1, 2}}), 0), surfaces_present);
}

TEST_CASE("stabilizations preserve the sigma vector") {
  FixedPointData d = make_data(7, {{1, 2}, {2, 3}});
  auto before = sigma_vector(d, 4);
  FixedPointData ht = ht_stabilize(d, 2, 3);
  CHECK(sigma_vector(ht, 4) == before);
  CHECK(ht.points().size() == 4);
  // spec bookkeeping example: ht at (2,3) on {(2,3)} -> {(2,3),(2,3),(-2,3)}
  FixedPointData single = make_data(11, {{2, 3}});
  CHECK(ht_stabilize(single, 2, 3) == make_data(11, {{2, 3}, {2, 3}, {-2, 3}}));
  CHECK_THROWS_AS(ht_stabilize(single, 1, 5), no_such_fixed_point);

  EquivariantManifoldData m{4, {1, 0, 0, 0, 0, 0, 0}, d, "X"};
  EquivariantManifoldData f2 = free_stabilize(m, 2);
  for (auto b : f2.b2_plus_vector) CHECK(b >= 2);
  CHECK(f2.b2_plus_vector[0] == 3);
  CHECK(sigma_vector(f2.fpd, f2.sigma) == before);
  EquivariantManifoldData h2 = ht_stabilize(m, 1, 2);
  CHECK(h2.b2_plus_vector[0] == 2);
  CHECK(sigma_vector(h2.fpd, h2.sigma) == before);
}

TEST_CASE("e8 fixed-point data reproduces the classified lists") {
  long long pairs = 0;
  CHECK(e8_fixed_point_data(5, &pairs) ==
        make_data(5, {{1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 2}, {-1, 2},
                      {-2, 3}, {-2, 3}, {-2, 3}, {-2, 3}, {-2, 3}, {2, 3}}));
  CHECK(pairs == 7);
  CHECK(e8_fixed_point_data(7, &pairs) ==
        make_data(7, {{1, 1}, {1, 1}, {1, 2}, {-1, 2}, {-2, 3}, {-2, 3},
                      {-2, 3}, {-2, 3}, {-2, 3}, {2, 3}, {3, 3}, {3, 3}}));
  CHECK(pairs == 7);
  CHECK(e8_fixed_point_data(11, &pairs) ==
        make_data(11, {{1, 1}, {1, 2}, {-1, 2}, {-2, 3}, {-2, 3}, {2, 3},
                       {-3, 4}, {-4, 5}, {-5, 6}, {-6, 7}, {-7, 8}, {-8, 9}}));
  CHECK(pairs == 7);
  for (long long p : {13, 17, 19}) {
    CHECK(e8_fixed_point_data(p, &pairs) ==
          make_data(p, {{1, 2}, {-1, 10}, {-2, 3}, {-2, 3}, {2, 3}, {-3, 4},
                        {-4, 5}, {-5, 6}, {-6, 7}, {-7, 8}, {-8, 9}, {-9, 10}}));
    CHECK(pairs == 7);
  }
  // P family data drops one (2,3) point
  CHECK(p_family_fixed_point_data(5) ==
        make_data(5, {{1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 2}, {-1, 2},
                      {-2, 3}, {-2, 3}, {-2, 3}, {-2, 3}, {-2, 3}}));
  CHECK(p_family_fixed_point_data(11).points().size() == 11);
}

TEST_CASE("catalog kappa values match the quoted ones") {
  for (long long n : {1LL, 2LL, 3LL}) {
    CHECK(kappa_of_sphere(BrieskornFamily::minus1, n, false) == Rational(2));
    CHECK(kappa_of_sphere(BrieskornFamily::minus1, n, true) == Rational(0));
    CHECK(kappa_of_sphere(BrieskornFamily::minus5, n, false) == Rational(1));
    CHECK(kappa_of_sphere(BrieskornFamily::minus5, n, true) == Rational(1));
    CHECK(kappa_of_sphere(BrieskornFamily::plus1, n, false) == Rational(0));
    CHECK(kappa_of_sphere(BrieskornFamily::plus5, n, false) == Rational(1));
  }
  CHECK(kappa_of_sphere(BrieskornFamily::plus5, 0, false) == Rational(1)); // Sigma(2,3,5)
}

TEST_CASE("sharpness fixtures") {
  CHECK(sharpness(catalog::nucleus(1)) == std::pair<bool, long long>{true, 1});
  CHECK(sharpness(catalog::nucleus(3, true)) == std::pair<bool, long long>{true, 2});
  CHECK(sharpness(catalog::plumbing(1)) == std::pair<bool, long long>{true, 1});
  CHECK(sharpness(catalog::milnor(7)) == std::pair<bool, long long>{true, 2});
  CHECK(sharpness(catalog::milnor(11)) == std::pair<bool, long long>{true, 2});
}

TEST_CASE("non-extension verdicts reproduce the classified pattern") {
  for (long long p : {3, 5, 7, 11, 13, 17, 19, 23}) {
    for (long long n = 1; n <= 4; ++n) {
      bool expectN = !(n == 1 && p == 5);
      CHECK(nonextension_verdict(catalog::nucleus(n), p) == expectN);
      CHECK(nonextension_verdict(catalog::nucleus(n, true), p) == expectN);
      CHECK(nonextension_verdict(catalog::plumbing(n), p) == true);
      CHECK(nonextension_verdict(catalog::plumbing(n, true), p) == true);
    }
    CHECK(nonextension_verdict(catalog::milnor(11), p) == (p != 5));
    CHECK(nonextension_verdict(catalog::milnor(7), p) == true);
  }
}

TEST_CASE("minimum free stabilizations") {
  for (long long p : {5, 7, 11, 13, 17, 19, 23})
    for (long long n = 1; n <= 4; ++n) {
      auto bn = min_free_stabilizations(StabilizationFamily::nucleus, n, p);
      CHECK(bn.certified == 2 * n - 2);
      CHECK(bn.smoothable_only_if == 2 * n);
      auto bp = min_free_stabilizations(StabilizationFamily::plumbing, n, p);
      CHECK(bp.certified == 2 * n - 2);
      CHECK(bp.smoothable_only_if == 2 * n);
    }
}

TEST_CASE("stabilized filling check fails exactly below the threshold") {
  // N(2pn) with M ht and N free stabilizations; the binding kappa element
  for (long long p : {5, 7}) {
    for (long long n : {1LL, 2LL}) {
      KappaSet K = kappa_set(BrieskornFamily::minus1, p * n, p, true);
      for (long long N : {0LL, 2LL, 4LL, 6LL}) {
        long long M = 1;
        EquivariantManifoldData m{0, std::vector<long long>(p, N),
                                  n_family_fixed_point_data(p), "N"};
        m.b2_plus_vector[0] += 1 + M;
        FixedPointData fpd = m.fpd;
        for (long long j = 0; j < M; ++j) fpd = ht_stabilize(fpd, 2, 3);
        m.fpd = fpd;
        FillingReport rep = check_filling(m, K.projected);
        bool smooth_consistent = !rep.excluded;
        CHECK(smooth_consistent == (N >= 2 * n));
      }
    }
  }
  // parity hypothesis
  EquivariantManifoldData bad{0, {1, 1, 0, 0, 0}, n_family_fixed_point_data(5), "bad"};
  CHECK_THROWS_AS(check_filling(bad, kappa_set(BrieskornFamily::minus1, 5, 5, true).projected),
                  parity_hypothesis_violated);
}

TEST_CASE("all-zero data with singleton kappa set is consistent") {
  EquivariantManifoldData m{0, {0, 0, 0}, make_data(3, {}), "zero"};
  FillingReport rep = check_filling(m, {PosetVector::of({Rational(0), Rational(0)})});
  CHECK(!rep.excluded);
  CHECK(rep.C == 0);
  CHECK(rep.S0 == Rational(0));
}

TEST_CASE("h-cobordism criterion") {
  CHECK(h_cobordism_check(SeifertData({2, 3, 59}), 5, LensSpaceData(5, -2, 3)).ok());
  CHECK(h_cobordism_check(SeifertData({2, 3, 43}), 7, LensSpaceData(7, 2, 3)).ok());
  HCobordismReport bad = h_cobordism_check(SeifertData({2, 3, 59}), 5, LensSpaceData(5, 1, 1));
  CHECK(!bad.product_congruence);
  CHECK(!bad.ok());
  for (long long p : {5, 7, 11, 13}) {
    for (long long n : {1LL, 2LL}) {
      CHECK(h_cobordism_check(SeifertData({2, 3, 12 * p * n - 1}), p, LensSpaceData(p, -2, 3))
                .ok());
      CHECK(h_cobordism_check(SeifertData({2, 3, 12 * p * n - 6 * p + 1}), p,
                              LensSpaceData(p, 2, 3))
                .ok());
    }
  }
  CHECK_THROWS_AS(h_cobordism_check(SeifertData({2, 3, 55}), 5, LensSpaceData(5, 2, 3)),
                  not_coprime);
}

TEST_CASE("comparing identity across the classified offsets") {
  for (long long p : {5, 7, 11, 13}) {
    for (long long n : {1LL, 2LL}) {
      ComparingResult rn = comparing_identity(StabilizationFamily::nucleus, n, p);
      CHECK(rn.offset == Rational(0));
      ComparingResult rp = comparing_identity(StabilizationFamily::plumbing, n, p);
      CHECK(rp.offset == expected_comparing_offset(StabilizationFamily::plumbing, p));
    }
  }
  CHECK(expected_comparing_offset(StabilizationFamily::plumbing, 13) == Rational(2));
  CHECK(expected_comparing_offset(StabilizationFamily::plumbing, 5) == Rational(4));
  CHECK(expected_comparing_offset(StabilizationFamily::plumbing, 23) == Rational(-2));
}

TEST_CASE("hypothetical Z/5 extension over the smallest nucleus: G-signature data") {
  // a pseudofree smooth extension of the standard action over N(2) would have
  // fixed data {(1,4),(1,4),(2,3)}; its cotangent defects match the boundary
  // eta invariants exactly
  SeifertData Y({2, 3, 11});
  FixedPointData hyp = make_data(5, {{1, 4}, {1, 4}, {2, 3}});
  for (long long k = 1; k <= 4; ++k) {
    Cyclotomic defect;
    for (const auto &q : hyp.points())
      defect += cot_or_zero(Rational(k * q.a, 5)) * cot_or_zero(Rational(k * q.b, 5));
    CHECK(eta_sign(Y, 5, k) == defect);
  }
  Rational sum;
  for (auto &x : sigma_vector(hyp, 0)) sum += x;
  CHECK(sum == Rational(0));
}

TEST_CASE("milnor cobordism catalog verdicts") {
  auto check_cases = [&](std::vector<std::pair<long long, long long>> cases, long long p,
                         std::vector<long long> excluded_p = {}) {
    for (auto [m0, m1] : cases) {
      bool expect = std::find(excluded_p.begin(), excluded_p.end(), p) == excluded_p.end();
      CHECK(nonextension_cobordism_verdict(m0, m1, p) == expect);
    }
  };
  // all odd primes cases
  for (long long p : {3, 7, 11, 13}) {
    check_cases({{5, 7}, {7, 13}, {7, 17}}, p);
    check_cases({{5, 11}, {11, 13}, {11, 17}}, p, {5});
  }
  CHECK(nonextension_cobordism_verdict(5, 11, 5) == false);
  CHECK(nonextension_cobordism_verdict(11, 13, 5) == false);
  // p = 3 series
  for (long long n : {1LL, 2LL, 3LL}) {
    CHECK(nonextension_cobordism_verdict(12 * n - 7, 12 * n - 5, 3));
    CHECK(nonextension_cobordism_verdict(12 * n - 7, 12 * n - 1, 3));
    CHECK(nonextension_cobordism_verdict(12 * n - 5, 12 * n + 1, 3));
    CHECK(nonextension_cobordism_verdict(12 * n - 5, 12 * n + 5, 3));
    CHECK(nonextension_cobordism_verdict(12 * n - 1, 12 * n + 1, 3));
    CHECK(nonextension_cobordism_verdict(12 * n - 1, 12 * n + 5, 3));
    CHECK(nonextension_cobordism_verdict(12 * n + 1, 12 * n + 7, 3));
    CHECK(nonextension_cobordism_verdict(12 * n + 1, 12 * n + 11, 3));
  }
  // p = 7 and p = 11 series
  CHECK(nonextension_cobordism_verdict(13, 19, 7));
  CHECK(nonextension_cobordism_verdict(17, 19, 7));
  CHECK(nonextension_cobordism_verdict(19, 25, 7));
  CHECK(nonextension_cobordism_verdict(19, 29, 7));
  CHECK(nonextension_cobordism_verdict(13, 23, 11));
  CHECK(nonextension_cobordism_verdict(17, 23, 11));
  CHECK(nonextension_cobordism_verdict(23, 25, 11));
  CHECK(nonextension_cobordism_verdict(23, 29, 11));
  // the same pairs fail at a prime without the multiplicity
  CHECK(!nonextension_cobordism_verdict(13, 19, 5));
  CHECK(!nonextension_cobordism_verdict(13, 23, 7));
}

TEST_CASE("cobordism inequality engine on a trivial cobordism") {
  EquivariantManifoldData m{0, {0, 0, 0, 0, 0}, make_data(5, {}), "cyl"};
  auto K = std::vector<PosetVector>{PosetVector::of({Rational(0), Rational(0)})};
  CobordismReport rep = check_cobordism(m, true, K, K);
  CHECK(rep.implications_hold);
  CHECK(rep.existential_holds);
  CHECK(rep.C == 0);
  CobordismReport rep2 = check_cobordism(m, false, K, K);
  CHECK(rep2.C == 0);
}

TEST_CASE("P-family sigma-defect matches the mod-60 closed forms") {
  auto table = [](long long p) -> Rational {
    long long m = p % 60;
    auto in = [&](std::initializer_list<long long> set) {
      for (long long v : set)
        if (m == ((v % 60) + 60) % 60) return true;
      return false;
    };
    if (in({1, -11})) return Rational(p * p - 158 * p + 13, 18 * p);
    if (in({-1, 11})) return Rational(p * p + 158 * p + 13, 18 * p);
    if (in({7, -17})) return Rational(p * p - 194 * p + 13, 18 * p);
    if (in({-7, 17})) return Rational(p * p + 194 * p + 13, 18 * p);
    if (in({13, -23})) return Rational(p * p + 130 * p + 13, 18 * p);
    if (in({-13, 23})) return Rational(p * p - 130 * p + 13, 18 * p);
    if (in({19, -29})) return Rational(p * p + 94 * p + 13, 18 * p);
    return Rational(p * p - 94 * p + 13, 18 * p); // p = -19, 29 (mod 60)
  };
  for (long long p : {13, 17, 19, 23, 29, 31, 37, 41}) {
    CHECK(sigma_vector(p_family_fixed_point_data(p), -8)[0] == table(p));
  }
}
