#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prng.hpp"
#include "seifertk/cyclotomic.hpp"
#include "seifertk/numeric.hpp"

using namespace sfk;

TEST_CASE("bigint arithmetic agrees with __int128 on random operands") {
  Prng rng(42);
  for (int iter = 0; iter < 4000; ++iter) {
    long long a = rng.range(-1000000000LL, 1000000000LL);
    long long b = rng.range(-1000000000LL, 1000000000LL);
    BigInt A(a), B(b);
    CHECK((A + B).to_ll() == a + b);
    CHECK((A - B).to_ll() == a - b);
    __int128 prod = static_cast<__int128>(a) * b;
    BigInt P = A * B;
    CHECK(P == BigInt(a) * BigInt(b));
    CHECK(P.to_string() == [&] {
      bool neg = prod < 0;
      unsigned __int128 u = neg ? -static_cast<unsigned __int128>(prod) : prod;
      std::string s;
      do {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
      } while (u);
      if (neg) s.push_back('-');
      return std::string(s.rbegin(), s.rend());
    }());
    if (b != 0) {
      BigInt q, r;
      BigInt::divmod_trunc(A, B, q, r);
      CHECK(q.to_ll() == a / b);
      CHECK(r.to_ll() == a % b);
      CHECK((q * B + r) == A);
    }
  }
}

TEST_CASE("bigint multi-limb division round-trips") {
  Prng rng(7);
  for (int iter = 0; iter < 800; ++iter) {
    BigInt a(1), b(1);
    int la = static_cast<int>(rng.range(1, 6)), lb = static_cast<int>(rng.range(1, 4));
    for (int i = 0; i < la; ++i) a = a * BigInt(rng.range(1, 1LL << 62)) + BigInt(rng.range(0, 1000));
    for (int i = 0; i < lb; ++i) b = b * BigInt(rng.range(1, 1LL << 62)) + BigInt(rng.range(0, 1000));
    if (rng.range(0, 1)) a = -a;
    if (rng.range(0, 1)) b = -b;
    BigInt q, r;
    BigInt::divmod_trunc(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.abs() < b.abs());
    if (!r.is_zero()) CHECK(r.sign() == a.sign());
  }
}

TEST_CASE("bigint string round-trip and gcd") {
  CHECK(BigInt::from_string("-123456789012345678901234567890").to_string() ==
        "-123456789012345678901234567890");
  CHECK(BigInt::gcd(BigInt(462), BigInt(1071)).to_ll() == 21);
  BigInt big1 = BigInt::from_string("123456789123456789123456789");
  BigInt big2 = BigInt::from_string("987654321987654321");
  BigInt g = BigInt::gcd(big1 * big2, big2 * big2);
  CHECK(BigInt::fmod(big1 * big2, g).is_zero());
  CHECK(BigInt::fdiv(BigInt(-7), BigInt(2)).to_ll() == -4);
  CHECK(BigInt::fmod(BigInt(-7), BigInt(2)).to_ll() == 1);
}

TEST_CASE("modular helpers") {
  CHECK(mod_inverse(BigInt(3), BigInt(14)).to_ll() == 5);
  CHECK_THROWS_AS(mod_inverse(BigInt(6), BigInt(14)), not_coprime);
  // 6x = 4 mod 14 -> x = 3 mod 7
  CHECK(mod_solve(BigInt(6), BigInt(4), BigInt(14)).to_ll() == 3);
}

TEST_CASE("rational normalization and sawtooth family") {
  Rational q(6, -4);
  CHECK(q.num().to_ll() == -3);
  CHECK(q.den().to_ll() == 2);
  CHECK(Rational(3, 4).sawtooth() == Rational(1, 4));
  CHECK(Rational(2).sawtooth() == Rational(0));
  CHECK(Rational(-1, 2).sawtooth() == Rational(0));
  CHECK(Rational(-1, 4).frac() == Rational(3, 4));
  CHECK(Rational(-1, 2).bernoulli2() == Rational(-1, 12));
  CHECK(delta_div(Rational(1 - 7), 2) == 2);
  CHECK(delta_div(Rational(1, 2), 2) == 0);
  CHECK(Rational::from_string("-26/203") == Rational(-26, 203));
}

TEST_CASE("trig fixtures") {
  CHECK(trig_value(TrigKind::cos, 1, 2).as_rational() == Rational(0));
  CHECK(trig_value(TrigKind::cot, 1, 4).as_rational() == Rational(1));
  CHECK(trig_value(TrigKind::csc2, 1, 6).as_rational() == Rational(4));
  CHECK(trig_value(TrigKind::sin, 1, 2).as_rational() == Rational(1));
  CHECK(trig_value(TrigKind::csc, 1, 2).as_rational() == Rational(1));
  CHECK(trig_value(TrigKind::cos, 1, 3).as_rational() == Rational(1, 2));
  CHECK_THROWS_AS(trig_value(TrigKind::cot, 3, 3), pole_error);
  CHECK_THROWS_AS(trig_value(TrigKind::csc, 0, 5), pole_error);
}

TEST_CASE("as_rational on constants and cancellations") {
  Cyclotomic c = Cyclotomic::monomial(10, 0, Rational(3, 7));
  CHECK(c.as_rational() == Rational(3, 7));
  Cyclotomic z = Cyclotomic::root(4, 1) + Cyclotomic::root(4, 3);
  CHECK(z.as_rational() == Rational(0));
  // cot(pi/5)cot(2pi/5) squared is 1/5
  Cyclotomic p = trig_value(TrigKind::cot, 1, 5) * trig_value(TrigKind::cot, 2, 5);
  CHECK((p * p).as_rational() == Rational(1, 5));
  Cyclotomic irr = trig_value(TrigKind::cot, 1, 5);
  CHECK_THROWS_AS(irr.as_rational(), not_rational);
  CHECK(!irr.is_rational());
}

TEST_CASE("trig identities hold exactly") {
  for (long long b : {3, 4, 5, 7, 9, 12}) {
    for (long long a = 1; a < 2 * b; ++a) {
      if (a % b == 0) continue;
      Cyclotomic cot = trig_value(TrigKind::cot, a, b);
      Cyclotomic csc = trig_value(TrigKind::csc, a, b);
      Cyclotomic csc2 = trig_value(TrigKind::csc2, a, b);
      CHECK(csc * csc == csc2);
      CHECK(cot * cot + Cyclotomic(1) == csc2);
      Cyclotomic s = trig_value(TrigKind::sin, a, b);
      Cyclotomic c = trig_value(TrigKind::cos, a, b);
      CHECK(s * s + c * c == Cyclotomic(1));
      CHECK(s * csc == Cyclotomic(1));
      CHECK(c == cot * s);
    }
  }
}

TEST_CASE("ring axioms under randomized testing") {
  Prng rng(2024);
  for (int iter = 0; iter < 60; ++iter) {
    long long m = rng.range(2, 720);
    auto rnd = [&] {
      Cyclotomic v;
      int terms = static_cast<int>(rng.range(1, 4));
      for (int t = 0; t < terms; ++t)
        v += Cyclotomic::monomial(m, rng.range(0, m - 1),
                                  Rational(rng.range(-9, 9), rng.range(1, 9)));
      return v;
    };
    Cyclotomic a = rnd(), b = rnd(), c = rnd();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("mixed-modulus embedding preserves values") {
  Cyclotomic half = trig_value(TrigKind::cos, 1, 3);
  Cyclotomic same = half.embedded(30);
  CHECK(same.as_rational() == Rational(1, 2));
  Cyclotomic mix = trig_value(TrigKind::cos, 1, 3) + trig_value(TrigKind::cos, 1, 2);
  CHECK(mix.as_rational() == Rational(1, 2));
  CHECK(trig_value(TrigKind::cos, 1, 5).modulus() == 10);
}

TEST_CASE("conjugation and reality") {
  Cyclotomic cot = trig_value(TrigKind::cot, 2, 7);
  CHECK(cot.conjugate() == cot); // real value
  Cyclotomic z = Cyclotomic::root(5, 1);
  CHECK(z.conjugate() == Cyclotomic::root(5, 4));
}

TEST_CASE("numeric sanity layer at 100 digits") {
  CHECK(approx_equals(trig_value(TrigKind::cos, 1, 3), Rational(1, 2)));
  Cyclotomic p = trig_value(TrigKind::cot, 1, 5) * trig_value(TrigKind::cot, 2, 5);
  CHECK(approx_equals(p * p, Rational(1, 5)));
  // cot(pi/5)cot(2pi/5) = 1/sqrt(5): square numerically close but value irrational
  ComplexApprox a = approx(p);
  CHECK(a.im.abs_below_pow10(100));
  CHECK(!approx_equals(p, Rational(1, 2)));
  // pi to a few digits
  CHECK(BigFloat::pi().to_decimal_string(20).substr(0, 12) == "3.1415926535");
}

#include "seifertk/json_io.hpp"

TEST_CASE("bit-exact serialization round trips") {
  Prng rng(77);
  for (int i = 0; i < 40; ++i) {
    Rational q(rng.range(-1000000, 1000000), rng.range(1, 99991));
    CHECK(rational_from_json(to_json(q)) == q);
  }
  // canonical coefficients only, nonzero entries
  Cyclotomic v = trig_value(TrigKind::cot, 2, 7) + Cyclotomic(Rational(3, 5));
  nlohmann::json j = to_json(v);
  CHECK(j.at("m").get<long long>() == v.modulus());
  Cyclotomic back = cyclotomic_from_json(j);
  CHECK(back == v);
  // serialization of equal values is identical even from different raw forms
  Cyclotomic w1 = Cyclotomic::root(12, 11) * Cyclotomic::root(12, 1); // = 1
  Cyclotomic w2 = Cyclotomic::monomial(12, 0, Rational(1));
  CHECK(to_json(w1).dump() == to_json(w2).dump());
  // zero coefficients are dropped
  CHECK(to_json(Cyclotomic::monomial(10, 3, Rational(0))).at("coeffs").empty());
}

TEST_CASE("galois substitutions are ring maps fixing rationals") {
  Cyclotomic a = trig_value(TrigKind::cot, 1, 7) + Cyclotomic(Rational(2, 3));
  Cyclotomic b = trig_value(TrigKind::csc, 2, 7);
  long long m = Cyclotomic::lcm_ll(a.modulus(), b.modulus());
  for (long long u : {3, 5, 9}) {
    if (gcd_ll(u, m) != 1) continue;
    Cyclotomic lhs = (a.embedded(m) * b.embedded(m)).galois(u);
    Cyclotomic rhs = a.embedded(m).galois(u) * b.embedded(m).galois(u);
    CHECK(lhs == rhs);
  }
  CHECK(Cyclotomic(Rational(5, 9)).embedded(12).galois(5).as_rational() == Rational(5, 9));
  CHECK_THROWS(Cyclotomic::root(10, 1).galois(5));
}
