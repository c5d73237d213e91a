#ifndef SEIFERTK_JSON_IO_HPP
#define SEIFERTK_JSON_IO_HPP

#include <json.hpp>

#include "seifertk/cyclotomic.hpp"
#include "seifertk/numeric.hpp"

namespace sfk {

// Bit-exact serialization: rationals as decimal strings, cyclotomic values as
// their canonical (polynomial-reduced) nonzero coefficients.

inline nlohmann::json to_json(const Rational &q) {
  return {{"num", q.num().to_string()}, {"den", q.den().to_string()}};
}

inline Rational rational_from_json(const nlohmann::json &j) {
  return Rational(BigInt::from_string(j.at("num").get<std::string>()),
                  BigInt::from_string(j.at("den").get<std::string>()));
}

inline nlohmann::json to_json(const Cyclotomic &v) {
  nlohmann::json coeffs = nlohmann::json::array();
  auto can = v.canonical();
  for (size_t k = 0; k < can.size(); ++k)
    if (!can[k].is_zero())
      coeffs.push_back({static_cast<long long>(k), can[k].num().to_string(),
                        can[k].den().to_string()});
  return {{"m", v.modulus()}, {"coeffs", coeffs}};
}

inline Cyclotomic cyclotomic_from_json(const nlohmann::json &j) {
  long long m = j.at("m").get<long long>();
  Cyclotomic v = Cyclotomic::monomial(m, 0, Rational(0));
  for (const auto &row : j.at("coeffs"))
    v += Cyclotomic::monomial(m, row.at(0).get<long long>(),
                              Rational(BigInt::from_string(row.at(1).get<std::string>()),
                                       BigInt::from_string(row.at(2).get<std::string>())));
  return v;
}

// human-facing JSON for a cyclotomic value: exact coefficients plus a clearly
// non-authoritative 50-digit decimal approximation
inline nlohmann::json to_json_with_approx(const Cyclotomic &v) {
  nlohmann::json j = to_json(v);
  ComplexApprox a = approx(v);
  j["approx"] = {{"re", a.re.to_decimal_string(50)},
                 {"im", a.im.to_decimal_string(50)},
                 {"authoritative", false}};
  return j;
}

} // namespace sfk

#endif
