#ifndef SEIFERTK_ERRORS_HPP
#define SEIFERTK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sfk {

struct error : std::runtime_error {
  explicit error(const std::string &msg) : std::runtime_error(msg) {}
};

struct pole_error : error {
  explicit pole_error(const std::string &m) : error("pole: " + m) {}
};

// A value that was guaranteed rational failed canonical reduction to Q.
// Always indicates a bug in the caller's formula, never bad user input.
struct not_rational : error {
  std::string canonical_form;
  explicit not_rational(const std::string &form)
      : error("value is not rational: " + form), canonical_form(form) {}
};

struct not_coprime : error {
  explicit not_coprime(const std::string &m) : error("not coprime: " + m) {}
};

struct reciprocity_hypothesis_violated : error {
  explicit reciprocity_hypothesis_violated(const std::string &m)
      : error("reciprocity hypotheses not met: " + m) {}
};

struct parity_obstruction : error {
  explicit parity_obstruction(const std::string &m)
      : error("parity obstruction: " + m) {}
};

struct not_coprime_to_fibers : error {
  explicit not_coprime_to_fibers(const std::string &m)
      : error("order not coprime to fiber multiplicities: " + m) {}
};

struct inadmissible_level : error {
  explicit inadmissible_level(const std::string &m)
      : error("inadmissible L: " + m) {}
};

struct incomplete_vector : error {
  explicit incomplete_vector(const std::string &m)
      : error("incomplete correction vector: " + m) {}
};

struct index_out_of_range : error {
  explicit index_out_of_range(const std::string &m)
      : error("index out of range: " + m) {}
};

struct unsupported_family : error {
  explicit unsupported_family(const std::string &m)
      : error("unsupported family: " + m) {}
};

struct sign_mismatch : error {
  explicit sign_mismatch(const std::string &m)
      : error("sign mismatch: " + m) {}
};

struct outside_classified_range : error {
  explicit outside_classified_range(const std::string &m)
      : error("outside classified range: " + m) {}
};

struct surfaces_present : error {
  explicit surfaces_present(const std::string &m)
      : error("fixed surfaces present: " + m) {}
};

struct no_such_fixed_point : error {
  explicit no_such_fixed_point(const std::string &m)
      : error("no such fixed point: " + m) {}
};

struct parity_hypothesis_violated : error {
  explicit parity_hypothesis_violated(const std::string &m)
      : error("parity hypothesis violated: " + m) {}
};

struct missing_catalog_data : error {
  explicit missing_catalog_data(const std::string &m)
      : error("missing catalog data: " + m) {}
};

} // namespace sfk

#endif
