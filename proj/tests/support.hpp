#ifndef IHIGGS_TESTS_SUPPORT_HPP
#define IHIGGS_TESTS_SUPPORT_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ihiggs/polynomial.hpp"

namespace ihiggs::testing {

// Coefficients are listed lowest degree first.
inline Polynomial P(std::initializer_list<long> c) { return Polynomial(c); }

// Schoolbook convolution over plain mpz vectors, independent of Polynomial::operator*.
inline Polynomial brute_force_mul(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return Polynomial(std::move(out));
}

class RandomPolynomials {
 public:
  explicit RandomPolynomials(std::uint64_t seed) : rng_(seed) {}

  // Signed coefficient with magnitude below 2^64.
  mpz_class coefficient() {
    mpz_class c = rng_() >> 32;
    c <<= 32;
    c += static_cast<unsigned long>(rng_() >> 32);
    if (rng_() & 1U) c = -c;
    return c;
  }

  // Degree uniform in [0, max_degree]; the leading coefficient is nonzero.
  Polynomial polynomial(std::size_t max_degree = 64) {
    std::uniform_int_distribution<std::size_t> deg(0, max_degree);
    std::vector<mpz_class> c(deg(rng_) + 1);
    for (auto& x : c) {
      // Sprinkle zeros so sparse inputs are covered too.
      x = (rng_() % 4 == 0) ? mpz_class(0) : coefficient();
    }
    while (c.back() == 0) c.back() = coefficient();
    return Polynomial(std::move(c));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

struct OracleRow {
  std::string_view name;
  long genus;
  std::vector<const char*> coeffs;
};

inline const std::vector<OracleRow>& oracle_rows() {
  static const std::vector<OracleRow> rows = {
#include "oracle_values.inc"
  };
  return rows;
}

inline std::optional<Polynomial> oracle(std::string_view name, long genus) {
  for (const auto& r : oracle_rows())
    if (r.name == name && r.genus == genus) {
      std::vector<mpz_class> c;
      for (const char* s : r.coeffs) c.emplace_back(s);
      return Polynomial(std::move(c));
    }
  return std::nullopt;
}

}  // namespace ihiggs::testing

#endif  // IHIGGS_TESTS_SUPPORT_HPP
