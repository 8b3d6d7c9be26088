#ifndef IHIGGS_POLYNOMIAL_HPP
#define IHIGGS_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ihiggs {

// Dense univariate polynomial in t with arbitrary-precision integer
// coefficients.  coeffs()[i] is the coefficient of t^i.
//
// The representation is canonical: the last stored coefficient is nonzero,
// and the zero polynomial stores nothing.  degree() of the zero polynomial is
// std::nullopt, never -1.
class Polynomial {
 public:
  using Coeff = mpz_class;

  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  static Polynomial constant(const Coeff& c);
  static Polynomial monomial(const Coeff& c, std::size_t degree);
  static Polynomial one() { return constant(1); }
  // t^k
  static Polynomial t_pow(std::size_t k) { return monomial(1, k); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const noexcept;
  // Number of stored coefficients (degree + 1, or 0 for the zero polynomial).
  std::size_t size() const noexcept { return coeffs_.size(); }

  const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }
  // Coefficient of t^i; zero past the degree.
  Coeff coeff(std::size_t i) const;
  const Coeff& leading() const;

  Coeff evaluate(const Coeff& t) const;
  bool has_nonnegative_coeffs() const;
  // Index of the first negative coefficient, if any.
  std::optional<std::size_t> first_negative() const;

  // Multiplication by t^k.
  Polynomial shifted(std::size_t k) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Coeff& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Coeff& c) { return a *= c; }
  friend Polynomial operator*(const Coeff& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  // Human-readable form, e.g. "1 + t^2 + 17 t^4 + 17 t^6".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Coeff> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial mul(const Polynomial& a, const Polynomial& b);

// Returns q with a == b * q.  Throws NotDivisible on a nonzero remainder and
// NonIntegerCoefficient if the quotient exists only over the rationals.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

// p^n by repeated squaring.
Polynomial pow(const Polynomial& p, unsigned n);

// (1 - t^a_exp) / (1 - t^b_exp); b_exp must divide a_exp.
Polynomial geometric_quotient(long a_exp, long b_exp);

// (1 + sign * t)^exponent, sign in {+1, -1}.
Polynomial binomial_power(int sign, unsigned exponent);

// Keeps the coefficients of t^i for i < cutoff.
Polynomial truncate_below(const Polynomial& p, std::size_t cutoff);

// t^m (1 - t^e) = t^m - t^(m+e).  e may be negative (the formulas evaluate
// factors such as t^4 (1 - t^(4g-10)) at g = 2); m + e must stay >= 0.
Polynomial t_pow_one_minus(long m, long e);

// 1 - t^e for e >= 0.
inline Polynomial one_minus_t_pow(long e) { return t_pow_one_minus(0, e); }

}  // namespace ihiggs

#endif  // IHIGGS_POLYNOMIAL_HPP
