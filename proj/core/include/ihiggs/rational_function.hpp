#ifndef IHIGGS_RATIONAL_FUNCTION_HPP
#define IHIGGS_RATIONAL_FUNCTION_HPP

#include <cstddef>
#include <string>

#include "ihiggs/polynomial.hpp"

namespace ihiggs {

// num / den over Z[t].  No GCD reduction is performed: sums are taken over
// the product of the denominators (or the shared one, when equal) and the
// result is collapsed once, at the end, by to_polynomial() or expand().
//
// Invariants: den != 0 and den has a positive leading coefficient.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::one()) {}
  RationalFunction(Polynomial num);  // NOLINT: implicit lift from Z[t]
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction integer(long c) { return RationalFunction(Polynomial::constant(c)); }

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }

  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const { return {-num_, den_}; }

  // The polynomial equal to num/den.  Throws NotDivisible otherwise.
  Polynomial to_polynomial() const;

  // Power-series expansion keeping degrees 0..order.  Requires den(0) != 0.
  // Throws NonIntegerCoefficient if any kept coefficient is fractional.
  Polynomial expand(std::size_t order) const;

  std::string to_string() const;

 private:
  void normalize_sign();

  Polynomial num_;
  Polynomial den_;
};

Polynomial ratfunc_normalize_to_poly(const RationalFunction& r);

// Keeps degrees 0..order of p (the truncated-series view of a polynomial).
inline Polynomial truncate_to_order(const Polynomial& p, std::size_t order) {
  return truncate_below(p, order + 1);
}

}  // namespace ihiggs

#endif  // IHIGGS_RATIONAL_FUNCTION_HPP
