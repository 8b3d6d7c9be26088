#ifndef IHIGGS_ERRORS_HPP
#define IHIGGS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ihiggs {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic failures: a formula did not collapse the way it must.  These are
// the library's self-diagnostics for transcription errors.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// exact_div(a, b) found a nonzero remainder.  The remainder is reported with
// rational coefficients (it is integral whenever b is monic up to sign).
class NotDivisible : public ArithmeticError {
 public:
  NotDivisible(std::string context, std::vector<mpq_class> remainder);

  const std::vector<mpq_class>& remainder() const noexcept { return remainder_; }

 private:
  std::vector<mpq_class> remainder_;
};

// A quantity that must have integer coefficients has a fractional one.
class NonIntegerCoefficient : public ArithmeticError {
 public:
  NonIntegerCoefficient(std::string context, std::size_t degree, const mpq_class& value);

  std::size_t degree() const noexcept { return degree_; }
  const mpq_class& value() const noexcept { return value_; }

 private:
  std::size_t degree_;
  mpq_class value_;
};

// A Betti-number series has a negative coefficient.
class NegativeCoefficient : public ArithmeticError {
 public:
  NegativeCoefficient(std::string context, std::size_t degree, const mpz_class& value);

  std::size_t degree() const noexcept { return degree_; }

 private:
  std::size_t degree_;
};

// Cone truncation saw a negative cokernel dimension, i.e. the Lefschetz map
// was not injective on the supplied input.
class NegativeCokernel : public ArithmeticError {
 public:
  NegativeCokernel(std::size_t degree, const mpz_class& value);

  std::size_t degree() const noexcept { return degree_; }

 private:
  std::size_t degree_;
};

// A polynomial has a nonzero coefficient past its expected top degree.
class DegreeMismatch : public ArithmeticError {
 public:
  DegreeMismatch(std::string context, std::size_t degree, const mpz_class& value);

  std::size_t degree() const noexcept { return degree_; }

 private:
  std::size_t degree_;
};

class InvalidGenus : public Error {
 public:
  explicit InvalidGenus(long g);
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace ihiggs

#endif  // IHIGGS_ERRORS_HPP
