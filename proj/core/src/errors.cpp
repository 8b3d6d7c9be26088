#include "ihiggs/errors.hpp"

#include <sstream>
#include <utility>

namespace ihiggs {

namespace {

std::string describe_remainder(const std::string& context, const std::vector<mpq_class>& rem) {
  std::ostringstream os;
  os << context << ": not divisible, remainder [";
  for (std::size_t i = 0; i < rem.size(); ++i) os << (i ? ", " : "") << rem[i];
  os << "]";
  return os.str();
}

template <typename Num>
std::string at_degree(const std::string& context, const char* what, std::size_t degree, const Num& v) {
  std::ostringstream os;
  os << context << ": " << what << " at t^" << degree << " (value " << v << ")";
  return os.str();
}

}  // namespace

NotDivisible::NotDivisible(std::string context, std::vector<mpq_class> remainder)
    : ArithmeticError(describe_remainder(context, remainder)), remainder_(std::move(remainder)) {}

NonIntegerCoefficient::NonIntegerCoefficient(std::string context, std::size_t degree,
                                             const mpq_class& value)
    : ArithmeticError(at_degree(context, "non-integer coefficient", degree, value)),
      degree_(degree),
      value_(value) {}

NegativeCoefficient::NegativeCoefficient(std::string context, std::size_t degree,
                                         const mpz_class& value)
    : ArithmeticError(at_degree(context, "negative coefficient", degree, value)), degree_(degree) {}

NegativeCokernel::NegativeCokernel(std::size_t degree, const mpz_class& value)
    : ArithmeticError(at_degree("cone_truncate", "negative cokernel dimension", degree, value)),
      degree_(degree) {}

DegreeMismatch::DegreeMismatch(std::string context, std::size_t degree, const mpz_class& value)
    : ArithmeticError(at_degree(context, "nonzero coefficient past the expected degree", degree, value)),
      degree_(degree) {}

InvalidGenus::InvalidGenus(long g)
    : Error("invalid genus " + std::to_string(g) + ": the genus must be at least 2") {}

}  // namespace ihiggs
