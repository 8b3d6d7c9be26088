#include "ihiggs/rational_function.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "ihiggs/errors.hpp"

namespace ihiggs {

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_(Polynomial::one()) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw PreconditionError("rational function with zero denominator");
  normalize_sign();
}

void RationalFunction::normalize_sign() {
  if (sgn(den_.leading()) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.num_.is_zero()) throw PreconditionError("division by the zero rational function");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize_sign();
  return *this;
}

Polynomial RationalFunction::to_polynomial() const { return exact_div(num_, den_); }

Polynomial RationalFunction::expand(std::size_t order) const {
  const mpz_class d0 = den_.coeff(0);
  if (d0 == 0)
    throw PreconditionError("series expansion needs a denominator with nonzero constant term");

  // c_k = (a_k - sum_{j>=1} d_j c_{k-j}) / d_0, over Q.
  std::vector<mpq_class> c(order + 1);
  const auto& d = den_.coeffs();
  const mpq_class inv_d0 = mpq_class(1) / mpq_class(d0);
  for (std::size_t k = 0; k <= order; ++k) {
    mpq_class acc(num_.coeff(k));
    const std::size_t jmax = std::min(k, d.size() - 1);
    for (std::size_t j = 1; j <= jmax; ++j)
      if (d[j] != 0) acc -= mpq_class(d[j]) * c[k - j];
    acc *= inv_d0;
    acc.canonicalize();
    c[k] = std::move(acc);
  }
  std::vector<mpz_class> out(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    if (c[k].get_den() != 1) throw NonIntegerCoefficient("series expansion", k, c[k]);
    out[k] = c[k].get_num();
  }
  return Polynomial(std::move(out));
}

std::string RationalFunction::to_string() const {
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

Polynomial ratfunc_normalize_to_poly(const RationalFunction& r) { return r.to_polynomial(); }

}  // namespace ihiggs
