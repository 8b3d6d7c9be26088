#include "ihiggs/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "ihiggs/errors.hpp"

namespace ihiggs {

Polynomial::Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Polynomial Polynomial::constant(const Coeff& c) { return Polynomial(std::vector<Coeff>{c}); }

Polynomial Polynomial::monomial(const Coeff& c, std::size_t degree) {
  if (c == 0) return {};
  std::vector<Coeff> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Polynomial::Coeff Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Coeff(0);
}

const Polynomial::Coeff& Polynomial::leading() const {
  if (coeffs_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Polynomial::Coeff Polynomial::evaluate(const Coeff& t) const {
  Coeff acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

bool Polynomial::has_nonnegative_coeffs() const { return !first_negative().has_value(); }

std::optional<std::size_t> Polynomial::first_negative() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) < 0) return i;
  return std::nullopt;
}

Polynomial Polynomial::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Coeff> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Polynomial::Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Coeff& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Coeff& c = coeffs_[i];
    if (c == 0) continue;
    Coeff mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << ' ';
    os << 't';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }

namespace {

// Long division over Q; used only when the integer path meets a leading
// coefficient that does not divide.
Polynomial exact_div_rational(const Polynomial& a, const Polynomial& b) {
  std::vector<mpq_class> rem(a.coeffs().begin(), a.coeffs().end());
  const std::size_t db = *b.degree();
  const mpq_class lead(b.leading());
  std::vector<mpq_class> quot(rem.size() >= db + 1 ? rem.size() - db : 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    mpq_class q = rem[k + db] / lead;
    quot[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * mpq_class(b.coeffs()[j]);
  }
  while (!rem.empty() && rem.back() == 0) rem.pop_back();
  if (!rem.empty()) throw NotDivisible("exact_div", std::move(rem));

  std::vector<mpz_class> out(quot.size());
  for (std::size_t k = 0; k < quot.size(); ++k) {
    quot[k].canonicalize();
    if (quot[k].get_den() != 1) throw NonIntegerCoefficient("exact_div quotient", k, quot[k]);
    out[k] = quot[k].get_num();
  }
  return Polynomial(std::move(out));
}

}  // namespace

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw PreconditionError("exact_div by the zero polynomial");
  if (a.is_zero()) return {};
  const std::size_t db = *b.degree();
  const std::size_t da = *a.degree();
  if (da < db) {
    std::vector<mpq_class> rem(a.coeffs().begin(), a.coeffs().end());
    throw NotDivisible("exact_div", std::move(rem));
  }

  std::vector<mpz_class> rem = a.coeffs();
  std::vector<mpz_class> quot(da - db + 1);
  const mpz_class& lead = b.leading();
  mpz_class q;
  for (std::size_t k = quot.size(); k-- > 0;) {
    mpz_class& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return exact_div_rational(a, b);
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    quot[k] = q;
    for (std::size_t j = 0; j <= db; ++j) {
      if (b.coeffs()[j] == 0) continue;
      mpz_submul(rem[k + j].get_mpz_t(), q.get_mpz_t(), b.coeffs()[j].get_mpz_t());
    }
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (rem[i] != 0) {
      rem.resize(db);
      std::vector<mpq_class> r(rem.begin(), rem.end());
      while (!r.empty() && r.back() == 0) r.pop_back();
      throw NotDivisible("exact_div", std::move(r));
    }
  }
  return Polynomial(std::move(quot));
}

Polynomial pow(const Polynomial& p, unsigned n) {
  Polynomial result = Polynomial::one();
  Polynomial base = p;
  while (n) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n) base *= base;
  }
  return result;
}

Polynomial geometric_quotient(long a_exp, long b_exp) {
  if (a_exp <= 0 || b_exp <= 0)
    throw PreconditionError("geometric_quotient needs positive exponents");
  if (a_exp % b_exp != 0) {
    // Reuse the division path so the caller sees the actual remainder.
    return exact_div(one_minus_t_pow(a_exp), one_minus_t_pow(b_exp));
  }
  std::vector<mpz_class> v(static_cast<std::size_t>(a_exp - b_exp + 1));
  for (long k = 0; k < a_exp; k += b_exp) v[static_cast<std::size_t>(k)] = 1;
  return Polynomial(std::move(v));
}

Polynomial binomial_power(int sign, unsigned exponent) {
  if (sign != 1 && sign != -1) throw PreconditionError("binomial_power sign must be +1 or -1");
  std::vector<mpz_class> v(exponent + 1);
  for (unsigned k = 0; k <= exponent; ++k) {
    mpz_bin_uiui(v[k].get_mpz_t(), exponent, k);
    if (sign < 0 && (k % 2 == 1)) v[k] = -v[k];
  }
  return Polynomial(std::move(v));
}

Polynomial truncate_below(const Polynomial& p, std::size_t cutoff) {
  const auto& c = p.coeffs();
  if (cutoff >= c.size()) return p;
  return Polynomial(std::vector<mpz_class>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(cutoff)));
}

Polynomial t_pow_one_minus(long m, long e) {
  if (m < 0 || m + e < 0)
    throw PreconditionError("t^m (1 - t^e) needs m >= 0 and m + e >= 0");
  return Polynomial::t_pow(static_cast<std::size_t>(m)) -
         Polynomial::t_pow(static_cast<std::size_t>(m + e));
}

}  // namespace ihiggs
