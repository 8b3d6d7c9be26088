#include "ihiggs/spaces.hpp"

#include <utility>
#include <vector>

#include "ihiggs/errors.hpp"

namespace ihiggs::spaces {

namespace {

// Exact halving; every caller halves a sum or difference of binomial
// expansions whose surviving coefficients are even.
Polynomial halve(const Polynomial& p, const char* context) {
  std::vector<mpz_class> out(p.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const mpz_class& c = p.coeffs()[i];
    if (!mpz_even_p(c.get_mpz_t())) throw NonIntegerCoefficient(context, i, mpq_class(c, 2));
    mpz_divexact_ui(out[i].get_mpz_t(), c.get_mpz_t(), 2);
  }
  return Polynomial(std::move(out));
}

}  // namespace

mpz_class two_pow(unsigned long n) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, n);
  return r;
}

Polynomial projective_space(long n) {
  if (n < 0) throw PreconditionError("projective_space needs n >= 0");
  return geometric_quotient(2 * n + 2, 2);
}

RationalFunction classifying_sl2() { return {Polynomial::one(), one_minus_t_pow(4)}; }

SplitSeries classifying_so2_split(std::size_t order) {
  std::vector<mpz_class> plus(order + 1), minus(order + 1);
  for (std::size_t k = 0; k <= order; k += 4) plus[k] = 1;
  for (std::size_t k = 2; k <= order; k += 4) minus[k] = 1;
  return {Polynomial(std::move(plus)), Polynomial(std::move(minus))};
}

SplitSeries incidence_split(const Genus& g) {
  const long n = g.value();
  const Polynomial den = one_minus_t_pow(2) * one_minus_t_pow(4);
  const Polynomial a = one_minus_t_pow(4 * n - 4);
  Polynomial plus = exact_div(a * a, den);
  Polynomial minus = exact_div(Polynomial::t_pow(2) * a * one_minus_t_pow(4 * n - 8), den);
  return {std::move(plus), std::move(minus)};
}

SplitSeries tjtilde_split(const Genus& g) {
  const auto two_g = static_cast<unsigned>(g.two_g());
  const Polynomial up = binomial_power(+1, two_g);
  const Polynomial down = binomial_power(-1, two_g);
  Polynomial plus = halve(up + down, "tjtilde_split plus") +
                    two_pow(two_g) * (geometric_quotient(4 * g.value(), 2) - Polynomial::one());
  Polynomial minus = halve(up - down, "tjtilde_split minus");
  return {std::move(plus), std::move(minus)};
}

Polynomial symplectic_grassmannian(int k, const Genus& g) {
  if (k != 2 && k != 3) throw PreconditionError("symplectic_grassmannian supports k = 2 or 3 only");
  if (k == 3 && g.value() < 3) throw PreconditionError("symplectic_grassmannian(3, g) needs g >= 3");
  const long n = g.value();
  Polynomial num = Polynomial::one();
  Polynomial den = Polynomial::one();
  for (int i = 1; i <= k; ++i) {
    num *= one_minus_t_pow(4 * n - 4 * k + 4 * i);
    den *= one_minus_t_pow(2 * i);
  }
  return exact_div(num, den);
}

Polynomial p_s2a(const Genus& g) { return projective_space(2) * symplectic_grassmannian(2, g); }

Polynomial blown_up_p5() {
  const Polynomial p2 = geometric_quotient(6, 2);
  return geometric_quotient(12, 2) - p2 + p2 * p2;
}

Polynomial d1_poly(const Genus& g) {
  if (g.value() < 3) throw PreconditionError("D_1 is only defined for g >= 3");
  return blown_up_p5() * symplectic_grassmannian(3, g);
}

}  // namespace ihiggs::spaces
