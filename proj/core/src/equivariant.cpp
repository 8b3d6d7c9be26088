#include "ihiggs/equivariant.hpp"

#include <utility>

#include "ihiggs/errors.hpp"
#include "ihiggs/spaces.hpp"

namespace ihiggs::equivariant {

namespace {

using R = RationalFunction;

R ratio(Polynomial num, Polynomial den) { return {std::move(num), std::move(den)}; }

Polynomial t_pow(long k) { return Polynomial::t_pow(static_cast<std::size_t>(k)); }

EquivariantSeries expand_series(std::string name, const R& r, const Genus& g, std::size_t order) {
  Polynomial value;
  try {
    value = r.expand(order);
  } catch (const NonIntegerCoefficient& e) {
    throw NonIntegerCoefficient(name, e.degree(), e.value());
  }
  return {std::move(name), std::move(value), g, order};
}

}  // namespace

std::size_t default_truncation_order(const Genus& g) {
  return static_cast<std::size_t>(6 * g.value() - 2);
}

RationalFunction p_sl2_r_rational(const Genus& g) {
  const long n = g.value();
  const auto two_g = static_cast<unsigned>(2 * n);
  const Polynomial up = binomial_power(+1, two_g);
  const Polynomial down = binomial_power(-1, two_g);
  const Polynomial den24 = one_minus_t_pow(2) * one_minus_t_pow(4);
  const Polynomial t4g4 = t_pow(4 * n - 4);

  R term1 = ratio(pow(Polynomial{1, 0, 0, 1}, two_g) - up * t_pow(2 * n + 2), den24);

  R term2 = R(-t4g4) + ratio(t_pow(2 * n + 2) * up, den24) +
            ratio(down * t4g4, Polynomial{4, 0, 4});

  R bracket = ratio(Polynomial::constant(2 * n), Polynomial{1, 1}) +
              ratio(Polynomial::one(), Polynomial{-1, 0, 1}) +
              ratio(Polynomial::constant(-1), Polynomial::constant(2)) +
              R(Polynomial::constant(3 - 2 * n));
  R term3 = ratio(up * t4g4, Polynomial::constant(2) * one_minus_t_pow(2)) * bracket;

  const Polynomial up2 = binomial_power(+1, two_g - 2);
  const Polynomial down2 = binomial_power(-1, two_g - 2);
  R term4 = ratio((spaces::two_pow(two_g) - 1) * t4g4 * (up2 + down2 - Polynomial::constant(2)),
                  Polynomial::constant(2));

  return term1 + term2 + term3 + term4;
}

EquivariantSeries p_sl2_r(const Genus& g, std::size_t order) {
  return expand_series("p_sl2_r", p_sl2_r_rational(g), g, order);
}

RationalFunction p_sl2_sigma_rational(const Genus& g) {
  const auto two_g = static_cast<unsigned>(g.two_g());
  const Polynomial up = binomial_power(+1, two_g);
  const Polynomial down = binomial_power(-1, two_g);
  const Polynomial den4 = one_minus_t_pow(4);
  R plus = ratio(up + down, Polynomial::constant(2)) +
           R(spaces::two_pow(two_g) * (geometric_quotient(4 * g.value(), 2) - Polynomial::one()));
  R minus = ratio(up - down, Polynomial::constant(2));
  return ratio(Polynomial::one(), den4) * plus + ratio(Polynomial::t_pow(2), den4) * minus;
}

EquivariantSeries p_sl2_sigma(const Genus& g, std::size_t order) {
  return expand_series("p_sl2_sigma", p_sl2_sigma_rational(g), g, order);
}

Polynomial p_sl2_e_ss(const Genus& g) {
  return spaces::incidence_split(g).plus * spaces::projective_space(g.two_g() - 1);
}

Polynomial p_sl2_e_ss_closed_form(const Genus& g) {
  const long n = g.value();
  const Polynomial a = one_minus_t_pow(4 * n - 4);
  return exact_div(a * a * one_minus_t_pow(4 * n),
                   one_minus_t_pow(2) * one_minus_t_pow(2) * one_minus_t_pow(4));
}

RationalFunction p_sl2_p_hom1_ss_rational(const Genus& g) {
  return ratio(one_minus_t_pow(4 * g.value()), one_minus_t_pow(4) * one_minus_t_pow(2));
}

EquivariantSeries p_sl2_p_hom1_ss(const Genus& g, std::size_t order) {
  return expand_series("p_sl2_p_hom1_ss", p_sl2_p_hom1_ss_rational(g), g, order);
}

Polynomial p_bl_p_upsilon_stable_quotient(const Genus& g) {
  const long n = g.value();
  const Polynomial p2 = geometric_quotient(6, 2);
  R first = R(spaces::blown_up_p5()) *
            ratio(one_minus_t_pow(4 * n - 8) * one_minus_t_pow(4 * n - 4) * one_minus_t_pow(4 * n),
                  one_minus_t_pow(2) * one_minus_t_pow(4) * one_minus_t_pow(6));
  R second = R(p2) *
             ratio(one_minus_t_pow(4 * n - 4) * one_minus_t_pow(4 * n),
                   one_minus_t_pow(2) * one_minus_t_pow(4)) *
             ratio(t_pow_one_minus(2, 2 * (2 * n - 5)), one_minus_t_pow(2));
  return (first - second).to_polynomial();
}

RationalFunction p_sl2_p_upsilon_ss_rational(const Genus& g) {
  return R(p_bl_p_upsilon_stable_quotient(g)) - R(p_sl2_e_ss(g)) + p_sl2_p_hom1_ss_rational(g);
}

EquivariantSeries p_sl2_p_upsilon_ss(const Genus& g, std::size_t order) {
  return expand_series("p_sl2_p_upsilon_ss", p_sl2_p_upsilon_ss_rational(g), g, order);
}

Polynomial p_sl2_e2_ss(const Genus& g) {
  return spaces::tjtilde_split(g).plus * spaces::incidence_split(g).plus +
         spaces::tjtilde_split(g).minus * spaces::incidence_split(g).minus;
}

Polynomial p_sl2_e2_ss_closed_form(const Genus& g) {
  const long n = g.value();
  const auto two_g = static_cast<unsigned>(2 * n);
  const Polynomial up = binomial_power(+1, two_g);
  const Polynomial down = binomial_power(-1, two_g);
  const Polynomial den24 = one_minus_t_pow(2) * one_minus_t_pow(4);
  const Polynomial a = one_minus_t_pow(4 * n - 4);
  R tj_plus = ratio(up + down, Polynomial::constant(2)) +
              R(Polynomial::constant(spaces::two_pow(two_g))) * (ratio(one_minus_t_pow(4 * n), one_minus_t_pow(2)) - R::integer(1));
  R tj_minus = ratio(up - down, Polynomial::constant(2));
  R sum = tj_plus * ratio(a * a, den24) +
          tj_minus * ratio(Polynomial::t_pow(2) * a * one_minus_t_pow(4 * n - 8), den24);
  return sum.to_polynomial();
}

EquivariantSeries p_sl2_r2s(const Genus& g, std::size_t order) {
  const mpz_class weight = spaces::two_pow(static_cast<unsigned long>(g.two_g()));
  Polynomial value = p_sl2_r(g, order).value;
  value += weight * (p_sl2_p_upsilon_ss(g, order).value - spaces::classifying_sl2().expand(order));
  value += truncate_to_order(p_sl2_e2_ss(g), order);
  value -= p_sl2_sigma(g, order).value;
  if (auto i = value.first_negative()) throw NegativeCoefficient("p_sl2_r2s", *i, value.coeffs()[*i]);
  return {"p_sl2_r2s", std::move(value), g, order};
}

}  // namespace ihiggs::equivariant
