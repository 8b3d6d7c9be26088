#include "ihiggs/blowup.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "ihiggs/errors.hpp"
#include "ihiggs/spaces.hpp"

namespace ihiggs::blowup {

Polynomial cone_truncate(const ConeSpec& spec) {
  if (spec.complex_dim < 1) throw PreconditionError("cone_truncate needs complex_dim >= 1");
  const Polynomial image_quotient = one_minus_t_pow(2) * spec.projective_ih;
  Polynomial kept = truncate_below(image_quotient, static_cast<std::size_t>(spec.complex_dim));
  if (auto i = kept.first_negative()) throw NegativeCokernel(*i, kept.coeffs()[*i]);
  return kept;
}

namespace {

Polynomial shift_part(const Polynomial& f, long cutoff_d) {
  const long size = static_cast<long>(f.size());
  const long top = std::max(size, std::min(size + 2, cutoff_d + 1));
  std::vector<mpz_class> out(static_cast<std::size_t>(std::max(top, 0L)));
  for (long q = 2; q < top; ++q) {
    const long src = q <= cutoff_d ? q - 2 : q;
    out[static_cast<std::size_t>(q)] = f.coeff(static_cast<std::size_t>(src));
  }
  return Polynomial(std::move(out));
}

}  // namespace

SplitSeries shifted_fiber_series(const SplitSeries& fiber, long cutoff_d) {
  return {shift_part(fiber.plus, cutoff_d), shift_part(fiber.minus, cutoff_d)};
}

Polynomial kunneth_z2(const SplitSeries& base, const SplitSeries& fiber) {
  return base.plus * fiber.plus + base.minus * fiber.minus;
}

Polynomial correction_theorem2(const Genus& g) {
  const SplitSeries fiber = shifted_fiber_series(spaces::incidence_split(g), g.incidence_dim());
  return kunneth_z2(spaces::tjtilde_split(g), fiber);
}

Polynomial correction_theorem3(const Genus& g) {
  const SplitSeries base{spaces::projective_space(g.two_g() - 1), Polynomial{}};
  const SplitSeries fiber = shifted_fiber_series(spaces::incidence_split(g), g.incidence_dim());
  return kunneth_z2(base, fiber);
}

Polynomial correction_theorem2_closed_form(const Genus& g) {
  const long n = g.value();
  const Polynomial den = one_minus_t_pow(2) * one_minus_t_pow(4);
  const SplitSeries tj = spaces::tjtilde_split(g);
  const Polynomial plus_shift =
      exact_div(t_pow_one_minus(2, 4 * n - 4) * one_minus_t_pow(4 * n - 6), den);
  const Polynomial minus_shift =
      exact_div(one_minus_t_pow(4 * n - 4) * t_pow_one_minus(4, 4 * n - 10), den) +
      Polynomial::t_pow(static_cast<std::size_t>(4 * n - 6));
  return tj.plus * plus_shift + tj.minus * minus_shift;
}

Polynomial correction_theorem3_closed_form(const Genus& g) {
  const long n = g.value();
  const Polynomial den = one_minus_t_pow(2) * one_minus_t_pow(4);
  return geometric_quotient(4 * n, 2) *
         exact_div(t_pow_one_minus(2, 4 * n - 6) * one_minus_t_pow(4 * n - 4), den);
}

Polynomial ip_bl_p_upsilon(const Genus& g) {
  if (g.value() == 2) return spaces::p_s2a(g);
  const Polynomial exceptional_fiber = spaces::projective_space(g.two_g() - 5) - Polynomial::one();
  return spaces::d1_poly(g) - spaces::p_s2a(g) * exceptional_fiber;
}

Polynomial ip_p_upsilon(const Genus& g) {
  const long n = g.value();
  return exact_div(one_minus_t_pow(8 * n - 8) * one_minus_t_pow(4 * n),
                   one_minus_t_pow(2) * one_minus_t_pow(4));
}

Polynomial ip_p_upsilon_pipeline(const Genus& g) {
  return ip_bl_p_upsilon(g) - correction_theorem3(g);
}

Polynomial ip_upsilon(const Genus& g) { return geometric_quotient(4 * g.value(), 4); }

Polynomial ip_upsilon_cone(const Genus& g) {
  return cone_truncate({ip_p_upsilon(g), upsilon_cone_dim(g)});
}

}  // namespace ihiggs::blowup
