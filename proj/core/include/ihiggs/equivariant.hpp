#ifndef IHIGGS_EQUIVARIANT_HPP
#define IHIGGS_EQUIVARIANT_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "ihiggs/genus.hpp"
#include "ihiggs/polynomial.hpp"
#include "ihiggs/rational_function.hpp"

// SL(2)-equivariant Poincare series feeding the equivariant blow-up
// assembly.  Rational series are built exactly in the RationalFunction layer
// and expanded once; every expansion is checked for integrality.
namespace ihiggs::equivariant {

struct EquivariantSeries {
  std::string name;
  Polynomial value;
  Genus genus;
  // nullopt: value is exact (all infinite denominators cancelled).
  // Otherwise value holds the degrees 0..*truncation_order of the series.
  std::optional<std::size_t> truncation_order;
};

// Default expansion order, 6g - 2: past the top degree 6g - 6 of IP_t(M) with
// a margin that exposes off-by-degree errors in the final check.
std::size_t default_truncation_order(const Genus& g);

// P_t^{SL(2)}(R) from the Daskalopoulos-Weitsman-Wilkin formula, as the sum
// of its five displayed terms.
RationalFunction p_sl2_r_rational(const Genus& g);
EquivariantSeries p_sl2_r(const Genus& g, std::size_t order);

// P_t^{SL(2)}(Sigma) = (P+(T*J~) + t^2 P-(T*J~)) / (1 - t^4).
RationalFunction p_sl2_sigma_rational(const Genus& g);
EquivariantSeries p_sl2_sigma(const Genus& g, std::size_t order);

// P_t^{SL(2)}(E^ss) = P+(I_{2g-3}) P_t(P^{2g-1}).
Polynomial p_sl2_e_ss(const Genus& g);
// (1-t^{4g-4})^2 (1-t^{4g}) / ((1-t^2)^2 (1-t^4)).
Polynomial p_sl2_e_ss_closed_form(const Genus& g);

// P_t^{SL(2)}(PHom_1(sl(2), H^g)^ss) = (1-t^{4g}) / ((1-t^4)(1-t^2)).
RationalFunction p_sl2_p_hom1_ss_rational(const Genus& g);
EquivariantSeries p_sl2_p_hom1_ss(const Genus& g, std::size_t order);

// P_t((Bl_{PHom_1} PUpsilon^{-1}(0)^ss)^s // SL(2)) written as the single
// display valid for every g >= 2:
//   P(P^5-hat) (1-t^{4g-8})(1-t^{4g-4})(1-t^{4g}) / ((1-t^2)(1-t^4)(1-t^6))
//   - (1-t^6)/(1-t^2) (1-t^{4g-4})(1-t^{4g}) / ((1-t^2)(1-t^4))
//       * t^2 (1-t^{2(2g-5)}) / (1-t^2)
// At g = 2 the first line vanishes and t^2(1-t^{-2})/(1-t^2) = -1.
Polynomial p_bl_p_upsilon_stable_quotient(const Genus& g);

// Local equivariant blow-up formula solved for P_t^{SL(2)}(PUpsilon^{-1}(0)^ss):
// P((Bl)^s//SL(2)) - P^{SL(2)}(E^ss) + P^{SL(2)}(PHom_1^ss).
RationalFunction p_sl2_p_upsilon_ss_rational(const Genus& g);
EquivariantSeries p_sl2_p_upsilon_ss(const Genus& g, std::size_t order);

// P_t^{SL(2)}(E_2^ss) = P+(T*J~) P+(I_{2g-3}) + P-(T*J~) P-(I_{2g-3}).
Polynomial p_sl2_e2_ss(const Genus& g);
// The same, written out from the closed forms of the four factors.
Polynomial p_sl2_e2_ss_closed_form(const Genus& g);

// Equivariant blow-up assembly up to R_2^s:
//   P(R) + 2^{2g} (P(PUpsilon^{-1}(0)^ss) - P(BSL(2))) + P(E_2^ss) - P(Sigma),
// truncated to `order`.  Equal to P_t(R_2^s / SL(2)) in that range.
// Throws NegativeCoefficient if a kept coefficient is negative.
EquivariantSeries p_sl2_r2s(const Genus& g, std::size_t order);

}  // namespace ihiggs::equivariant

#endif  // IHIGGS_EQUIVARIANT_HPP
