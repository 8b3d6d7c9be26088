#ifndef IHIGGS_SPACES_HPP
#define IHIGGS_SPACES_HPP

#include <cstddef>
#include <string>
#include <variant>

#include "ihiggs/genus.hpp"
#include "ihiggs/polynomial.hpp"
#include "ihiggs/rational_function.hpp"
#include "ihiggs/split_series.hpp"

// Poincare series of the building-block spaces consumed by the blow-up and
// equivariant formulas.
namespace ihiggs::spaces {

struct SpaceSeries {
  std::string name;
  std::variant<Polynomial, SplitSeries> series;
  Genus genus;
};

// P_t(P^n) = 1 + t^2 + ... + t^{2n}.
Polynomial projective_space(long n);

// P_t(BSL(2)) = 1 / (1 - t^4).
RationalFunction classifying_sl2();

// BSO(2) = P^infinity split by the orientation-reversing involution:
// plus = sum t^{4k}, minus = sum t^{4k+2}, both kept up to degree `order`.
SplitSeries classifying_so2_split(std::size_t order);

// Incidence variety I_{2g-3} in P^{2g-3} x P^{2g-3}:
//   plus  = (1 - t^{4g-4})^2 / ((1 - t^2)(1 - t^4))
//   minus = t^2 (1 - t^{4g-4})(1 - t^{4g-8}) / ((1 - t^2)(1 - t^4))
// At g = 2 the minus numerator contains (1 - t^0) and vanishes.
SplitSeries incidence_split(const Genus& g);

// Blow-up of T*J along its 2^{2g} Z2-fixed points:
//   plus  = 1/2 ((1+t)^{2g} + (1-t)^{2g}) + 2^{2g} ((1 - t^{4g})/(1 - t^2) - 1)
//   minus = 1/2 ((1+t)^{2g} - (1-t)^{2g})
SplitSeries tjtilde_split(const Genus& g);

// P_t(Gr^w(k, 2g)) = prod_{1<=i<=k} (1 - t^{4g-4k+4i}) / (1 - t^{2i}), k in {2, 3}.
// k = 3 needs g >= 3.
Polynomial symplectic_grassmannian(int k, const Genus& g);

// P_t(P(S^2 A)) = P_t(P^2) * P_t(Gr^w(2, 2g)).
Polynomial p_s2a(const Genus& g);

// P_t of P^5 blown up along P^2:
// (1 - t^12)/(1 - t^2) - (1 - t^6)/(1 - t^2) + ((1 - t^6)/(1 - t^2))^2.
Polynomial blown_up_p5();

// IP_t(D_1) = blown_up_p5() * P_t(Gr^w(3, 2g)); only defined for g >= 3.
Polynomial d1_poly(const Genus& g);

// 2^n as an exact integer.
mpz_class two_pow(unsigned long n);

}  // namespace ihiggs::spaces

#endif  // IHIGGS_SPACES_HPP
