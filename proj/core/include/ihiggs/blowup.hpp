#ifndef IHIGGS_BLOWUP_HPP
#define IHIGGS_BLOWUP_HPP

#include "ihiggs/genus.hpp"
#include "ihiggs/polynomial.hpp"
#include "ihiggs/split_series.hpp"

// Intersection-cohomology blowing-up corrections and the intersection
// Poincare polynomials of the deepest singularity of M.
namespace ihiggs::blowup {

// Affine cone over a projective GIT quotient.
struct ConeSpec {
  Polynomial projective_ih;  // IP_t of the projectivized quotient
  long complex_dim;          // complex dimension n of the affine cone quotient
};

// Complex dimension of Upsilon^{-1}(0)//PGL(2), the cone at each of the
// 2^{2g} deepest points.
inline long upsilon_cone_dim(const Genus& g) { return 6 * g.value() - 6; }

// IH^i of the affine cone is coker(lambda : IH^{i-2} -> IH^i) of the base for
// i < n and vanishes for i >= n; lambda is the cup product with the
// hyperplane class and is injective below n.  So the result is
// (1 - t^2) * projective_ih truncated below n.
//
// Throws NegativeCokernel when a kept coefficient is negative.
Polynomial cone_truncate(const ConeSpec& spec);

// Degree reindexing of a fiber series by t(q): coefficient q of the result is
// F[q-2] for 2 <= q <= cutoff_d and F[q] for q > cutoff_d.  F's coefficients
// in degrees cutoff_d - 1 and cutoff_d are used by neither branch.
SplitSeries shifted_fiber_series(const SplitSeries& fiber, long cutoff_d);

// Invariant part of a Z2 Kunneth product: plus*plus + minus*minus.
Polynomial kunneth_z2(const SplitSeries& base, const SplitSeries& fiber);

// sum_{p+q=i} dim[H^p(T*J~) (x) H^{t(q)}(I_{2g-3})]^{Z2} t^i.
Polynomial correction_theorem2(const Genus& g);

// sum_{p+q=i} dim[H^p(P^{2g-1}) (x) H^{t(q)}(I_{2g-3})]^{Z2} t^i, where Z2
// acts trivially on H^*(P^{2g-1}).
Polynomial correction_theorem3(const Genus& g);

// Closed rational forms of the two corrections, kept as cross-checks:
//   theorem2: P+(T*J~) t^2(1-t^{4g-4})(1-t^{4g-6})/((1-t^2)(1-t^4))
//           + P-(T*J~) (t^4(1-t^{4g-4})(1-t^{4g-10})/((1-t^2)(1-t^4)) + t^{4g-6})
//   theorem3: (1-t^{4g})/(1-t^2) * t^2(1-t^{4g-6})(1-t^{4g-4})/((1-t^2)(1-t^4))
Polynomial correction_theorem2_closed_form(const Genus& g);
Polynomial correction_theorem3_closed_form(const Genus& g);

// IP_t(Bl_{PHom_1} PUpsilon^{-1}(0)^ss // PGL(2)).
// g = 2: P^2-bundle over Gr^w(2,4), so P_t(P(S^2 A)).
// g >= 3: IP_t(D_1) - P_t(P(S^2 A)) (P_t(P^{2g-5}) - 1), the ordinary
// blow-up formula solved for the blown-down space.
Polynomial ip_bl_p_upsilon(const Genus& g);

// IP_t(PUpsilon^{-1}(0)//PGL(2)) = (1-t^{8g-8})(1-t^{4g}) / ((1-t^2)(1-t^4)).
Polynomial ip_p_upsilon(const Genus& g);
// Same quantity via ip_bl_p_upsilon - correction_theorem3.
Polynomial ip_p_upsilon_pipeline(const Genus& g);

// IP_t(Upsilon^{-1}(0)//PGL(2)) = (1-t^{4g}) / (1-t^4).
Polynomial ip_upsilon(const Genus& g);
// Same quantity via cone_truncate(ip_p_upsilon, 6g-6).
Polynomial ip_upsilon_cone(const Genus& g);

}  // namespace ihiggs::blowup

#endif  // IHIGGS_BLOWUP_HPP
