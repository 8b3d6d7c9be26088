#include <gtest/gtest.h>

#include "ihiggs/blowup.hpp"
#include "ihiggs/errors.hpp"
#include "ihiggs/spaces.hpp"
#include "support.hpp"

namespace ihiggs {
namespace {

using testing::P;

TEST(Blowup, ConeTruncate) {
  const Polynomial base = P({1, 0, 1, 0, 2, 0, 2, 0, 1, 0, 1});
  EXPECT_EQ(blowup::cone_truncate({base, 6}), P({1, 0, 0, 0, 1}));
  EXPECT_EQ(blowup::cone_truncate({Polynomial::one(), 1}), Polynomial::one());
}

TEST(Blowup, ConeTruncateRejectsNegativeCokernel) {
  try {
    blowup::cone_truncate({Polynomial::one(), 3});
    FAIL() << "expected NegativeCokernel";
  } catch (const NegativeCokernel& e) {
    EXPECT_EQ(e.degree(), 2u);
  }
}

TEST(Blowup, ShiftedFiberSeriesGenusTwo) {
  const SplitSeries s = blowup::shifted_fiber_series(spaces::incidence_split(Genus(2)), 1);
  EXPECT_EQ(s.plus, Polynomial::t_pow(2));
  EXPECT_TRUE(s.minus.is_zero());
}

TEST(Blowup, ShiftedFiberSeriesGenusThree) {
  const SplitSeries s = blowup::shifted_fiber_series(spaces::incidence_split(Genus(3)), 5);
  EXPECT_EQ(s.plus, P({0, 0, 1, 0, 1, 0, 2, 0, 1, 0, 1}));
  EXPECT_EQ(s.plus, exact_div(Polynomial::t_pow(2) * one_minus_t_pow(6) * one_minus_t_pow(8),
                              one_minus_t_pow(2) * one_minus_t_pow(4)));
  EXPECT_EQ(s.minus, P({0, 0, 0, 0, 1, 0, 1, 0, 1}));
}

TEST(Blowup, ShiftedFiberSeriesLiteralRule) {
  // F = 1 + 2t + 3t^2 + 4t^3 + 5t^4, D = 3: q=2 -> F0, q=3 -> F1, q=4 -> F4.
  const SplitSeries s = blowup::shifted_fiber_series({P({1, 2, 3, 4, 5}), Polynomial()}, 3);
  EXPECT_EQ(s.plus, P({0, 0, 1, 2, 5}));
}

TEST(Blowup, ShiftCutoffParity) {
  // The incidence fibers are even and pair up coefficients, so moving the cutoff
  // by one is invisible while lowering it by two is not.
  for (long n = 3; n <= 10; ++n) {
    const Genus g(n);
    const SplitSeries fiber = spaces::incidence_split(g);
    const SplitSeries base = spaces::tjtilde_split(g);
    const long d = g.incidence_dim();
    for (long k : {-1L, 1L})
      EXPECT_EQ(blowup::kunneth_z2(base, blowup::shifted_fiber_series(fiber, d + k)),
                blowup::correction_theorem2(g))
          << n << ' ' << k;
    EXPECT_NE(blowup::kunneth_z2(base, blowup::shifted_fiber_series(fiber, d - 2)),
              blowup::correction_theorem2(g))
        << n;
  }
}

TEST(Blowup, KunnethZ2) {
  const SplitSeries fiber{P({1, 2, 3}), P({0, 5})};
  EXPECT_EQ(blowup::kunneth_z2({Polynomial::one(), Polynomial()}, fiber), fiber.plus);
  EXPECT_EQ(blowup::kunneth_z2(spaces::tjtilde_split(Genus(2)), {Polynomial(), P({0, 1})}),
            P({0, 0, 4, 0, 4}));
}

TEST(Blowup, KunnethZ2AgainstBruteForce) {
  const SplitSeries s = spaces::incidence_split(Genus(3));
  const Polynomial k = blowup::kunneth_z2(s, s);
  EXPECT_EQ(k, testing::brute_force_mul(s.plus, s.plus) + testing::brute_force_mul(s.minus, s.minus));
  mpz_class plus_sum = 0, minus_sum = 0;
  for (const auto& c : s.plus.coeffs()) plus_sum += c;
  for (const auto& c : s.minus.coeffs()) minus_sum += c;
  EXPECT_EQ(k.evaluate(1), plus_sum * plus_sum + minus_sum * minus_sum);
}

TEST(Blowup, CorrectionTheorem2) {
  EXPECT_EQ(blowup::correction_theorem2(Genus(2)), P({0, 0, 1, 0, 22, 0, 17, 0, 16}));
  for (long n = 2; n <= 4; ++n)
    EXPECT_EQ(blowup::correction_theorem2(Genus(n)), *testing::oracle("correction_theorem2", n)) << n;
}

TEST(Blowup, CorrectionTheorem3) {
  EXPECT_EQ(blowup::correction_theorem3(Genus(2)), P({1, 0, 1, 0, 1, 0, 1}).shifted(2));
}

TEST(Blowup, CorrectionsMatchClosedForms) {
  for (long n = 2; n <= 12; ++n) {
    const Genus g(n);
    EXPECT_EQ(blowup::correction_theorem2(g), blowup::correction_theorem2_closed_form(g)) << n;
    EXPECT_EQ(blowup::correction_theorem3(g), blowup::correction_theorem3_closed_form(g)) << n;
  }
}

TEST(Blowup, IpBlPUpsilon) {
  EXPECT_EQ(blowup::ip_bl_p_upsilon(Genus(2)), P({1, 0, 2, 0, 3, 0, 3, 0, 2, 0, 1}));
  EXPECT_EQ(blowup::ip_bl_p_upsilon(Genus(3)),
            spaces::d1_poly(Genus(3)) - spaces::p_s2a(Genus(3)) * Polynomial::t_pow(2));
}

TEST(Blowup, IpPUpsilon) {
  EXPECT_EQ(blowup::ip_p_upsilon(Genus(2)), P({1, 0, 1, 0, 2, 0, 2, 0, 1, 0, 1}));
  for (long n = 2; n <= 12; ++n) {
    const Genus g(n);
    EXPECT_EQ(blowup::ip_p_upsilon(g).degree(), static_cast<std::size_t>(12 * n - 14)) << n;
    EXPECT_EQ(blowup::ip_p_upsilon_pipeline(g), blowup::ip_p_upsilon(g)) << n;
  }
}

TEST(Blowup, IpUpsilon) {
  EXPECT_EQ(blowup::ip_upsilon(Genus(2)), P({1, 0, 0, 0, 1}));
  EXPECT_EQ(blowup::ip_upsilon(Genus(3)), P({1, 0, 0, 0, 1, 0, 0, 0, 1}));
  for (long n = 2; n <= 12; ++n)
    EXPECT_EQ(blowup::ip_upsilon_cone(Genus(n)), blowup::ip_upsilon(Genus(n))) << n;
}

}  // namespace
}  // namespace ihiggs
