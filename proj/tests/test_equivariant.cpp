#include <gtest/gtest.h>

#include "ihiggs/blowup.hpp"
#include "ihiggs/equivariant.hpp"
#include "ihiggs/errors.hpp"
#include "ihiggs/spaces.hpp"
#include "support.hpp"

namespace ihiggs {
namespace {

using testing::P;

std::size_t order_of(long n) { return static_cast<std::size_t>(6 * n - 2); }

TEST(Equivariant, DefaultTruncationOrder) {
  EXPECT_EQ(equivariant::default_truncation_order(Genus(2)), 10u);
  EXPECT_EQ(equivariant::default_truncation_order(Genus(5)), 28u);
}

TEST(Equivariant, PSl2R) {
  const auto s = equivariant::p_sl2_r(Genus(2), 10);
  EXPECT_EQ(s.value.coeff(0), 1);
  EXPECT_EQ(s.truncation_order, 10u);
  EXPECT_EQ(s.name, "p_sl2_r");
}

TEST(Equivariant, PSl2Sigma) {
  const Polynomial s = equivariant::p_sl2_sigma(Genus(2), 10).value;
  EXPECT_EQ(s.coeff(0), 1);
  EXPECT_EQ(s.coeff(1), 0);
  EXPECT_EQ(s.coeff(2), 22);
}

TEST(Equivariant, SigmaIsKunnethWithBSO2) {
  for (long n = 2; n <= 10; ++n) {
    const Genus g(n);
    const auto order = static_cast<std::size_t>(6 * n);
    const Polynomial k = blowup::kunneth_z2(spaces::classifying_so2_split(order), spaces::tjtilde_split(g));
    EXPECT_EQ(equivariant::p_sl2_sigma(g, order).value, truncate_to_order(k, order)) << n;
  }
}

TEST(Equivariant, ESs) {
  EXPECT_EQ(equivariant::p_sl2_e_ss(Genus(2)), P({1, 0, 1}) * P({1, 0, 1, 0, 1, 0, 1}));
  for (long n = 2; n <= 10; ++n)
    EXPECT_EQ(equivariant::p_sl2_e_ss(Genus(n)), equivariant::p_sl2_e_ss_closed_form(Genus(n))) << n;
}

TEST(Equivariant, PHom1Ss) {
  const Polynomial s = equivariant::p_sl2_p_hom1_ss(Genus(2), 8).value;
  EXPECT_EQ(s, truncate_to_order(P({1, 0, 0, 0, 1, 0, 0, 0, 1}) * P({1, 0, 1, 0, 1, 0, 1}), 8));
  EXPECT_EQ(s.coeff(0), 1);
  EXPECT_EQ(s.coeff(2), 1);
}

TEST(Equivariant, PUpsilonSs) {
  EXPECT_EQ(equivariant::p_sl2_p_upsilon_ss(Genus(3), 16).value.coeff(0), 1);
}

TEST(Equivariant, E2Ss) {
  EXPECT_EQ(equivariant::p_sl2_e2_ss(Genus(2)), P({1, 0, 22, 0, 17, 0, 16}) * P({1, 0, 1}));
  for (long n = 2; n <= 10; ++n)
    EXPECT_EQ(equivariant::p_sl2_e2_ss(Genus(n)), equivariant::p_sl2_e2_ss_closed_form(Genus(n))) << n;
}

TEST(Equivariant, R2s) {
  for (long n = 2; n <= 8; ++n) {
    const auto s = equivariant::p_sl2_r2s(Genus(n), order_of(n));
    EXPECT_EQ(s.value.coeff(0), 1) << n;
    EXPECT_TRUE(s.value.has_nonnegative_coeffs()) << n;
  }
}

// Values from the independent sympy oracle (tests/oracle/generate.py).
class EquivariantOracle : public ::testing::TestWithParam<long> {};

TEST_P(EquivariantOracle, SeriesMatch) {
  const long n = GetParam();
  const Genus g(n);
  const std::size_t order = order_of(n);
  EXPECT_EQ(equivariant::p_sl2_r(g, order).value, *testing::oracle("p_sl2_r", n));
  EXPECT_EQ(equivariant::p_sl2_sigma(g, order).value, *testing::oracle("p_sl2_sigma", n));
  EXPECT_EQ(equivariant::p_sl2_p_upsilon_ss(g, order).value, *testing::oracle("p_sl2_p_upsilon_ss", n));
  EXPECT_EQ(equivariant::p_sl2_e2_ss(g), *testing::oracle("p_sl2_e2_ss", n));
  EXPECT_EQ(equivariant::p_sl2_r2s(g, order).value, *testing::oracle("p_sl2_r2s", n));
}

INSTANTIATE_TEST_SUITE_P(LowGenus, EquivariantOracle, ::testing::Values(2L, 3L, 4L));

}  // namespace
}  // namespace ihiggs
