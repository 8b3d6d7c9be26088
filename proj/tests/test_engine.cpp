#include <algorithm>

#include <gtest/gtest.h>

#include "ihiggs/engine.hpp"
#include "ihiggs/errors.hpp"
#include "support.hpp"

namespace ihiggs {
namespace {

using engine::Fault;
using engine::Options;
using testing::P;

TEST(Engine, PublishedLowGenus) {
  const auto& table = engine::published_ip_m();
  ASSERT_EQ(table.size(), 4u);
  EXPECT_EQ(table.at(2), P({1, 0, 1, 0, 17, 0, 17}));
  EXPECT_EQ(table.at(3), P({1, 0, 1, 6, 2, 6, 17, 6, 81, 12, 396, 6, 66}));
  EXPECT_EQ(table.at(5).size(), 25u);
}

TEST(Engine, PipelineReproducesTable) {
  for (const auto& [n, want] : engine::published_ip_m()) {
    const auto report = engine::ip_m_pipeline(Genus(n));
    EXPECT_EQ(report.coefficients, want) << n;
    EXPECT_EQ(report.route, engine::Route::kPipeline);
    EXPECT_EQ(report.quantity, "ip_m");
    EXPECT_EQ(report.degree(), static_cast<std::size_t>(6 * n - 6));
  }
}

TEST(Engine, ClosedRouteAgrees) {
  for (long n = 2; n <= 10; ++n) {
    const Genus g(n);
    EXPECT_EQ(engine::ip_m_closed(g).coefficients, engine::ip_m_pipeline(g).coefficients) << n;
    EXPECT_EQ(engine::ip_m_closed(g).coefficients.coeff(0), 1) << n;
  }
}

TEST(Engine, R1MatchesOracle) {
  for (long n = 2; n <= 4; ++n)
    EXPECT_EQ(engine::ip_r1_pipeline(Genus(n)), *testing::oracle("ip_r1", n)) << n;
}

TEST(Engine, TruncationOrderOverride) {
  const Genus g(3);
  EXPECT_EQ(engine::ip_m_pipeline(g, Options{40, Fault::kNone}).coefficients,
            engine::ip_m_pipeline(g).coefficients);
  EXPECT_EQ(engine::ip_m_pipeline(g, Options{12, Fault::kNone}).coefficients,
            engine::ip_m_pipeline(g).coefficients);
  EXPECT_THROW(engine::ip_m_pipeline(g, Options{11, Fault::kNone}), PreconditionError);
}

TEST(Engine, CompareReportsFirstDivergence) {
  const auto r = engine::compare_polynomials("x", Genus(2), P({1, 2, 3}), P({1, 5, 4}));
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.index, 1u);
  EXPECT_NE(r.detail.find("t^1"), std::string::npos);
  EXPECT_NE(r.detail.find('2'), std::string::npos);
  EXPECT_NE(r.detail.find('5'), std::string::npos);
  EXPECT_TRUE(engine::compare_polynomials("x", Genus(2), P({1}), P({1})).passed);
}

TEST(Engine, VerifyGenusAllPass) {
  for (long n : {2L, 3L, 5L}) {
    const auto checks = engine::verify_genus(Genus(n));
    EXPECT_EQ(checks.size(), 16u);
    for (const auto& c : checks) EXPECT_TRUE(c.passed) << n << ' ' << c.name << ": " << c.detail;
  }
}

TEST(Engine, VerifyRangeIsOrdered) {
  const auto results = engine::verify_range(2, 6);
  ASSERT_EQ(results.size(), 5u);
  for (std::size_t i = 0; i < results.size(); ++i)
    for (const auto& c : results[i]) EXPECT_EQ(c.genus, static_cast<long>(i) + 2);
  EXPECT_THROW(engine::verify_range(3, 2), PreconditionError);
  EXPECT_THROW(engine::verify_range(1, 2), InvalidGenus);
}

TEST(Engine, VerifyFullRange) {
  const auto results = engine::verify_range(2, 30);
  ASSERT_EQ(results.size(), 29u);
  for (const auto& per_genus : results)
    for (const auto& c : per_genus) EXPECT_TRUE(c.passed) << c.genus << ' ' << c.name << ": " << c.detail;
}

TEST(Engine, FaultsAreDetected) {
  for (Fault f : {Fault::kClosedFormDropTerm, Fault::kShiftCutoffLowered}) {
    const auto checks = engine::verify_genus(Genus(4), Options{std::nullopt, f});
    const auto failed = std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; });
    EXPECT_GT(failed, 0);
    for (const auto& c : checks)
      if (!c.passed) EXPECT_FALSE(c.detail.empty()) << c.name;
  }
  const auto checks = engine::verify_genus(Genus(4), Options{std::nullopt, Fault::kClosedFormDropTerm});
  const auto it = std::find_if(checks.begin(), checks.end(),
                               [](const auto& c) { return c.name == "engine.route_equality"; });
  ASSERT_NE(it, checks.end());
  EXPECT_FALSE(it->passed);
  EXPECT_EQ(it->index, 12u);
}

TEST(Engine, ParseFault) {
  EXPECT_EQ(engine::parse_fault("none"), Fault::kNone);
  EXPECT_EQ(engine::parse_fault("closed_form_drop_term"), Fault::kClosedFormDropTerm);
  EXPECT_EQ(engine::parse_fault("shift_cutoff_lowered"), Fault::kShiftCutoffLowered);
  EXPECT_FALSE(engine::parse_fault("bogus").has_value());
}

TEST(Engine, QuantityRegistry) {
  EXPECT_EQ(engine::all_quantities().size(), 16u);
  for (auto q : engine::all_quantities()) EXPECT_EQ(engine::parse_quantity(engine::quantity_name(q)), q);
  EXPECT_FALSE(engine::parse_quantity("ip_x").has_value());
}

TEST(Engine, EveryQuantityComputes) {
  for (long n : {3L, 4L}) {
    for (auto q : engine::all_quantities()) {
      const auto result = engine::compute(q, Genus(n));
      EXPECT_TRUE(result.failed_checks.empty()) << engine::quantity_name(q);
      EXPECT_EQ(result.report.quantity, engine::quantity_name(q));
      EXPECT_FALSE(result.report.coefficients.is_zero()) << engine::quantity_name(q);
    }
  }
}

TEST(Engine, GenusTwoRejectsQuantitiesNeedingGenusThree) {
  EXPECT_THROW(engine::compute(engine::Quantity::kD1, Genus(2)), PreconditionError);
}

TEST(Engine, SplitQuantitiesReportParts) {
  const auto r = engine::compute(engine::Quantity::kIncidenceSplit, Genus(3)).report;
  ASSERT_TRUE(r.split.has_value());
  EXPECT_EQ(r.coefficients, r.split->total());
}

TEST(Engine, SeriesQuantitiesReportOrder) {
  const auto r = engine::compute(engine::Quantity::kPSl2Sigma, Genus(3), Options{20, Fault::kNone}).report;
  EXPECT_EQ(r.truncation_order, 20u);
  EXPECT_LE(r.coefficients.size(), 21u);
}

}  // namespace
}  // namespace ihiggs
