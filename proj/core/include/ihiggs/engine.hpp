#ifndef IHIGGS_ENGINE_HPP
#define IHIGGS_ENGINE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ihiggs/genus.hpp"
#include "ihiggs/polynomial.hpp"
#include "ihiggs/split_series.hpp"

// Assembly of IP_t(M) along two independent routes, the quantity registry,
// and the per-genus verification suite.
namespace ihiggs::engine {

enum class Route { kPipeline, kClosedForm };

std::string_view to_string(Route r);

// Deliberate formula corruptions, used to check that verification catches
// transcription errors.  Never set outside of tests and fixtures.
enum class Fault {
  kNone,
  kClosedFormDropTerm,   // ip_m_closed omits its -t^{4g-4} term
  kShiftCutoffLowered,    // the pipeline's t(q) cutoff is 4g-9 instead of 4g-7
};

std::optional<Fault> parse_fault(std::string_view name);

struct Options {
  // Expansion order for truncated series; defaults to 6g - 2.
  std::optional<std::size_t> truncation_order;
  Fault fault = Fault::kNone;
};

struct QuantityReport {
  std::string quantity;
  Genus genus;
  Route route;
  Polynomial coefficients;
  std::optional<std::size_t> truncation_order;  // set for truncated series
  std::optional<SplitSeries> split;             // set for Z2-split quantities
  std::vector<std::string> checks_passed;

  std::optional<std::size_t> degree() const { return coefficients.degree(); }
};

struct CheckResult {
  std::string name;
  long genus = 0;
  bool passed = false;
  // Empty on success.  On failure: first divergent degree and both values, or
  // the error raised while computing.
  std::string detail;
  std::optional<std::size_t> index;
};

// Coefficientwise comparison; on mismatch reports the first divergent degree.
CheckResult compare_polynomials(std::string name, const Genus& g, const Polynomial& got,
                                const Polynomial& want);

// IP_t(R_1^ss // SL(2)) = P_t(R_2^s / SL(2)) - correction_theorem2, as a
// series truncated to the requested order.  Throws NegativeCoefficient.
Polynomial ip_r1_pipeline(const Genus& g, const Options& opts = {});

// IP_t(M) from the equivariant blow-up assembly and the intersection
// blow-up formula run in reverse:
//   IP(M) = IP(R_1^ss//SL(2)) - 2^{2g} (IP(PUpsilon^{-1}(0)//PGL(2)) - IP(Upsilon^{-1}(0)//PGL(2))).
// Throws DegreeMismatch, NegativeCoefficient or NonIntegerCoefficient.
QuantityReport ip_m_pipeline(const Genus& g, const Options& opts = {});

// IP_t(M) from the monolithic closed formula, summed in the rational
// function layer and collapsed by one exact division.
QuantityReport ip_m_closed(const Genus& g, const Options& opts = {});

// Published low-genus values of IP_t(M), g = 2..5.
const std::map<long, Polynomial>& published_ip_m();

// Every registered cross-check for one genus.  Failures are data.
std::vector<CheckResult> verify_genus(const Genus& g, const Options& opts = {});

// verify_genus over [lo, hi]; genera are evaluated concurrently, results are
// returned in ascending genus order.
std::vector<std::vector<CheckResult>> verify_range(long lo, long hi, const Options& opts = {});

// Closed registry of reportable quantities.
enum class Quantity {
  kIpM,
  kIpMClosed,
  kIpPUpsilon,
  kIpUpsilon,
  kPSl2R,
  kPSl2Sigma,
  kPSl2ESs,
  kPSl2E2Ss,
  kPSl2PUpsilonSs,
  kPSl2R2s,
  kCorrectionTheorem2,
  kCorrectionTheorem3,
  kD1,
  kPS2A,
  kIncidenceSplit,
  kTjtildeSplit,
};

std::span<const Quantity> all_quantities();
std::string_view quantity_name(Quantity q);
std::optional<Quantity> parse_quantity(std::string_view name);

struct ComputeResult {
  QuantityReport report;
  std::vector<CheckResult> failed_checks;
};

// Computes a registered quantity and runs the cross-checks attached to it.
// Passed check names land in report.checks_passed.
ComputeResult compute(Quantity q, const Genus& g, const Options& opts = {});

}  // namespace ihiggs::engine

#endif  // IHIGGS_ENGINE_HPP
