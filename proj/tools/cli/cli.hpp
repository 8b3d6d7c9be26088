#ifndef IHIGGS_TOOLS_CLI_HPP
#define IHIGGS_TOOLS_CLI_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ihiggs/engine.hpp"

namespace ihiggs::cli {

enum class Command { kCompute, kVerify, kTable };
enum class Format { kJson, kCsv, kLatex, kText };

// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kCheckFailure = 1,
  kUsageError = 2,
  kArithmeticError = 3,
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inclusive, ascending, every genus >= 2.
struct GenusRange {
  long lo = 2;
  long hi = 2;
};

struct CliRequest {
  Command command = Command::kCompute;
  std::optional<long> genus;
  std::optional<GenusRange> genus_range;
  engine::Quantity quantity = engine::Quantity::kIpM;
  std::optional<Format> format;
  std::optional<std::string> output_path;
  std::optional<std::size_t> truncation_order;
  engine::Fault fault = engine::Fault::kNone;
};

// "A..B" inclusive.  Throws UsageError on malformed, empty or descending
// ranges and on genera below 2.
GenusRange parse_genus_range(std::string_view text);
std::optional<Format> parse_format(std::string_view text);

// text when writing to the terminal, json when writing to a file.
Format effective_format(const CliRequest& req);

nlohmann::json report_to_json(const engine::QuantityReport& report);
// Inverse of the "coefficients" member of report_to_json.
Polynomial coefficients_from_json(const nlohmann::json& doc);

std::string emit_report(const engine::QuantityReport& report, Format format);
std::string emit_table(const std::vector<engine::QuantityReport>& rows, Format format);
std::string emit_checks(const std::vector<std::vector<engine::CheckResult>>& results, Format format);

// LaTeX body of a polynomial in the style 1+t^{2}+17t^{4}.
std::string latex_polynomial(const Polynomial& p);

int run_compute(const CliRequest& req, std::ostream& out, std::ostream& err);
int run_verify(const CliRequest& req, std::ostream& out, std::ostream& err);
int run_table(const CliRequest& req, std::ostream& out, std::ostream& err);

// Parses argv and dispatches.  Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ihiggs::cli

#endif  // IHIGGS_TOOLS_CLI_HPP
