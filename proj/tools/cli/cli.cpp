#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <future>
#include <sstream>

#include <CLI11.hpp>

#include "ihiggs/errors.hpp"

namespace ihiggs::cli {

namespace {

long parse_long(std::string_view s) {
  long v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty())
    throw UsageError("not an integer: '" + std::string(s) + "'");
  return v;
}

std::vector<std::string> coefficient_strings(const Polynomial& p) {
  std::vector<std::string> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

nlohmann::json degree_json(const Polynomial& p) {
  if (auto d = p.degree()) return *d;
  return nullptr;
}

std::string csv_rows(const std::vector<engine::QuantityReport>& rows) {
  std::size_t width = 1;
  for (const auto& r : rows) width = std::max(width, r.coefficients.size());
  std::ostringstream os;
  os << "genus,degree";
  for (std::size_t i = 0; i < width; ++i) os << ",c" << i;
  os << '\n';
  for (const auto& r : rows) {
    os << r.genus.value() << ',';
    if (auto d = r.degree()) os << *d;
    for (std::size_t i = 0; i < width; ++i) os << ',' << r.coefficients.coeff(i);
    os << '\n';
  }
  return os.str();
}

std::string text_report(const engine::QuantityReport& r) {
  std::string line = r.coefficients.to_string();
  if (r.truncation_order) line += " + O(t^" + std::to_string(*r.truncation_order + 1) + ")";
  if (r.split) {
    line += "\nplus: " + r.split->plus.to_string();
    line += "\nminus: " + r.split->minus.to_string();
  }
  return line + "\n";
}

// Writes to the output file when one is requested, else to `out`.
void deliver(const CliRequest& req, const std::string& doc, std::ostream& out) {
  if (!req.output_path) {
    out << doc;
    return;
  }
  std::ofstream f(*req.output_path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file '" + *req.output_path + "'");
  f << doc;
  if (!f) throw UsageError("failed writing output file '" + *req.output_path + "'");
}

engine::Options options_of(const CliRequest& req) {
  return engine::Options{req.truncation_order, req.fault};
}

GenusRange range_of(const CliRequest& req) {
  if (req.genus_range) return *req.genus_range;
  if (req.genus) {
    if (*req.genus < 2) throw InvalidGenus(*req.genus);
    return {*req.genus, *req.genus};
  }
  throw UsageError("a genus range is required (--genus-range A..B)");
}

// Maps library errors onto exit codes.
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InvalidGenus& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const PreconditionError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ArithmeticError& e) {
    err << "internal arithmetic error: " << e.what() << '\n';
    return kArithmeticError;
  }
}

}  // namespace

GenusRange parse_genus_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) throw UsageError("genus range must look like A..B");
  GenusRange r{parse_long(text.substr(0, dots)), parse_long(text.substr(dots + 2))};
  if (r.lo > r.hi) throw UsageError("genus range is empty");
  if (r.lo < 2) throw UsageError("genus range must start at 2 or above");
  return r;
}

std::optional<Format> parse_format(std::string_view text) {
  if (text == "json") return Format::kJson;
  if (text == "csv") return Format::kCsv;
  if (text == "latex") return Format::kLatex;
  if (text == "text") return Format::kText;
  return std::nullopt;
}

Format effective_format(const CliRequest& req) {
  if (req.format) return *req.format;
  return req.output_path ? Format::kJson : Format::kText;
}

nlohmann::json report_to_json(const engine::QuantityReport& r) {
  nlohmann::json doc = {
      {"quantity", r.quantity},
      {"genus", r.genus.value()},
      {"route", std::string(engine::to_string(r.route))},
      {"degree", degree_json(r.coefficients)},
      {"coefficients", coefficient_strings(r.coefficients)},
      {"checks_passed", r.checks_passed},
  };
  if (r.truncation_order) doc["truncation_order"] = *r.truncation_order;
  if (r.split) {
    doc["plus"] = coefficient_strings(r.split->plus);
    doc["minus"] = coefficient_strings(r.split->minus);
  }
  return doc;
}

Polynomial coefficients_from_json(const nlohmann::json& doc) {
  std::vector<mpz_class> coeffs;
  for (const auto& c : doc.at("coefficients")) coeffs.emplace_back(c.get<std::string>());
  return Polynomial(std::move(coeffs));
}

std::string latex_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const mpz_class& c = p.coeffs()[i];
    if (c == 0) continue;
    if (sgn(c) < 0)
      os << '-';
    else if (!first)
      os << '+';
    first = false;
    const mpz_class mag = abs(c);
    if (i == 0 || mag != 1) os << mag;
    if (i == 1) os << 't';
    if (i > 1) os << "t^{" << i << '}';
  }
  return os.str();
}

std::string emit_report(const engine::QuantityReport& r, Format format) {
  switch (format) {
    case Format::kJson:
      return report_to_json(r).dump(2) + "\n";
    case Format::kCsv:
      return csv_rows({r});
    case Format::kLatex:
      return "$" + latex_polynomial(r.coefficients) + "$\n";
    case Format::kText:
      break;
  }
  return text_report(r);
}

std::string emit_table(const std::vector<engine::QuantityReport>& rows, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::kJson: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : rows) arr.push_back(report_to_json(r));
      return arr.dump(2) + "\n";
    }
    case Format::kCsv:
      return csv_rows(rows);
    case Format::kLatex:
      os << "\\begin{itemize}\n";
      for (const auto& r : rows)
        os << "\\item $g=" << r.genus.value() << "$ : $IP_{t}(\\mathbf{M})="
           << latex_polynomial(r.coefficients) << "$\n";
      os << "\\end{itemize}\n";
      return os.str();
    case Format::kText:
      break;
  }
  for (const auto& r : rows) os << "g=" << r.genus.value() << ": " << r.coefficients << '\n';
  return os.str();
}

std::string emit_checks(const std::vector<std::vector<engine::CheckResult>>& results, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::kJson: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& per_genus : results)
        for (const auto& c : per_genus) {
          nlohmann::json item = {{"genus", c.genus}, {"check", c.name}, {"passed", c.passed}};
          if (!c.passed) item["detail"] = c.detail;
          if (c.index) item["index"] = *c.index;
          arr.push_back(std::move(item));
        }
      return arr.dump(2) + "\n";
    }
    case Format::kCsv:
      os << "genus,check,passed,index,detail\n";
      for (const auto& per_genus : results)
        for (const auto& c : per_genus) {
          os << c.genus << ',' << c.name << ',' << (c.passed ? "true" : "false") << ',';
          if (c.index) os << *c.index;
          std::string detail = c.detail;
          std::replace(detail.begin(), detail.end(), '"', '\'');
          os << ",\"" << detail << "\"\n";
        }
      return os.str();
    case Format::kLatex:
      os << "\\begin{tabular}{rll}\n$g$ & check & result \\\\\n\\hline\n";
      for (const auto& per_genus : results)
        for (const auto& c : per_genus)
          os << c.genus << " & \\texttt{" << c.name << "} & " << (c.passed ? "pass" : "fail")
             << " \\\\\n";
      os << "\\end{tabular}\n";
      return os.str();
    case Format::kText:
      break;
  }
  for (const auto& per_genus : results)
    for (const auto& c : per_genus) {
      os << "g=" << c.genus << "  " << (c.passed ? "PASS" : "FAIL") << "  " << c.name;
      if (!c.passed) os << "  " << c.detail;
      os << '\n';
    }
  return os.str();
}

int run_compute(const CliRequest& req, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!req.genus) throw UsageError("compute needs --genus");
    const Genus g(*req.genus);
    engine::ComputeResult result = engine::compute(req.quantity, g, options_of(req));
    deliver(req, emit_report(result.report, effective_format(req)), out);
    for (const auto& c : result.failed_checks)
      err << "check failed: g=" << c.genus << ' ' << c.name << ": " << c.detail << '\n';
    return result.failed_checks.empty() ? kSuccess : kCheckFailure;
  });
}

int run_verify(const CliRequest& req, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const GenusRange range = range_of(req);
    const auto results = engine::verify_range(range.lo, range.hi, options_of(req));
    deliver(req, emit_checks(results, effective_format(req)), out);
    std::size_t failures = 0;
    for (const auto& per_genus : results)
      for (const auto& c : per_genus)
        if (!c.passed) {
          ++failures;
          err << "check failed: g=" << c.genus << ' ' << c.name << ": " << c.detail << '\n';
        }
    return failures == 0 ? kSuccess : kCheckFailure;
  });
}

int run_table(const CliRequest& req, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const GenusRange range = range_of(req);
    const engine::Options opts = options_of(req);
    std::vector<std::future<engine::QuantityReport>> jobs;
    for (long g = range.lo; g <= range.hi; ++g) {
      const Genus genus(g);
      jobs.push_back(std::async(std::launch::async, [genus, opts] { return engine::ip_m_pipeline(genus, opts); }));
    }
    std::vector<engine::QuantityReport> rows;
    for (auto& j : jobs) rows.push_back(j.get());
    deliver(req, emit_table(rows, effective_format(req)), out);
    return kSuccess;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Intersection Poincare polynomials of rank-2 Higgs moduli spaces"};
  app.require_subcommand(1);

  CliRequest req;
  std::optional<long> genus;
  std::string range_text, quantity_text = "ip_m", format_text, fault_text = "none";
  std::optional<std::string> output;
  std::optional<std::size_t> order;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "json | csv | latex | text");
    sub->add_option("-o,--output", output, "Write the document to a file (default format json)");
    sub->add_option("--truncation-order", order, "Series expansion order (default 6g-2)");
    sub->add_option("--inject-fault", fault_text)->group("");
  };

  CLI::App* compute = app.add_subcommand("compute", "Compute one quantity for one genus");
  compute->add_option("-g,--genus", genus, "Genus of the curve (>= 2)")->required();
  compute->add_option("-q,--quantity", quantity_text, "Quantity name (default ip_m)");
  add_common(compute);

  CLI::App* verify = app.add_subcommand("verify", "Run every cross-check over a genus range");
  verify->add_option("-r,--genus-range", range_text, "Inclusive range A..B");
  verify->add_option("-g,--genus", genus, "Single genus");
  add_common(verify);

  CLI::App* table = app.add_subcommand("table", "Tabulate IP_t(M) over a genus range");
  table->add_option("-r,--genus-range", range_text, "Inclusive range A..B")->required();
  add_common(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (!format_text.empty()) {
      req.format = parse_format(format_text);
      if (!req.format) throw UsageError("unknown format '" + format_text + "'");
    }
    auto fault = engine::parse_fault(fault_text);
    if (!fault) throw UsageError("unknown fault '" + fault_text + "'");
    req.fault = *fault;
    auto quantity = engine::parse_quantity(quantity_text);
    if (!quantity) throw UsageError("unknown quantity '" + quantity_text + "'");
    req.quantity = *quantity;
    req.genus = genus;
    req.output_path = output;
    req.truncation_order = order;
    if (!range_text.empty()) req.genus_range = parse_genus_range(range_text);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  req.command = compute->parsed() ? Command::kCompute : verify->parsed() ? Command::kVerify : Command::kTable;
  switch (req.command) {
    case Command::kCompute:
      return run_compute(req, out, err);
    case Command::kVerify:
      return run_verify(req, out, err);
    case Command::kTable:
      break;
  }
  return run_table(req, out, err);
}

}  // namespace ihiggs::cli
