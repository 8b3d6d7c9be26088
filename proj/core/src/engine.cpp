#include "ihiggs/engine.hpp"

#include <array>
#include <exception>
#include <functional>
#include <future>
#include <sstream>
#include <utility>

#include "ihiggs/blowup.hpp"
#include "ihiggs/equivariant.hpp"
#include "ihiggs/errors.hpp"
#include "ihiggs/rational_function.hpp"
#include "ihiggs/spaces.hpp"

namespace ihiggs::engine {

namespace {

using R = RationalFunction;

R ratio(Polynomial num, Polynomial den) { return {std::move(num), std::move(den)}; }
Polynomial t_pow(long k) { return Polynomial::t_pow(static_cast<std::size_t>(k)); }
Polynomial om(long e) { return one_minus_t_pow(e); }

std::size_t resolve_order(const Genus& g, const Options& opts) {
  return opts.truncation_order.value_or(equivariant::default_truncation_order(g));
}

// IP_t(M) has degree 6g-6, so its series must reach at least that far.
std::size_t resolve_ip_m_order(const Genus& g, const Options& opts) {
  const std::size_t order = resolve_order(g, opts);
  if (order < static_cast<std::size_t>(g.moduli_dim()))
    throw PreconditionError("truncation order " + std::to_string(order) + " is below 6g-6 = " +
                            std::to_string(g.moduli_dim()));
  return order;
}

// Degree law for IP_t(M): nonnegative, constant term 1, top degree 6g-6.
void enforce_degree_law(const char* context, const Genus& g, const Polynomial& p) {
  const auto top = static_cast<std::size_t>(g.moduli_dim());
  for (std::size_t i = top + 1; i < p.size(); ++i)
    if (p.coeffs()[i] != 0) throw DegreeMismatch(context, i, p.coeffs()[i]);
  if (p.coeff(top) == 0) throw DegreeMismatch(context, top, p.coeff(top));
  if (auto i = p.first_negative()) throw NegativeCoefficient(context, *i, p.coeffs()[*i]);
}

Polynomial pipeline_correction_theorem2(const Genus& g, const Options& opts) {
  if (opts.fault != Fault::kShiftCutoffLowered) return blowup::correction_theorem2(g);
  const SplitSeries fiber =
      blowup::shifted_fiber_series(spaces::incidence_split(g), g.incidence_dim() - 2);
  return blowup::kunneth_z2(spaces::tjtilde_split(g), fiber);
}

}  // namespace

std::string_view to_string(Route r) {
  return r == Route::kPipeline ? "pipeline" : "closed_form";
}

std::optional<Fault> parse_fault(std::string_view name) {
  if (name == "none") return Fault::kNone;
  if (name == "closed_form_drop_term") return Fault::kClosedFormDropTerm;
  if (name == "shift_cutoff_lowered") return Fault::kShiftCutoffLowered;
  return std::nullopt;
}

CheckResult compare_polynomials(std::string name, const Genus& g, const Polynomial& got,
                                const Polynomial& want) {
  CheckResult r{std::move(name), g.value(), true, {}, std::nullopt};
  const std::size_t n = std::max(got.size(), want.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (got.coeff(i) != want.coeff(i)) {
      std::ostringstream os;
      os << "first divergence at t^" << i << ": got " << got.coeff(i) << ", expected "
         << want.coeff(i);
      r.passed = false;
      r.detail = os.str();
      r.index = i;
      break;
    }
  }
  return r;
}

Polynomial ip_r1_pipeline(const Genus& g, const Options& opts) {
  const std::size_t order = resolve_ip_m_order(g, opts);
  Polynomial r1 = equivariant::p_sl2_r2s(g, order).value;
  r1 -= truncate_to_order(pipeline_correction_theorem2(g, opts), order);
  if (auto i = r1.first_negative())
    throw NegativeCoefficient("IP_t(R_1^ss//SL(2))", *i, r1.coeffs()[*i]);
  return r1;
}

QuantityReport ip_m_pipeline(const Genus& g, const Options& opts) {
  const std::size_t order = resolve_ip_m_order(g, opts);
  const mpz_class weight = spaces::two_pow(static_cast<unsigned long>(g.two_g()));
  Polynomial series = ip_r1_pipeline(g, opts);
  series -= weight * truncate_to_order(
                         blowup::ip_p_upsilon_pipeline(g) - blowup::ip_upsilon_cone(g), order);
  enforce_degree_law("ip_m_pipeline", g, series);
  return {"ip_m", g, Route::kPipeline, std::move(series), std::nullopt, std::nullopt, {}};
}

QuantityReport ip_m_closed(const Genus& g, const Options& opts) {
  const long n = g.value();
  const auto two_g = static_cast<unsigned>(2 * n);
  const Polynomial up = binomial_power(+1, two_g);
  const Polynomial down = binomial_power(-1, two_g);
  const Polynomial den24 = om(2) * om(4);
  const Polynomial t4g4 = t_pow(4 * n - 4);
  const R weight = R(Polynomial::constant(spaces::two_pow(two_g)));
  const R half = ratio(Polynomial::one(), Polynomial::constant(2));

  // P^+(T*J~) and P^-(T*J~) as they appear inline in the formula.
  const R tj_plus = half * R(up + down) + weight * (ratio(om(4 * n), om(2)) - R::integer(1));
  const R tj_minus = half * R(up - down);

  R sum = ratio(pow(Polynomial{1, 0, 0, 1}, two_g) - up * t_pow(2 * n + 2), den24);
  if (opts.fault != Fault::kClosedFormDropTerm) sum -= R(t4g4);
  sum += ratio(t_pow(2 * n + 2) * up, den24);
  sum += ratio(down * t4g4, Polynomial{4, 0, 4});
  sum += ratio(up * t4g4, Polynomial{2} * om(2)) *
         (ratio(Polynomial::constant(2 * n), Polynomial{1, 1}) +
          ratio(Polynomial::one(), Polynomial{-1, 0, 1}) - half +
          R(Polynomial::constant(3 - 2 * n)));
  sum += half * R((spaces::two_pow(two_g) - 1) * t4g4 *
                  (binomial_power(+1, two_g - 2) + binomial_power(-1, two_g - 2) - Polynomial{2}));

  const R p2_hat_fiber = ratio(om(12), om(2)) - ratio(om(6), om(2)) + ratio(om(6), om(2)) * ratio(om(6), om(2));
  R bracket = p2_hat_fiber * ratio(om(4 * n - 8) * om(4 * n - 4) * om(4 * n), om(2) * om(4) * om(6));
  bracket -= ratio(om(6), om(2)) * ratio(om(4 * n - 4) * om(4 * n), den24) *
             ratio(t_pow_one_minus(2, 2 * (2 * n - 5)), om(2));
  bracket -= ratio(om(4 * n - 4) * om(4 * n - 4), den24) * ratio(om(4 * n), om(2));
  bracket += ratio(Polynomial::one(), om(4)) * ratio(om(4 * n), om(2));
  sum += weight * bracket;
  sum -= weight * ratio(Polynomial::one(), om(4));

  sum += tj_plus * ratio(om(4 * n - 4) * om(4 * n - 4), den24);
  sum += tj_minus * ratio(t_pow(2) * om(4 * n - 4) * om(4 * n - 8), den24);
  sum -= ratio(Polynomial::one(), om(4)) * tj_plus;
  sum -= ratio(t_pow(2), om(4)) * tj_minus;
  sum -= tj_plus * ratio(t_pow(2) * om(4 * n - 4) * om(4 * n - 6), den24);
  sum -= tj_minus * (ratio(om(4 * n - 4) * t_pow_one_minus(4, 4 * n - 10), den24) + R(t_pow(4 * n - 6)));
  sum -= weight * (ratio(om(8 * n - 8) * om(4 * n), den24) - ratio(om(4 * n), om(4)));

  Polynomial value = sum.to_polynomial();
  enforce_degree_law("ip_m_closed", g, value);
  return {"ip_m_closed", g, Route::kClosedForm, std::move(value), std::nullopt, std::nullopt, {}};
}

const std::map<long, Polynomial>& published_ip_m() {
  static const std::map<long, Polynomial> table = {
      {2, Polynomial{1, 0, 1, 0, 17, 0, 17}},
      {3, Polynomial{1, 0, 1, 6, 2, 6, 17, 6, 81, 12, 396, 6, 66}},
      {4, Polynomial{1, 0, 1, 8, 2, 8, 30, 16, 31, 72, 59, 72, 385, 80, 3955, 80, 3885, 16, 259}},
      {5, Polynomial{1, 0, 1, 10, 2, 10, 47, 20, 48, 140, 93, 150, 304, 270, 349, 522, 1583, 532,
                     29414, 532, 72170, 280, 28784, 30, 1028}},
  };
  return table;
}

namespace {

using CheckFn = std::function<CheckResult(const Genus&, const Options&)>;

struct NamedCheck {
  std::string_view name;
  CheckFn fn;
};

CheckResult passed(std::string_view name, const Genus& g) {
  return {std::string(name), g.value(), true, {}, std::nullopt};
}

CheckResult failed(std::string_view name, const Genus& g, std::string detail,
                   std::optional<std::size_t> index = std::nullopt) {
  return {std::string(name), g.value(), false, std::move(detail), index};
}

CheckResult check_nonnegative(std::string_view name, const Genus& g,
                              std::initializer_list<std::pair<const char*, Polynomial>> items) {
  for (const auto& [label, p] : items) {
    if (auto i = p.first_negative()) {
      std::ostringstream os;
      os << label << " has a negative coefficient at t^" << *i << " (" << p.coeffs()[*i] << ")";
      return failed(name, g, os.str(), *i);
    }
  }
  return passed(name, g);
}

// Registry of every cross-check, in reporting order.
const std::vector<NamedCheck>& registry() {
  static const std::vector<NamedCheck> checks = {
      {"spaces.incidence_sum_identity",
       [](const Genus& g, const Options&) {
         const long n = g.value();
         return compare_polynomials("spaces.incidence_sum_identity", g,
                                    spaces::incidence_split(g).total(),
                                    exact_div(om(4 * n - 4) * om(4 * n - 6), om(2) * om(2)));
       }},
      {"spaces.tjtilde_total_identity",
       [](const Genus& g, const Options&) {
         const auto two_g = static_cast<unsigned>(g.two_g());
         const Polynomial want = binomial_power(+1, two_g) +
                                 spaces::two_pow(two_g) * (spaces::projective_space(2 * g.value() - 1) -
                                                           Polynomial::one());
         return compare_polynomials("spaces.tjtilde_total_identity", g,
                                    spaces::tjtilde_split(g).total(), want);
       }},
      {"spaces.nonnegative",
       [](const Genus& g, const Options&) {
         const SplitSeries inc = spaces::incidence_split(g);
         const SplitSeries tj = spaces::tjtilde_split(g);
         return check_nonnegative("spaces.nonnegative", g,
                                  {{"incidence plus", inc.plus},
                                   {"incidence minus", inc.minus},
                                   {"tjtilde plus", tj.plus},
                                   {"tjtilde minus", tj.minus},
                                   {"P(S^2 A)", spaces::p_s2a(g)},
                                   {"Gr^w(2,2g)", spaces::symplectic_grassmannian(2, g)}});
       }},
      {"blowup.correction_theorem2_closed_form",
       [](const Genus& g, const Options& o) {
         return compare_polynomials("blowup.correction_theorem2_closed_form", g,
                                    pipeline_correction_theorem2(g, o),
                                    blowup::correction_theorem2_closed_form(g));
       }},
      {"blowup.correction_theorem3_closed_form",
       [](const Genus& g, const Options&) {
         return compare_polynomials("blowup.correction_theorem3_closed_form", g,
                                    blowup::correction_theorem3(g),
                                    blowup::correction_theorem3_closed_form(g));
       }},
      {"blowup.ip_p_upsilon_two_path",
       [](const Genus& g, const Options&) {
         return compare_polynomials("blowup.ip_p_upsilon_two_path", g,
                                    blowup::ip_p_upsilon_pipeline(g), blowup::ip_p_upsilon(g));
       }},
      {"blowup.ip_upsilon_cone_two_path",
       [](const Genus& g, const Options&) {
         return compare_polynomials("blowup.ip_upsilon_cone_two_path", g,
                                    blowup::ip_upsilon_cone(g), blowup::ip_upsilon(g));
       }},
      {"equivariant.sigma_kunneth",
       [](const Genus& g, const Options& o) {
         const std::size_t order = resolve_order(g, o);
         const Polynomial kunneth =
             blowup::kunneth_z2(spaces::classifying_so2_split(order), spaces::tjtilde_split(g));
         return compare_polynomials("equivariant.sigma_kunneth", g,
                                    equivariant::p_sl2_sigma(g, order).value,
                                    truncate_to_order(kunneth, order));
       }},
      {"equivariant.e_ss_closed_form",
       [](const Genus& g, const Options&) {
         return compare_polynomials("equivariant.e_ss_closed_form", g, equivariant::p_sl2_e_ss(g),
                                    equivariant::p_sl2_e_ss_closed_form(g));
       }},
      {"equivariant.e2_ss_closed_form",
       [](const Genus& g, const Options&) {
         return compare_polynomials("equivariant.e2_ss_closed_form", g, equivariant::p_sl2_e2_ss(g),
                                    equivariant::p_sl2_e2_ss_closed_form(g));
       }},
      {"equivariant.local_blowup_consistency",
       [](const Genus& g, const Options& o) {
         constexpr std::string_view name = "equivariant.local_blowup_consistency";
         const Polynomial bl = blowup::ip_bl_p_upsilon(g);
         CheckResult r = compare_polynomials(std::string(name), g,
                                             equivariant::p_bl_p_upsilon_stable_quotient(g), bl);
         if (!r.passed) return r;
         const std::size_t order = resolve_order(g, o);
         const Polynomial recomposed = equivariant::p_sl2_p_upsilon_ss(g, order).value +
                                       truncate_to_order(equivariant::p_sl2_e_ss(g), order) -
                                       equivariant::p_sl2_p_hom1_ss(g, order).value;
         return compare_polynomials(std::string(name), g, recomposed, truncate_to_order(bl, order));
       }},
      {"equivariant.r2s_nonnegative",
       [](const Genus& g, const Options& o) {
         const Polynomial v = equivariant::p_sl2_r2s(g, resolve_order(g, o)).value;
         if (v.coeff(0) != 1)
           return failed("equivariant.r2s_nonnegative", g, "constant term is not 1", 0);
         return passed("equivariant.r2s_nonnegative", g);
       }},
      {"engine.r1_nonnegative",
       [](const Genus& g, const Options& o) {
         (void)ip_r1_pipeline(g, o);
         return passed("engine.r1_nonnegative", g);
       }},
      {"engine.ip_m_degree_law",
       [](const Genus& g, const Options& o) {
         const Polynomial p = ip_m_pipeline(g, o).coefficients;
         if (p.coeff(0) != 1) return failed("engine.ip_m_degree_law", g, "constant term is not 1", 0);
         if (p.degree() != static_cast<std::size_t>(g.moduli_dim()))
           return failed("engine.ip_m_degree_law", g, "degree differs from 6g-6");
         return passed("engine.ip_m_degree_law", g);
       }},
      {"engine.route_equality",
       [](const Genus& g, const Options& o) {
         return compare_polynomials("engine.route_equality", g, ip_m_closed(g, o).coefficients,
                                    ip_m_pipeline(g, o).coefficients);
       }},
      {"engine.published_table",
       [](const Genus& g, const Options& o) {
         const auto& table = published_ip_m();
         auto it = table.find(g.value());
         if (it == table.end()) return passed("engine.published_table", g);
         return compare_polynomials("engine.published_table", g, ip_m_pipeline(g, o).coefficients,
                                    it->second);
       }},
  };
  return checks;
}

CheckResult run_check(const NamedCheck& c, const Genus& g, const Options& opts) {
  try {
    return c.fn(g, opts);
  } catch (const std::exception& e) {
    return failed(c.name, g, e.what());
  }
}

std::vector<CheckResult> run_named(std::initializer_list<std::string_view> names, const Genus& g,
                                   const Options& opts) {
  std::vector<CheckResult> out;
  for (const auto& c : registry())
    for (auto n : names)
      if (c.name == n) out.push_back(run_check(c, g, opts));
  return out;
}

}  // namespace

std::vector<CheckResult> verify_genus(const Genus& g, const Options& opts) {
  std::vector<CheckResult> out;
  out.reserve(registry().size());
  for (const auto& c : registry()) out.push_back(run_check(c, g, opts));
  return out;
}

std::vector<std::vector<CheckResult>> verify_range(long lo, long hi, const Options& opts) {
  if (lo > hi) throw PreconditionError("empty genus range");
  std::vector<std::future<std::vector<CheckResult>>> jobs;
  for (long g = lo; g <= hi; ++g) {
    Genus genus(g);
    jobs.push_back(std::async(std::launch::async, [genus, opts] { return verify_genus(genus, opts); }));
  }
  std::vector<std::vector<CheckResult>> out;
  out.reserve(jobs.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

namespace {

struct QuantityInfo {
  Quantity id;
  std::string_view name;
};

constexpr std::array<QuantityInfo, 16> kQuantities = {{
    {Quantity::kIpM, "ip_m"},
    {Quantity::kIpMClosed, "ip_m_closed"},
    {Quantity::kIpPUpsilon, "ip_p_upsilon"},
    {Quantity::kIpUpsilon, "ip_upsilon"},
    {Quantity::kPSl2R, "p_sl2_r"},
    {Quantity::kPSl2Sigma, "p_sl2_sigma"},
    {Quantity::kPSl2ESs, "p_sl2_e_ss"},
    {Quantity::kPSl2E2Ss, "p_sl2_e2_ss"},
    {Quantity::kPSl2PUpsilonSs, "p_sl2_p_upsilon_ss"},
    {Quantity::kPSl2R2s, "p_sl2_r2s"},
    {Quantity::kCorrectionTheorem2, "correction_theorem2"},
    {Quantity::kCorrectionTheorem3, "correction_theorem3"},
    {Quantity::kD1, "d1"},
    {Quantity::kPS2A, "p_s2a"},
    {Quantity::kIncidenceSplit, "incidence_split"},
    {Quantity::kTjtildeSplit, "tjtilde_split"},
}};

constexpr std::array<Quantity, 16> kQuantityIds = [] {
  std::array<Quantity, 16> ids{};
  for (std::size_t i = 0; i < kQuantities.size(); ++i) ids[i] = kQuantities[i].id;
  return ids;
}();

QuantityReport plain(Quantity q, const Genus& g, Route route, Polynomial p,
                     std::optional<std::size_t> order = std::nullopt) {
  return {std::string(quantity_name(q)), g, route, std::move(p), order, std::nullopt, {}};
}

}  // namespace

std::span<const Quantity> all_quantities() { return kQuantityIds; }

std::string_view quantity_name(Quantity q) {
  for (const auto& info : kQuantities)
    if (info.id == q) return info.name;
  return "unknown";
}

std::optional<Quantity> parse_quantity(std::string_view name) {
  for (const auto& info : kQuantities)
    if (info.name == name) return info.id;
  return std::nullopt;
}

ComputeResult compute(Quantity q, const Genus& g, const Options& opts) {
  QuantityReport report = plain(q, g, Route::kPipeline, {});
  std::vector<CheckResult> checks;
  switch (q) {
    case Quantity::kIpM:
      report = ip_m_pipeline(g, opts);
      checks = run_named({"engine.ip_m_degree_law", "engine.r1_nonnegative", "engine.route_equality",
                          "engine.published_table"},
                         g, opts);
      break;
    case Quantity::kIpMClosed:
      report = ip_m_closed(g, opts);
      checks = run_named({"engine.route_equality", "engine.published_table"}, g, opts);
      break;
    case Quantity::kIpPUpsilon:
      report = plain(q, g, Route::kPipeline, blowup::ip_p_upsilon_pipeline(g));
      checks = run_named({"blowup.ip_p_upsilon_two_path"}, g, opts);
      break;
    case Quantity::kIpUpsilon:
      report = plain(q, g, Route::kPipeline, blowup::ip_upsilon_cone(g));
      checks = run_named({"blowup.ip_upsilon_cone_two_path"}, g, opts);
      break;
    case Quantity::kPSl2R: {
      const std::size_t order = resolve_order(g, opts);
      report = plain(q, g, Route::kClosedForm, equivariant::p_sl2_r(g, order).value, order);
      break;
    }
    case Quantity::kPSl2Sigma: {
      const std::size_t order = resolve_order(g, opts);
      report = plain(q, g, Route::kClosedForm, equivariant::p_sl2_sigma(g, order).value, order);
      checks = run_named({"equivariant.sigma_kunneth"}, g, opts);
      break;
    }
    case Quantity::kPSl2ESs:
      report = plain(q, g, Route::kPipeline, equivariant::p_sl2_e_ss(g));
      checks = run_named({"equivariant.e_ss_closed_form"}, g, opts);
      break;
    case Quantity::kPSl2E2Ss:
      report = plain(q, g, Route::kPipeline, equivariant::p_sl2_e2_ss(g));
      checks = run_named({"equivariant.e2_ss_closed_form"}, g, opts);
      break;
    case Quantity::kPSl2PUpsilonSs: {
      const std::size_t order = resolve_order(g, opts);
      report = plain(q, g, Route::kClosedForm, equivariant::p_sl2_p_upsilon_ss(g, order).value, order);
      checks = run_named({"equivariant.local_blowup_consistency"}, g, opts);
      break;
    }
    case Quantity::kPSl2R2s: {
      const std::size_t order = resolve_order(g, opts);
      report = plain(q, g, Route::kPipeline, equivariant::p_sl2_r2s(g, order).value, order);
      checks = run_named({"equivariant.r2s_nonnegative"}, g, opts);
      break;
    }
    case Quantity::kCorrectionTheorem2:
      report = plain(q, g, Route::kPipeline, pipeline_correction_theorem2(g, opts));
      checks = run_named({"blowup.correction_theorem2_closed_form"}, g, opts);
      break;
    case Quantity::kCorrectionTheorem3:
      report = plain(q, g, Route::kPipeline, blowup::correction_theorem3(g));
      checks = run_named({"blowup.correction_theorem3_closed_form"}, g, opts);
      break;
    case Quantity::kD1:
      report = plain(q, g, Route::kClosedForm, spaces::d1_poly(g));
      break;
    case Quantity::kPS2A:
      report = plain(q, g, Route::kClosedForm, spaces::p_s2a(g));
      checks = run_named({"spaces.nonnegative"}, g, opts);
      break;
    case Quantity::kIncidenceSplit: {
      SplitSeries s = spaces::incidence_split(g);
      report = plain(q, g, Route::kClosedForm, s.total());
      report.split = std::move(s);
      checks = run_named({"spaces.incidence_sum_identity"}, g, opts);
      break;
    }
    case Quantity::kTjtildeSplit: {
      SplitSeries s = spaces::tjtilde_split(g);
      report = plain(q, g, Route::kClosedForm, s.total());
      report.split = std::move(s);
      checks = run_named({"spaces.tjtilde_total_identity"}, g, opts);
      break;
    }
  }

  ComputeResult result{std::move(report), {}};
  for (auto& c : checks) {
    if (c.passed)
      result.report.checks_passed.push_back(c.name);
    else
      result.failed_checks.push_back(std::move(c));
  }
  return result;
}

}  // namespace ihiggs::engine
