#include "dehnfill/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "dehnfill/certificates.hpp"
#include "dehnfill/constants.hpp"
#include "dehnfill/errors.hpp"
#include "dehnfill/kernels/kernels.hpp"
#include "dehnfill/packing.hpp"
#include "dehnfill/report.hpp"
#include "dehnfill/slope_lattice.hpp"
#include "dehnfill/weitzenboeck.hpp"

namespace dehn::cli {

namespace {

using nlohmann::json;

/// Bad command-line input; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double parse_number(const std::string& text, const std::string& what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || !std::isfinite(v)) {
    throw UsageError("malformed number '" + text + "' for " + what);
  }
  return v;
}

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(parse_number(item, what));
  if (values.empty() || (!text.empty() && text.back() == ',')) {
    throw UsageError("malformed list '" + text + "' for " + what);
  }
  return values;
}

std::pair<double, double> parse_pair(const std::string& text, const std::string& what) {
  const auto values = parse_list(text, what);
  if (values.size() != 2) throw UsageError(what + " expects two comma-separated numbers, got '" + text + "'");
  return {values[0], values[1]};
}

CuspShape parse_shape(const std::string& text) {
  const auto [re, im] = parse_pair(text, "--shape");
  if (!(im > 0.0)) throw UsageError("--shape needs Im(tau) > 0, got '" + text + "'");
  return CuspShape(re, im);
}

double positive(double v, const std::string& what) {
  if (!(v > 0.0)) throw UsageError(what + " must be positive");
  return v;
}

struct Options {
  std::vector<std::string> lhat;
  std::vector<std::string> shape;
  std::vector<std::string> slope;
  std::string bounds_lhat;
  std::string enum_shape;
  std::string cutoff;
  std::string k1;
  std::string eps;
  std::uint64_t seed = 1;
  int trials = 1000;
  int which = 0;
  int samples = 0;
  std::string out_path;
};

CommandReport finish(CommandReport report) {
  report.status = report.all_checks_pass() ? Status::ok : Status::error;
  return report;
}

CommandReport run_constants() {
  const Envelope& env = default_envelope();
  const PackingConstants& pc = packing_constants();
  const double c_squared = kTwoPi * kTwoPi / env.f(kTanhR0);
  const Interval dv = volume_drop_bounds(kCertificationThreshold, env);
  const Interval va = visual_area_bounds(kCertificationThreshold, env);
  const double h_r0 = visual_area_lower_bound(kR0);

  CommandReport r;
  r.command = "constants";
  r.checks = {
      Check::near("C_squared", c_squared, 57.5041, 5e-3),
      Check::near("C", std::sqrt(c_squared), 7.58315, 5e-4),
      Check::near("C_stated", std::sqrt(c_squared), kCertificationThreshold, 5e-4),
      Check::near("volume_drop_hi", dv.hi, 0.197816, 5e-5),
      Check::near("volume_drop_at_most_0.198", dv.hi, 0.198, 5e-4),
      Check::near("h_R0", h_r0, 0.980254, 1e-5),
      Check::near("visual_area_hi", va.hi, h_r0, 1e-4),
      Check::near("core_length_hi", core_length_bound(kCertificationThreshold, env), 0.156012, 1e-5),
      Check::near("inverse_S", 1.0 / pc.s_constant, 0.980257, 5e-6),
      Check::near("h_coefficient", 2.0 * std::numbers::sqrt3 * pc.axis_coefficient, pc.h_coefficient, 5e-4),
  };
  r.payload = json{{"threshold", kCertificationThreshold},
                   {"derived_threshold", std::sqrt(c_squared)},
                   {"threshold_squared", c_squared},
                   {"R0", kR0},
                   {"h_R0", h_r0},
                   {"volume_drop", json{{"lo", dv.lo}, {"hi", dv.hi}}},
                   {"visual_area", json{{"lo", va.lo}, {"hi", va.hi}}},
                   {"kernel_backend", std::string(kernels::backend_name(kernels::active_backend()))}};
  return finish(std::move(r));
}

CommandReport run_certify(const Options& o) {
  std::vector<double> lhats;
  for (const auto& item : o.lhat) {
    for (double v : parse_list(item, "--lhat")) lhats.push_back(positive(v, "--lhat"));
  }
  if (o.shape.size() != o.slope.size()) {
    throw UsageError("each --shape needs a matching --slope");
  }
  json cusps = json::array();
  for (std::size_t i = 0; i < o.shape.size(); ++i) {
    const CuspShape shape = parse_shape(o.shape[i]);
    const auto [p, q] = parse_pair(o.slope[i], "--slope");
    if (p == 0.0 && q == 0.0) throw UsageError("--slope must be nonzero");
    const double l = slope_normalized_length(shape, p, q);
    lhats.push_back(l);
    cusps.push_back(json{{"shape", {shape.re(), shape.im()}}, {"slope", {p, q}}, {"lhat", l}});
  }
  if (lhats.empty()) throw UsageError("certify needs --lhat or --shape/--slope");

  const FillingCertificate cert = certify_with_bounds(lhats);
  CommandReport r;
  r.command = "certify";
  r.payload = certificate_json(cert);
  if (!cusps.empty()) r.payload["cusps"] = cusps;
  r.checks.push_back({"certified", cert.margin, 0.0, 0.0, cert.certified});
  return finish(std::move(r));
}

CommandReport run_bounds(const Options& o) {
  const double lhat = positive(parse_number(o.bounds_lhat, "--lhat"), "--lhat");
  CommandReport r;
  r.command = "bounds";
  try {
    const EnvelopeRoots roots = envelope_roots(lhat);
    const Interval dv = volume_drop_bounds(lhat);
    const Interval va = visual_area_bounds(lhat);
    r.payload = json{{"lhat", lhat},
                     {"x_hat", roots.x_hat},
                     {"z_hat", roots.z_hat},
                     {"z_tilde", roots.z_tilde},
                     {"volume_drop", json{{"lo", dv.lo}, {"hi", dv.hi}}},
                     {"visual_area", json{{"lo", va.lo}, {"hi", va.hi}}},
                     {"core_length_hi", va.hi / kTwoPi}};
    r.checks.push_back(Check::at_least("certifiable", lhat, kCertificationThreshold, 0.0));
  } catch (const UncertifiableError& e) {
    r.payload = json{{"lhat", lhat}, {"error", e.what()}};
    r.checks.push_back(Check::at_least("certifiable", lhat, kCertificationThreshold, 0.0));
  }
  return finish(std::move(r));
}

CommandReport run_enumerate(const Options& o) {
  const CuspShape shape = parse_shape(o.enum_shape);
  const double cutoff = positive(parse_number(o.cutoff, "--cutoff"), "--cutoff");
  const ReducedShape reduced = lattice_reduce(shape);
  const auto slopes = enumerate_short_slopes(shape, cutoff);
  json list = json::array();
  for (const auto& s : slopes) list.push_back(json{{"p", s.slope.p}, {"q", s.slope.q}, {"lhat", s.lhat}});
  const SlopeMatrix& m = reduced.to_reduced;
  CommandReport r;
  r.command = "enumerate";
  r.payload = json{{"shape", {shape.re(), shape.im()}},
                   {"cutoff", cutoff},
                   {"reduced_shape", {reduced.shape.re(), reduced.shape.im()}},
                   {"to_reduced", {{m.m00, m.m01}, {m.m10, m.m11}}},
                   {"count", slopes.size()},
                   {"slopes", list}};
  return finish(std::move(r));
}

CommandReport run_weitz(const Options& o) {
  const double k1 = positive(parse_number(o.k1, "--k1"), "--k1");
  const double eps = parse_number(o.eps, "--eps");
  if (eps < 0.0) throw UsageError("--eps must be >= 0");
  if (o.trials < 1) throw UsageError("--trials must be at least 1");
  const BoundaryCurvature curv = BoundaryCurvature::from_k1(k1, eps);

  std::mt19937_64 rng(o.seed);
  double min_b = std::numeric_limits<double>::infinity();
  double max_b = -std::numeric_limits<double>::infinity();
  int negative = 0;
  for (int t = 0; t < o.trials; ++t) {
    const double b = boundary_form_b(curv, random_mode1_form(rng, 8, 4));
    min_b = std::min(min_b, b);
    max_b = std::max(max_b, b);
    if (b < -1e-9) ++negative;
  }
  CommandReport r;
  r.command = "weitz";
  const bool in_range = curv.in_positivity_range();
  r.payload = json{{"k1", curv.k1},     {"k2", curv.k2},     {"epsilon", eps},
                   {"seed", o.seed},    {"trials", o.trials}, {"in_positivity_range", in_range},
                   {"min_b", min_b},    {"max_b", max_b},     {"negative_trials", negative}};
  if (in_range) r.checks.push_back(Check::at_least("boundary_term_nonnegative", min_b, 0.0, 1e-9));
  return finish(std::move(r));
}

CommandReport run_figure(const Options& o) {
  if (o.which < 1 || o.which > 3) throw UsageError("--which must be 1, 2 or 3");
  if (o.samples < 2) throw UsageError("--samples must be at least 2");
  const FigureTable table = figure_data(o.which, static_cast<std::size_t>(o.samples));
  CommandReport r;
  r.command = "figure";
  r.payload = json{{"which", o.which}, {"samples", o.samples}, {"out", o.out_path}, {"columns", table.columns}};
  try {
    render_figure_csv(table, o.out_path);
    r.checks.push_back({"written", 1.0, 1.0, 0.0, true});
  } catch (const Error& e) {
    r.payload["error"] = e.what();
    r.checks.push_back({"written", 0.0, 1.0, 0.0, false});
  }
  return finish(std::move(r));
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified bounds for hyperbolic Dehn filling", "dehnfill"};
  app.require_subcommand(1, 1);
  Options o;

  auto* constants = app.add_subcommand("constants", "Recompute and check the published constants");
  auto* certify_cmd = app.add_subcommand("certify", "Decide whether surgery coefficients are certified");
  certify_cmd->add_option("--lhat", o.lhat, "Normalized lengths, comma separated");
  certify_cmd->add_option("--shape", o.shape, "Cusp shape re,im (repeatable)");
  certify_cmd->add_option("--slope", o.slope, "Slope p,q for the matching --shape (repeatable)");
  auto* bounds = app.add_subcommand("bounds", "Volume, visual area and core length bounds");
  bounds->add_option("--lhat", o.bounds_lhat, "Combined normalized length")->required();
  auto* enumerate = app.add_subcommand("enumerate", "List primitive slopes below a normalized length");
  enumerate->add_option("--shape", o.enum_shape, "Cusp shape re,im")->required();
  enumerate->add_option("--cutoff", o.cutoff, "Normalized length cutoff")->required();
  auto* weitz = app.add_subcommand("weitz", "Randomized check of the boundary term sign");
  weitz->add_option("--k1", o.k1, "Principal curvature k1 (k2 = 1/k1)")->required();
  weitz->add_option("--eps", o.eps, "Boundary condition parameter epsilon")->required();
  weitz->add_option("--seed", o.seed, "Random seed");
  weitz->add_option("--trials", o.trials, "Number of random forms");
  auto* figure = app.add_subcommand("figure", "Export figure data as CSV");
  figure->add_option("--which", o.which, "Figure 1, 2 or 3")->required();
  figure->add_option("--samples", o.samples, "Number of rows")->required();
  figure->add_option("--out", o.out_path, "CSV output path")->required();

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("dehnfill");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "dehnfill: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    CommandReport report;
    if (*constants) report = run_constants();
    else if (*certify_cmd) report = run_certify(o);
    else if (*bounds) report = run_bounds(o);
    else if (*enumerate) report = run_enumerate(o);
    else if (*weitz) report = run_weitz(o);
    else report = run_figure(o);
    out << json(report).dump(2) << '\n';
    return report.status == Status::ok ? kExitOk : kExitCheckFailed;
  } catch (const UsageError& e) {
    err << "dehnfill: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "dehnfill: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "dehnfill: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

}  // namespace dehn::cli
