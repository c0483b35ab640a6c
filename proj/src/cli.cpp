#include "persist/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <map>
#include <sstream>

#include "persist/combinatorics.hpp"
#include "persist/dualities.hpp"
#include "persist/errors.hpp"
#include "persist/exponents.hpp"
#include "persist/oracles.hpp"
#include "persist/phase_map.hpp"
#include "persist/region_formulas.hpp"

namespace persist::cli {

namespace {

using Json = nlohmann::ordered_json;

Json echo(const Params& p) { return Json{{"a", to_string(p.a)}, {"theta", to_string(p.theta)}}; }

Json enclosure_json(const std::optional<Enclosure>& e) {
  if (!e) return nullptr;
  return Json{{"mid", e->mid}, {"rad", e->rad}};
}

std::string csv_double(double x) {
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string json_line(const Json& j) { return j.dump() + "\n"; }

CommandResult error_result(int code, std::string_view kind, const std::string& message) {
  return {code, json_line(Json{{"error", kind}, {"message", message}})};
}

std::string pretty_table(const Json& payload, const char* exact_key, const char* float_key) {
  std::ostringstream os;
  os << "a = " << payload["a"].get<std::string>() << ", theta = " << payload["theta"].get<std::string>();
  if (payload.contains("method")) os << "  [" << payload["method"].get<std::string>() << "]";
  os << "\n";
  char line[160];
  for (const auto& e : payload["entries"]) {
    if (e.contains(exact_key)) {
      std::snprintf(line, sizeof line, "%4d  %-28s  %.17g\n", e["n"].get<int>(),
                    e[exact_key].get<std::string>().c_str(), e[float_key].get<double>());
    } else {
      std::snprintf(line, sizeof line, "%4d  %.17g +- %.3g\n", e["n"].get<int>(), e["mean"].get<double>(),
                    e["stderr"].get<double>());
    }
    os << line;
  }
  return os.str();
}

// Exact p_0..p_n along one named computation path.
std::vector<Rational> table_for_mode(const Params& params, std::size_t n, const std::string& mode,
                                     Method& method) {
  const RegionAssignment ra = classify(params);
  if (mode == "formula") {
    PersistenceTable t = persistence_series(params, n);
    method = t.method;
    return t.values();
  }
  if (mode == "recurrence") {
    method = Method::Recurrence;
    if (ra.has(Region::Blue)) return blue_recurrence_table(params, n);
    if (ra.dual_target && classify(*ra.dual_target).has(Region::Blue))
      return blue_recurrence_table(*ra.dual_target, n);
    throw Error(Errc::Domain, "the recurrence covers the blue region and its duals only");
  }
  if (mode == "combinatorial") {
    method = Method::Combinatorial;
    std::vector<Rational> v(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      if (ra.has(Region::Blue))
        v[k] = comb_pn_blue(params, k);
      else if (ra.has(Region::Green))
        v[k] = comb_pn_green(params, k);
      else
        v[k] = comb_pn_dual(params, k);
    }
    return v;
  }
  if (mode == "oracle") {
    method = Method::Oracle;
    return dp_exact_table(params, n);
  }
  throw Error(Errc::Domain, "unknown mode '" + mode + "'");
}

}  // namespace

std::vector<Path> computation_paths(const Params& params, std::size_t n) {
  const RegionAssignment ra = classify(params);
  std::vector<Path> paths;
  paths.push_back({"dispatcher", persistence_series(params, n).values()});
  for (Region r : ra.applicable) {
    if (is_duality(r)) continue;
    paths.push_back({"formula:" + std::string(region_name(r)), region_series(r, params, n).coeffs()});
  }
  if (ra.has(Region::Blue)) {
    paths.push_back({"recurrence", blue_recurrence_table(params, n)});
    std::vector<Rational> v(n + 1);
    for (std::size_t k = 0; k <= n; ++k) v[k] = comb_pn_blue(params, k);
    paths.push_back({"combinatorial:blue", std::move(v)});
  }
  if (ra.has(Region::Green)) {
    std::vector<Rational> v(n + 1);
    for (std::size_t k = 0; k <= n; ++k) v[k] = comb_pn_green(params, k);
    paths.push_back({"combinatorial:green", std::move(v)});
  }
  const Rational& t = params.theta;
  const Rational& a = params.a;
  if ((t >= 1 && a >= 0) || (t < -1 && a >= Rational(-1 / t) && a <= -t)) {
    std::vector<Rational> v(n + 1);
    for (std::size_t k = 0; k <= n; ++k) v[k] = comb_pn_dual(params, k);
    paths.push_back({"combinatorial:dual", std::move(v)});
  }
  if (ra.dual_target)
    paths.push_back({"duality:" + std::string(region_name(ra.canonical)),
                     persistence_series(*ra.dual_target, n).values()});
  if (ra.has(Region::DualFlip)) {
    const Params partner = *flip_partner(params);
    const auto q = Series<Rational>(persistence_series(partner, n).values());
    paths.push_back({"duality:DualFlip", moebius_flip(q).coeffs()});
  }
  if (n <= default_dp_cap()) paths.push_back({"oracle", dp_exact_table(params, n)});
  return paths;
}

namespace {

struct ScanRow {
  Rational a, theta;
  std::string region;
  std::vector<double> p;
  double lambda = std::nan("");
};

ScanRow scan_point(const Params& params, std::size_t n) {
  ScanRow row{params.a, params.theta, std::string(region_name(classify(params).canonical)), {}, std::nan("")};
  const PersistenceTable t = persistence_series(params, n);
  for (std::size_t k = 1; k <= n; ++k) row.p.push_back(t.entries[k].shadow);
  const ExponentResult ex = find_exponent(params);
  if (ex.lambda) row.lambda = ex.lambda->mid;
  return row;
}

}  // namespace

CommandResult run(const std::vector<std::string>& argv) {
  CLI::App app{"Exact persistence probabilities of MA(1) with uniform innovations", "persist_ma1"};
  app.require_subcommand(1);

  std::string a_text, theta_text, mode = "formula", out_path;
  std::string a_min, a_max, t_min, t_max;
  std::size_t n = 0, order = 0, ell = 0, steps = 0;
  std::uint64_t samples = 1000000, seed = 0;
  double tol = 1e-12;
  bool pretty = false;
  std::optional<std::string> phi_theta;

  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--a", a_text, "left end of the innovation interval [-a, 1] (p/q or decimal)")->required();
    sub->add_option("--theta", theta_text, "coupling parameter (p/q or decimal)")->required();
    sub->add_flag("--pretty", pretty, "human-readable output");
  };

  auto* classify_cmd = app.add_subcommand("classify", "phase-diagram regions of (a, theta)");
  add_params(classify_cmd);

  auto* pn_cmd = app.add_subcommand("pn", "table of p_0..p_N");
  add_params(pn_cmd);
  pn_cmd->add_option("--n", n, "largest n")->required();
  pn_cmd->add_option("--mode", mode, "formula|recurrence|combinatorial|oracle|mc")
      ->check(CLI::IsMember({"formula", "recurrence", "combinatorial", "oracle", "mc"}));
  pn_cmd->add_option("--samples", samples, "Monte Carlo samples");
  pn_cmd->add_option("--seed", seed, "Monte Carlo seed");

  auto* gf_cmd = app.add_subcommand("gf", "generating-function coefficients");
  add_params(gf_cmd);
  gf_cmd->add_option("--order", order, "truncation order")->required();

  auto* exp_cmd = app.add_subcommand("exponent", "persistence exponent");
  add_params(exp_cmd);
  exp_cmd->add_option("--tol", tol, "root tolerance");

  auto* phi_cmd = app.add_subcommand("phi", "coefficient polynomial of 1/E(theta, z)");
  phi_cmd->add_option("--ell", ell, "index")->required();
  phi_cmd->add_option("--theta", phi_theta, "evaluate at this theta");
  phi_cmd->add_flag("--pretty", pretty, "human-readable output");

  auto* mallows_cmd = app.add_subcommand("mallows", "Mallows-Riordan polynomial J_n");
  mallows_cmd->add_option("--n", n, "index (>= 1)")->required();
  mallows_cmd->add_flag("--pretty", pretty, "human-readable output");

  auto* verify_cmd = app.add_subcommand("verify", "cross-check every applicable path");
  add_params(verify_cmd);
  verify_cmd->add_option("--n", n, "largest n")->required();

  auto* scan_cmd = app.add_subcommand("scan", "CSV grid over (a, theta)");
  scan_cmd->add_option("--a-min", a_min)->required();
  scan_cmd->add_option("--a-max", a_max)->required();
  scan_cmd->add_option("--theta-min", t_min)->required();
  scan_cmd->add_option("--theta-max", t_max)->required();
  scan_cmd->add_option("--steps", steps, "grid intervals per axis")->required();
  scan_cmd->add_option("--n", n, "largest n")->required();
  scan_cmd->add_option("--out", out_path, "CSV file")->required();

  try {
    std::vector<std::string> args(argv.rbegin(), argv.rend());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    return {kOk, app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return {kOk, app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    return error_result(kDomainError, "UsageError", e.what());
  }

  auto dump = [&](const Json& j) { return CommandResult{kOk, pretty ? j.dump(2) + "\n" : json_line(j)}; };

  try {
    auto params = [&] { return Params::make(parse_rational(a_text), parse_rational(theta_text)); };

    if (classify_cmd->parsed()) {
      const Params p = params();
      const RegionAssignment ra = classify(p);
      Json j = echo(p);
      j["canonical"] = region_name(ra.canonical);
      Json applicable = Json::array();
      for (Region r : ra.applicable) applicable.push_back(region_name(r));
      j["applicable"] = applicable;
      j["dual_target"] = ra.dual_target ? echo(*ra.dual_target) : Json(nullptr);
      return dump(j);
    }

    if (pn_cmd->parsed()) {
      const Params p = params();
      Json j = echo(p);
      j["mode"] = mode;
      Json entries = Json::array();
      if (mode == "mc") {
        j["samples"] = samples;
        j["seed"] = seed;
        for (std::size_t k = 0; k <= n; ++k) {
          const McEstimate est = mc_estimate(p, k, samples, seed);
          entries.push_back(Json{{"n", k}, {"mean", est.mean}, {"stderr", est.std_error}});
        }
      } else {
        Method method{};
        const auto values = table_for_mode(p, n, mode, method);
        j["method"] = method_name(method);
        for (std::size_t k = 0; k < values.size(); ++k)
          entries.push_back(Json{{"n", k}, {"p", to_string(values[k])}, {"p_float", to_double(values[k])}});
      }
      j["entries"] = entries;
      if (pretty) return {kOk, pretty_table(j, "p", "p_float")};
      return {kOk, json_line(j)};
    }

    if (gf_cmd->parsed()) {
      const Params p = params();
      const PersistenceTable t = persistence_series(p, order);
      Json j = echo(p);
      j["order"] = order;
      j["method"] = method_name(t.method);
      Json coeffs = Json::array(), floats = Json::array();
      for (const auto& e : t.entries) {
        coeffs.push_back(to_string(e.value));
        floats.push_back(e.shadow);
      }
      j["coefficients"] = coeffs;
      j["coefficients_float"] = floats;
      return dump(j);
    }

    if (exp_cmd->parsed()) {
      const Params p = params();
      ExponentOptions opt;
      opt.tol = tol;
      const ExponentResult r = find_exponent(p, opt);
      Json j = echo(p);
      j["resolved"] = echo(r.resolved);
      j["kind"] = exponent_kind_name(r.kind);
      j["z0"] = enclosure_json(r.z0);
      j["z0_exact"] = r.z0_exact ? Json(to_string(*r.z0_exact)) : Json(nullptr);
      j["lambda"] = enclosure_json(r.lambda);
      j["lambda_exact"] =
          (r.z0_exact && *r.z0_exact != 0) ? Json(to_string(Rational(1 / *r.z0_exact))) : Json(nullptr);
      j["constant"] = r.constant ? Json(*r.constant) : Json(nullptr);
      j["tol"] = r.precision;
      j["scanned_max"] = r.scanned_max;
      return dump(j);
    }

    if (phi_cmd->parsed()) {
      const Polynomial poly = phi(ell);
      Json j;
      j["ell"] = ell;
      if (phi_theta) {
        const Rational t = parse_rational(*phi_theta);
        j["theta"] = to_string(t);
        j["value"] = to_string(poly(t));
      } else {
        j["phi"] = poly.to_string();
        j["monomials"] = poly.monomial_count();
      }
      return dump(j);
    }

    if (mallows_cmd->parsed()) {
      Json j;
      j["n"] = n;
      j["J"] = mallows_J(n).to_string();
      return dump(j);
    }

    if (verify_cmd->parsed()) {
      const Params p = params();
      const auto paths = computation_paths(p, n);
      const std::vector<Rational>& reference = paths.back().values;
      Json j = echo(p);
      j["n"] = n;
      j["reference"] = paths.back().name;
      Json names = Json::array();
      for (const auto& path : paths) names.push_back(path.name);
      j["paths"] = names;
      Json per_n = Json::array();
      bool ok = true;
      Rational worst(0);
      for (std::size_t k = 0; k <= n; ++k) {
        Rational d(0);
        for (const auto& path : paths) d = std::max(d, Rational(abs(path.values[k] - reference[k])));
        ok = ok && d == 0;
        worst = std::max(worst, d);
        per_n.push_back(to_string(d));
      }
      j["discrepancy"] = per_n;
      j["max_discrepancy"] = to_string(worst);
      j["ok"] = ok;
      CommandResult res = dump(j);
      if (!ok) res.exit_code = kVerificationFailure;
      return res;
    }

    if (scan_cmd->parsed()) {
      const Rational a0 = parse_rational(a_min), a1 = parse_rational(a_max);
      const Rational t0 = parse_rational(t_min), t1 = parse_rational(t_max);
      if (a0 <= -1) throw Error(Errc::Domain, "a-min must exceed -1");
      if (a1 < a0 || t1 < t0) throw Error(Errc::Domain, "empty scan range");
      const std::size_t k = std::max<std::size_t>(steps, 1);
      std::vector<Params> grid;
      for (std::size_t i = 0; i <= steps; ++i)
        for (std::size_t jj = 0; jj <= steps; ++jj)
          grid.push_back(Params{Rational(a0 + (a1 - a0) * Rational(i) / Rational(k)),
                                Rational(t0 + (t1 - t0) * Rational(jj) / Rational(k))});
      std::vector<std::future<ScanRow>> jobs;
      for (const Params& g : grid) jobs.push_back(std::async(std::launch::async, scan_point, g, n));
      std::vector<ScanRow> rows;
      for (auto& f : jobs) rows.push_back(f.get());
      std::sort(rows.begin(), rows.end(), [](const ScanRow& l, const ScanRow& r) {
        return l.a != r.a ? l.a < r.a : l.theta < r.theta;
      });
      std::ofstream out(out_path);
      if (!out) throw Error(Errc::Domain, "cannot open " + out_path);
      out << "a,theta,region";
      for (std::size_t i = 1; i <= n; ++i) out << ",p" << i;
      out << ",lambda\n";
      for (const auto& r : rows) {
        out << csv_double(to_double(r.a)) << ',' << csv_double(to_double(r.theta)) << ',' << r.region;
        for (double v : r.p) out << ',' << csv_double(v);
        out << ',' << csv_double(r.lambda) << '\n';
      }
      Json j{{"out", out_path}, {"rows", rows.size()}, {"columns", n + 4}};
      return dump(j);
    }
  } catch (const Error& e) {
    return error_result(kDomainError, errc_name(e.code()), e.what());
  }
  return error_result(kDomainError, "UsageError", "no subcommand");
}

}  // namespace persist::cli
