#include "boilover/cli.hpp"

#include "boilover/csv.hpp"
#include "boilover/datasets.hpp"
#include "boilover/errors.hpp"
#include "boilover/fdoracle.hpp"
#include "boilover/hbi.hpp"
#include "boilover/predict.hpp"
#include "boilover/report.hpp"
#include "boilover/units.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#ifndef BOILOVER_DATA_DIR
#define BOILOVER_DATA_DIR "data"
#endif

namespace boilover::cli {

namespace {

using report::Json;
using units::Dimension;

// -- scenario assembly -----------------------------------------------------------

struct ScenarioArgs {
  std::string fuel;
  std::string D, y0, va, mdot, F, T_inf, theta, yF, ndhs;
  double K{1.0};
  double T_f{1100.0};
};

void add_scenario_options(CLI::App* app, ScenarioArgs& a, bool fuel_required = true) {
  auto* fuel = app->add_option("--fuel", a.fuel, "fuel name in the fuel database");
  if (fuel_required) fuel->required();
  app->add_option("--D", a.D, "pool diameter (m; suffixes mm, cm, m)");
  app->add_option("--y0", a.y0, "initial fuel depth (e.g. 19mm)");
  app->add_option("--va", a.va, "regression velocity (m/s; or mm/s suffix)");
  app->add_option("--mdot", a.mdot, "mass burning rate (kg/m^2/s)");
  app->add_option("--ndhs", a.ndhs, "N_DHS override; sets V_a = N_DHS a_F / y0");
  app->add_option("--F", a.F, "net surface flux (W/m^2); default from flame feedback");
  app->add_option("--T-inf", a.T_inf, "initial temperature (K or C suffix)");
  app->add_option("--theta-b0", a.theta, "interface temperature at onset (-)");
  app->add_option("--yF", a.yF, "residual fuel depth at onset");
  app->add_option("--K", a.K, "flame extinction coefficient (1/m)");
  app->add_option("--Tf", a.T_f, "flame temperature (K)");
}

struct Context {
  CliConfig config;
  FuelDatabase fuels;
  std::vector<BurningRate> rates;
  bool rates_loaded{false};

  const std::vector<BurningRate>& burning_rates() {
    if (!rates_loaded) {
      rates = load_burning_rates(config.data_dir / "burning_rates.csv");
      rates_loaded = true;
    }
    return rates;
  }
};

struct Built {
  Scenario scenario;
  Json notes = Json::array();
};

std::optional<double> quantity(const std::string& text, Dimension dim) {
  if (text.empty()) return std::nullopt;
  return units::parse_quantity(text, dim);
}

Built build_scenario(const ScenarioArgs& a, Context& ctx) {
  Built b;
  Scenario& s = b.scenario;
  s.fuel = find_fuel(ctx.fuels, a.fuel);
  const auto y0 = quantity(a.y0, Dimension::length);
  if (!y0) throw MissingInput("--y0 is required");
  s.y0 = *y0;
  if (const auto T = quantity(a.T_inf, Dimension::temperature)) s.T_inf = *T;
  s.theta_B0 = quantity(a.theta, Dimension::dimensionless);
  s.y_F = quantity(a.yF, Dimension::length);

  if (const auto D = quantity(a.D, Dimension::length)) {
    s.D = *D;
  } else {
    std::vector<double> ds;
    for (const auto& r : ctx.burning_rates()) {
      if (r.fuel == a.fuel) ds.push_back(r.D);
    }
    if (ds.size() != 1) throw MissingInput("--D is required for fuel '" + a.fuel + "'");
    s.D = ds.front();
    b.notes.push_back("D taken from the burning-rate table");
  }

  const auto va = quantity(a.va, Dimension::velocity);
  const auto ndhs = quantity(a.ndhs, Dimension::dimensionless);
  if (va && ndhs) throw Conflict("--va and --ndhs are mutually exclusive");
  s.m_dot = quantity(a.mdot, Dimension::dimensionless);
  if (va) {
    s.V_a = va;
  } else if (ndhs) {
    if (!(*ndhs > 0.0)) throw ValidationError("--ndhs must be positive");
    s.V_a = *ndhs * s.fuel.a_F / s.y0;
    b.notes.push_back("V_a set from the N_DHS override");
  } else if (!s.m_dot) {
    const auto hit = lookup_burning_rate(ctx.burning_rates(), a.fuel, s.D);
    s.V_a = hit.V_a;
    b.notes.push_back(hit.exact ? "V_a from the burning-rate table"
                                : "V_a from the burning-rate table at D = " +
                                      csv::format_number(hit.D) + " m");
  }

  if (const auto F = quantity(a.F, Dimension::dimensionless)) {
    s.F = *F;
  } else {
    FlameEnvironment env;
    env.K = a.K;
    env.T_f = a.T_f;
    const auto form = ctx.config.strict_paper_mode ? FeedbackForm::as_printed
                                                   : FeedbackForm::gravity_repaired;
    s.F = flame_feedback(env, s.D, form).flux;
    b.notes.push_back(std::string("F from flame feedback (") +
                      (ctx.config.strict_paper_mode ? "as printed" : "gravity restored") + ")");
  }
  s.validate();
  return b;
}

// -- output ------------------------------------------------------------------------

void emit(const Json& j, Context& ctx, std::ostream& out) {
  switch (ctx.config.output_format) {
    case OutputFormat::json: out << j.dump(2) << "\n"; break;
    case OutputFormat::csv: out << report::to_csv(j); break;
    case OutputFormat::table: out << report::to_table(j); break;
  }
}

Json opt(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

// -- subcommands ---------------------------------------------------------------------

Json groups_json(const Built& b) {
  const auto& s = b.scenario;
  const auto g = dimensionless_groups(s);
  const auto sc = characteristic_scales(s);
  const auto flux = flux_balance(s);
  Json j;
  j["fuel"] = s.fuel.name;
  j["D_m"] = s.D;
  j["y0_m"] = s.y0;
  j["V_a_m_per_s"] = sc.V_a;
  j["F_W_per_m2"] = flux.F;
  j["q_vap_W_per_m2"] = flux.q_vap;
  j["Phi_W_per_m2"] = flux.phi;
  j["flux_deficit"] = flux.deficit;
  j["N_DHS"] = g.n_dhs;
  j["Ste"] = g.ste;
  j["Bu"] = opt(g.bu);
  j["N0"] = g.n0;
  j["B_SA"] = g.b_sa;
  j["H_p"] = g.h_p;
  j["B_F"] = g.b_f;
  j["B_F_approx"] = g.b_f_approx();
  j["N_p"] = g.n_p;
  j["pulse_amplitude"] = g.pulse_amplitude;
  j["delta_F"] = g.delta_f;
  j["t0_s"] = sc.t0;
  j["tau0_s"] = sc.tau0;
  j["L0_m"] = sc.L0;
  j["U0_m_per_s"] = sc.U0;
  j["y_p0_m"] = sc.y_p0;
  j["tau_rad_s"] = sc.tau_rad;
  j["regime"] = report::regime(classify_regime(s, g));
  j["notes"] = b.notes;
  return j;
}

struct PredictArgs {
  ScenarioArgs s;
  std::string method{"auto"};
  std::string fo_e;
};

Json predict_one(const Scenario& s, const std::string& method, const std::string& fo_e) {
  const auto g = dimensionless_groups(s);
  const auto sc = characteristic_scales(s);
  if (method == "auto") {
    const auto a = predict_auto(s);
    Json j = report::prediction(a.primary);
    Json alts = Json::array();
    for (const auto& p : a.alternates) alts.push_back(report::prediction(p));
    j["alternates"] = alts;
    j["problem_A"] = a.problem_A ? report::prediction(*a.problem_A) : Json(nullptr);
    j["regime_report"] = report::regime(a.regime);
    for (const auto& w : a.warnings) j["warnings"].push_back(w);
    return j;
  }
  switch (parse_method(method)) {
    case Method::problem_A: return report::prediction(predict_problem_A(s, g));
    case Method::problem_B: {
      const auto fo = quantity(fo_e, Dimension::dimensionless);
      if (!fo) throw MissingInput("problem_B needs --fo-e");
      return report::prediction(predict_problem_B(s, g, *fo));
    }
    case Method::scaled_A: return report::prediction(scaled_problem_A(s, g));
    case Method::conduction: return report::prediction(conduction_t_B0(s, g, sc));
    case Method::radiation_exact:
      return report::prediction(radiation_t_B0(s, g, sc, RadiationPrefactor::exact_084));
    case Method::radiation_unit_prefactor:
      return report::prediction(radiation_t_B0(s, g, sc, RadiationPrefactor::unity));
  }
  throw InputError("unknown method");
}

Json flat_prediction_rows(const Json& j) {
  // Rows for csv/table output: primary, alternates, problem A.
  Json rows = Json::array();
  const auto flat = [](Json p, const std::string& role) {
    Json r;
    r["role"] = role;
    for (const char* k : {"method", "t_B0_s", "Fo_e", "theta_B0", "regime", "U_T_m_per_s",
                          "warnings"}) {
      r[k] = p[k];
    }
    return r;
  };
  rows.push_back(flat(j, "primary"));
  if (j.contains("alternates")) {
    for (const auto& a : j["alternates"]) rows.push_back(flat(a, "alternate"));
  }
  if (j.contains("problem_A") && !j["problem_A"].is_null()) {
    rows.push_back(flat(j["problem_A"], "problem_A"));
  }
  return rows;
}

struct ProfileArgs {
  ScenarioArgs s;
  std::string variant{"linear_bc"};
  std::vector<std::string> times{"0"};
  std::size_t ny{50};
  std::string ymax;
  bool wave{false};
};

std::vector<ProfileRow> profile_rows(const ProfileArgs& a, const Scenario& s) {
  std::vector<ProfileRow> rows;
  const double ymax = quantity(a.ymax, Dimension::length).value_or(s.y0);
  if (a.ny < 2) throw ValidationError("--ny must be at least 2");
  for (const auto& t_text : a.times) {
    const double t = units::parse_quantity(t_text, Dimension::time);
    if (a.variant == "hbi_quadratic") {
      const auto p = hbi_quadratic_profile(s, t);
      for (std::size_t i = 0; i < a.ny; ++i) {
        const double y = ymax * static_cast<double>(i) / static_cast<double>(a.ny - 1);
        const double th = y <= p.delta ? p.theta(y) : 0.0;
        rows.push_back({y, t, th, a.variant, th > 1.0});
      }
      continue;
    }
    const auto variant = parse_ablation_variant(a.variant);
    for (std::size_t i = 0; i < a.ny; ++i) {
      const double y = ymax * static_cast<double>(i) / static_cast<double>(a.ny - 1);
      const auto sample = a.wave ? wave_pulse(variant, s, y, t) : ablation_profile(variant, s, y, t);
      rows.push_back({y, t, sample.theta, std::string(to_string(variant)), sample.saturated});
    }
  }
  return rows;
}

struct DeltaArgs {
  ScenarioArgs s;
  std::string t_end;
  std::size_t steps{50};
  std::string bf_form{"exact"};
  std::optional<double> bf;
};

Json delta_rows(const DeltaArgs& a, const Scenario& s, bool strict) {
  const auto g = dimensionless_groups(s);
  const auto sc = characteristic_scales(s);
  double B_F = g.b_f;
  if (a.bf) {
    B_F = *a.bf;
  } else if (a.bf_form == "approx" || strict) {
    B_F = g.b_f_approx();
  } else if (a.bf_form != "exact") {
    throw InputError("--bf-form must be exact or approx");
  }
  if (!(B_F > 0.0)) {
    throw InvalidRegime("B_F = " + csv::format_number(B_F) +
                        " <= 0 for this scenario; use --bf-form approx or --bf to override");
  }
  const double t_end = quantity(a.t_end, Dimension::time).value_or(sc.t0);
  if (!(t_end > 0.0)) throw ValidationError("--t-end must be positive");
  if (a.steps < 1) throw ValidationError("--steps must be at least 1");
  Json rows = Json::array();
  for (std::size_t k = 0; k <= a.steps; ++k) {
    const double t = t_end * static_cast<double>(k) / static_cast<double>(a.steps);
    Json r;
    r["t_s"] = t;
    r["delta_m"] = hbi_delta(sc.a_F, sc.V_a, B_F, t);
    r["goodman_m"] = std::sqrt(6.0 * sc.a_F * B_F * t);
    r["saturation_m"] = hbi_delta_saturation(sc.a_F, sc.V_a, B_F);
    r["B_F"] = B_F;
    if (strict) r["delta_verbatim"] = hbi_delta_verbatim(sc.a_F, sc.V_a, B_F, t);
    rows.push_back(r);
  }
  return rows;
}

struct OracleArgs {
  ScenarioArgs s;
  std::size_t cells{256};
  std::string t_end;
  std::string dt;
  std::string scheme{"implicit_theta"};
  double theta{0.5};
  std::string bc{"dirichlet_Ts"};
  bool source{false};
  std::string advection{"hybrid"};
  std::string bottom{"far_field"};
  std::string depth;
  std::string dump;
  std::size_t saves{2001};
};

Json oracle_json(const OracleArgs& a, const Scenario& s, const Json& notes) {
  FDConfig c;
  c.n_cells = a.cells;
  c.scheme = parse_fd_scheme(a.scheme);
  c.theta = a.theta;
  c.bc_mode = parse_fd_boundary(a.bc);
  c.source_on = a.source;
  c.advection = parse_fd_advection(a.advection);
  c.bottom = parse_fd_bottom(a.bottom);
  c.domain_depth = quantity(a.depth, Dimension::length);
  c.dt = quantity(a.dt, Dimension::time);
  c.max_saved_profiles = a.saves;
  const double tau0 = s.y0 / regression_velocity(s);
  c.t_end = quantity(a.t_end, Dimension::time).value_or(tau0);
  const auto sol = fd_solve(s, c);

  Json j;
  j["n_cells"] = c.n_cells;
  j["domain_depth_m"] = sol.grid.back();
  j["dt_s"] = sol.dt;
  j["t_end_s"] = c.t_end;
  j["V_a_m_per_s"] = sol.V_a;
  j["max_energy_residual"] = sol.max_energy_residual();
  if (s.theta_B0) {
    const auto probe = fd_probe_boilover(sol, s);
    j["t_star_s"] = opt(probe.t_star);
    j["probe_warnings"] = probe.warnings;
  } else {
    j["t_star_s"] = nullptr;
    j["probe_warnings"] = Json::array({"no theta_B0 supplied"});
  }
  const auto steady = fd_steady_check(sol);
  j["steady_successive_linf"] = steady.successive_linf;
  j["steady_analytic_linf"] = opt(steady.analytic_linf);
  j["steady_monotone"] = steady.monotone_decreasing;
  if (!a.dump.empty()) {
    std::filesystem::path path(a.dump);
    std::ofstream csv_out(path);
    if (!csv_out) throw InputError("cannot write " + path.string());
    csv_out << fd_solution_csv(sol);
    auto echo = path;
    echo.replace_extension(".json");
    std::ofstream json_out(echo);
    if (!json_out) throw InputError("cannot write " + echo.string());
    json_out << fd_config_json(sol, s) << "\n";
    j["dump"] = path.string();
    j["config_echo"] = echo.string();
  }
  j["notes"] = notes;
  return j;
}

struct CompareArgs {
  std::vector<std::string> datasets;
  std::string methods{"conduction,radiation_unit_prefactor"};
};

std::set<Method> parse_methods(const std::string& text) {
  std::set<Method> out;
  std::string_view rest(text);
  while (!rest.empty()) {
    const auto cut = rest.find(',');
    const auto token = csv::trim(rest.substr(0, cut));
    if (!token.empty()) out.insert(parse_method(token));
    if (cut == std::string_view::npos) break;
    rest.remove_prefix(cut + 1);
  }
  if (out.empty()) throw InputError("no methods given");
  return out;
}

struct SweepArgs {
  ScenarioArgs s;
  std::string param;
  std::string from, to;
  std::size_t steps{10};
  std::string method{"auto"};
  bool log{false};
};

Dimension param_dimension(const std::string& p) {
  if (p == "y0" || p == "D") return Dimension::length;
  if (p == "va") return Dimension::velocity;
  if (p == "T-inf") return Dimension::temperature;
  if (p == "F" || p == "theta-b0") return Dimension::dimensionless;
  throw InputError("--param must be one of y0, D, va, F, theta-b0, T-inf");
}

Json sweep_rows(const SweepArgs& a, Context& ctx) {
  const Dimension dim = param_dimension(a.param);
  const double lo = units::parse_quantity(a.from, dim);
  const double hi = units::parse_quantity(a.to, dim);
  if (a.steps < 1) throw ValidationError("--steps must be at least 1");
  if (a.log && !(lo > 0.0 && hi > 0.0)) throw ValidationError("--log needs positive bounds");

  // The base scenario fixes V_a (and F when given); D sweeps recompute the
  // flame feedback at every point unless --F was supplied.
  ScenarioArgs base = a.s;
  if (a.param == "y0" && base.y0.empty()) base.y0 = a.from;
  if (a.param == "D" && base.D.empty()) base.D = a.from;
  const Built built = build_scenario(base, ctx);

  Json rows = Json::array();
  for (std::size_t k = 0; k < a.steps; ++k) {
    const double s_frac = a.steps == 1 ? 0.0 : static_cast<double>(k) / (a.steps - 1);
    const double value = a.log ? lo * std::pow(hi / lo, s_frac) : lo + (hi - lo) * s_frac;
    Scenario s = built.scenario;
    if (a.param == "y0") {
      s.y0 = value;
    } else if (a.param == "D") {
      s.D = value;
      if (a.s.F.empty()) {
        FlameEnvironment env;
        env.K = a.s.K;
        env.T_f = a.s.T_f;
        s.F = flame_feedback(env, value,
                             ctx.config.strict_paper_mode ? FeedbackForm::as_printed
                                                          : FeedbackForm::gravity_repaired)
                  .flux;
      }
    } else if (a.param == "va") {
      s.V_a = value;
      s.m_dot.reset();
    } else if (a.param == "F") {
      s.F = value;
    } else if (a.param == "theta-b0") {
      s.theta_B0 = value;
    } else {
      s.T_inf = value;
    }

    Json r;
    r["param"] = a.param;
    r["value"] = value;
    try {
      const Json p = predict_one(s, a.method, "");
      const auto g = dimensionless_groups(s);
      r["method"] = p["method"];
      r["regime"] = std::string(to_string(classify_regime(s, g).classification));
      r["t_B0_s"] = p["t_B0_s"];
      r["Fo_e"] = p["Fo_e"];
      r["theta_B0"] = p["theta_B0"];
      r["U_T_m_per_s"] = p["U_T_m_per_s"];
      r["N_DHS"] = g.n_dhs;
      r["H_p"] = g.h_p;
      r["F_W_per_m2"] = s.F;
      r["warnings"] = p["warnings"];
    } catch (const RegimeError& e) {
      r["method"] = a.method;
      r["regime"] = nullptr;
      for (const char* k : {"t_B0_s", "Fo_e", "theta_B0", "U_T_m_per_s", "N_DHS", "H_p"}) {
        r[k] = nullptr;
      }
      r["F_W_per_m2"] = s.F;
      r["warnings"] = Json::array({std::string("regime: ") + e.what()});
    }
    rows.push_back(r);
  }
  return rows;
}

std::string table_from_csv(const std::string& text) {
  Json rows = Json::array();
  const auto lines = csv::lines(text);
  if (lines.empty()) return {};
  const auto header = csv::split(lines[0]);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto cells = csv::split(lines[i]);
    Json r;
    for (std::size_t k = 0; k < header.size(); ++k) r[header[k]] = k < cells.size() ? cells[k] : "";
    rows.push_back(r);
  }
  return report::to_table(rows);
}

std::filesystem::path env_path(const char* name, const std::filesystem::path& fallback) {
  if (const char* v = std::getenv(name); v && *v) return v;
  return fallback;
}

void write_error(std::ostream& err, OutputFormat fmt, const std::string& kind,
                 const std::string& message) {
  if (fmt == OutputFormat::json) {
    Json j;
    j["error"] = kind;
    j["message"] = message;
    err << j.dump() << "\n";
  } else {
    err << "error: " << kind << ": " << message << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool tty) {
  Context ctx;
  ctx.config.output_format = tty ? OutputFormat::table : OutputFormat::json;
  ctx.config.data_dir = env_path("BOILOVER_DATA_DIR", BOILOVER_DATA_DIR);

  CLI::App app{"Boilover onset toolkit: closed-form predictors and a finite-difference oracle"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format;
  std::string fuel_db;
  app.add_option("--format", format, "json | csv | table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--fuel-db", fuel_db, "fuel database CSV (env BOILOVER_FUEL_DB)");
  app.add_flag("--strict-paper-mode", ctx.config.strict_paper_mode,
               "use verbatim-formula variants where provided");

  ScenarioArgs groups_args;
  auto* groups = app.add_subcommand("groups", "dimensionless groups and scales");
  add_scenario_options(groups, groups_args);

  ProfileArgs profile_args;
  auto* profile = app.add_subcommand("profile", "sample a closed-form profile");
  add_scenario_options(profile, profile_args.s);
  profile->add_option("--variant", profile_args.variant, "linear_bc | stefan_bc | hbi_quadratic");
  profile->add_option("--t", profile_args.times, "sample time(s), comma-separated or repeated")
      ->delimiter(',');
  profile->add_option("--ny", profile_args.ny, "points in depth");
  profile->add_option("--ymax", profile_args.ymax, "deepest sample (default y0)");
  profile->add_flag("--wave", profile_args.wave, "travelling-pulse form of the ablation profile");

  DeltaArgs delta_args;
  auto* delta = app.add_subcommand("delta", "HBI penetration depth curve");
  add_scenario_options(delta, delta_args.s);
  delta->add_option("--t-end", delta_args.t_end, "final time (default y0^2/a_F)");
  delta->add_option("--steps", delta_args.steps, "number of intervals");
  delta->add_option("--bf-form", delta_args.bf_form, "exact | approx");
  delta->add_option("--bf", delta_args.bf, "B_F override");

  PredictArgs predict_args;
  auto* predict = app.add_subcommand("predict", "time to boilover");
  add_scenario_options(predict, predict_args.s);
  predict->add_option("--method", predict_args.method,
                      "auto | problem_A | problem_B | scaled_A | conduction | radiation_exact | "
                      "radiation_unit_prefactor");
  predict->add_option("--fo-e", predict_args.fo_e, "Fo_e for problem_B");

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "finite-difference reference solve and probe");
  add_scenario_options(oracle, oracle_args.s);
  oracle->add_option("--cells", oracle_args.cells, "grid cells");
  oracle->add_option("--t-end", oracle_args.t_end, "horizon (default y0/V_a)");
  oracle->add_option("--dt", oracle_args.dt, "time step");
  oracle->add_option("--scheme", oracle_args.scheme, "explicit | implicit_theta");
  oracle->add_option("--theta", oracle_args.theta, "theta weight in [0.5, 1]");
  oracle->add_option("--bc", oracle_args.bc, "flux_linear | flux_stefan | dirichlet_Ts");
  oracle->add_flag("--source", oracle_args.source, "in-depth radiation absorption");
  oracle->add_option("--advection", oracle_args.advection, "hybrid | upwind");
  oracle->add_option("--bottom", oracle_args.bottom, "far_field | adiabatic");
  oracle->add_option("--depth", oracle_args.depth, "computational depth");
  oracle->add_option("--dump", oracle_args.dump, "write t_s,y_m,theta CSV plus a JSON echo");
  oracle->add_option("--saves", oracle_args.saves, "stored profiles");

  CompareArgs compare_args;
  auto* compare = app.add_subcommand("compare", "predictions against experiments");
  compare->add_option("--dataset", compare_args.datasets, "dataset CSV (default: bundled)");
  compare->add_option("--methods", compare_args.methods, "comma-separated methods");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "predictions over a parameter range");
  add_scenario_options(sweep, sweep_args.s);
  sweep->add_option("--param", sweep_args.param, "y0 | D | va | F | theta-b0 | T-inf")->required();
  sweep->add_option("--from", sweep_args.from, "first value")->required();
  sweep->add_option("--to", sweep_args.to, "last value")->required();
  sweep->add_option("--steps", sweep_args.steps, "number of points");
  sweep->add_option("--method", sweep_args.method, "auto or a method name");
  sweep->add_flag("--log", sweep_args.log, "geometric spacing");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    write_error(err, ctx.config.output_format, "usage", e.what());
    return kExitInput;
  }

  if (format == "json") ctx.config.output_format = OutputFormat::json;
  if (format == "csv") ctx.config.output_format = OutputFormat::csv;
  if (format == "table") ctx.config.output_format = OutputFormat::table;
  const auto fmt = ctx.config.output_format;

  try {
    ctx.config.fuel_db_path =
        fuel_db.empty() ? env_path("BOILOVER_FUEL_DB", ctx.config.data_dir / "fuels.csv")
                        : std::filesystem::path(fuel_db);

    if (*compare) {
      ctx.fuels = load_fuel_database(ctx.config.fuel_db_path);
      if (compare_args.datasets.empty()) {
        for (const char* f : {"garo_heating_oil.csv", "arai_thin_layer.csv", "koseki_crude.csv"}) {
          ctx.config.dataset_paths.push_back(ctx.config.data_dir / f);
        }
      } else {
        for (const auto& p : compare_args.datasets) ctx.config.dataset_paths.emplace_back(p);
      }
      std::vector<ExperimentRecord> records;
      for (const auto& p : ctx.config.dataset_paths) {
        auto part = load_experiments(p, &ctx.fuels);
        records.insert(records.end(), part.begin(), part.end());
      }
      const auto rep = compare_report(records, parse_methods(compare_args.methods), ctx.fuels);
      switch (fmt) {
        case OutputFormat::json: out << comparison_json(rep) << "\n"; break;
        case OutputFormat::csv: out << comparison_csv(rep); break;
        case OutputFormat::table: out << table_from_csv(comparison_csv(rep)); break;
      }
      return kExitOk;
    }

    ctx.fuels = load_fuel_database(ctx.config.fuel_db_path);

    if (*groups) {
      emit(groups_json(build_scenario(groups_args, ctx)), ctx, out);
    } else if (*profile) {
      const auto b = build_scenario(profile_args.s, ctx);
      const auto rows = profile_rows(profile_args, b.scenario);
      if (fmt == OutputFormat::csv) {
        out << profile_csv(rows);
      } else {
        Json j = Json::array();
        for (const auto& r : rows) {
          Json o;
          o["y_m"] = r.y;
          o["t_s"] = r.t;
          o["theta"] = r.theta;
          o["variant"] = r.variant;
          o["saturated"] = r.saturated;
          j.push_back(o);
        }
        emit(j, ctx, out);
      }
    } else if (*delta) {
      const auto b = build_scenario(delta_args.s, ctx);
      emit(delta_rows(delta_args, b.scenario, ctx.config.strict_paper_mode), ctx, out);
    } else if (*predict) {
      const auto b = build_scenario(predict_args.s, ctx);
      Json j = predict_one(b.scenario, predict_args.method, predict_args.fo_e);
      j["notes"] = b.notes;
      if (fmt == OutputFormat::json) {
        emit(j, ctx, out);
      } else {
        emit(flat_prediction_rows(j), ctx, out);
      }
    } else if (*oracle) {
      const auto b = build_scenario(oracle_args.s, ctx);
      emit(oracle_json(oracle_args, b.scenario, b.notes), ctx, out);
    } else if (*sweep) {
      emit(sweep_rows(sweep_args, ctx), ctx, out);
    }
    return kExitOk;
  } catch (const InputError& e) {
    write_error(err, fmt, "input", e.what());
    return kExitInput;
  } catch (const RegimeError& e) {
    write_error(err, fmt, "regime", e.what());
    return kExitRegime;
  } catch (const std::exception& e) {
    write_error(err, fmt, "internal", e.what());
    return kExitInternal;
  }
}

}  // namespace boilover::cli
