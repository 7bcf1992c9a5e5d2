#include "boilover/corephys.hpp"

#include "boilover/csv.hpp"
#include "boilover/errors.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace boilover {

namespace {

double require(const std::optional<double>& value, const std::string& fuel,
               const char* what) {
  if (!value) throw MissingInput("fuel '" + fuel + "' has no " + what);
  return *value;
}

void require_positive(double value, const std::string& what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ValidationError(what + " must be strictly positive");
  }
}

}  // namespace

double FuelProperties::conductivity() const {
  // a_F is the primary transport property; every group then satisfies the
  // closure lambda = a*rho*C exactly.
  if (rho_F && C_pF) return a_F * *rho_F * *C_pF;
  return require(lambda_F, name, "thermal conductivity");
}

double FuelProperties::density() const { return require(rho_F, name, "density"); }

double FuelProperties::specific_heat() const {
  return require(C_pF, name, "specific heat");
}

double FuelProperties::latent_heat() const {
  return require(H_v, name, "latent heat");
}

double FuelProperties::absorption() const {
  return require(mu, name, "absorption coefficient");
}

void FuelProperties::validate() const {
  const std::string who = "fuel '" + name + "': ";
  require_positive(a_F, who + "a_F");
  require_positive(T_s, who + "T_s");
  const std::array<std::pair<const std::optional<double>*, const char*>, 5> optional_fields{{
      {&lambda_F, "lambda_F"}, {&rho_F, "rho_F"}, {&C_pF, "C_pF"}, {&H_v, "H_v"}, {&mu, "mu"}}};
  for (const auto& [field, label] : optional_fields) {
    if (*field) require_positive(**field, who + label);
  }
  if (lambda_F && rho_F && C_pF) {
    const double implied = *lambda_F / (*rho_F * *C_pF);
    if (std::abs(a_F - implied) / a_F > 0.05) {
      throw ValidationError(who + "a_F disagrees with lambda_F/(rho_F*C_pF) by more than 5%");
    }
  }
}

void FlameEnvironment::validate() const {
  if (!(T_inf_f > 0.0) || !(T_f > T_inf_f)) {
    throw ValidationError("flame environment requires T_f > T_inf_f > 0");
  }
  // K = 0 is the transparent limit and legitimately gives zero feedback.
  if (!(K >= 0.0)) throw ValidationError("extinction coefficient K must be non-negative");
  require_positive(g, "gravitational acceleration g");
  require_positive(rho_inf, "air density rho_inf");
  require_positive(C_p, "flame-gas specific heat C_p");
}

void Scenario::validate() const {
  fuel.validate();
  require_positive(D, "pool diameter D");
  require_positive(y0, "initial layer depth y0");
  require_positive(T_inf, "ambient temperature T_inf");
  if (!(fuel.T_s > T_inf)) throw ValidationError("surface temperature must exceed T_inf");
  require_positive(F, "surface flux F");
  if (!V_a && !m_dot) throw MissingInput("either V_a or m_dot must be supplied");
  if (V_a) require_positive(*V_a, "regression velocity V_a");
  if (m_dot) require_positive(*m_dot, "burning rate m_dot");
  if (y_F && !(*y_F > 0.0 && *y_F <= y0)) {
    throw ValidationError("residual depth y_F must satisfy 0 < y_F <= y0");
  }
  if (theta_B0 && !(*theta_B0 > 0.0 && *theta_B0 < 1.0)) {
    throw ValidationError("theta_B0 must lie in (0, 1)");
  }
}

double regression_velocity(const Scenario& scenario) {
  const auto& s = scenario;
  if (!s.V_a && !s.m_dot) throw MissingInput("neither V_a nor m_dot supplied");
  if (s.m_dot) {
    const double derived = *s.m_dot / s.fuel.density();
    if (s.V_a) {
      if (std::abs(*s.V_a - derived) > 0.01 * *s.V_a) {
        throw Conflict("V_a and m_dot/rho_F differ by more than 1%");
      }
      return *s.V_a;
    }
    if (!(derived > 0.0)) throw ValidationError("derived regression velocity is not positive");
    return derived;
  }
  if (!(*s.V_a > 0.0)) throw ValidationError("regression velocity must be positive");
  return *s.V_a;
}

double feedback_fraction(double K, double D) {
  if (!(D > 0.0)) throw DomainError("pool diameter must be positive");
  return std::pow((1.0 - std::exp(-K * D)) / std::sqrt(D), 0.61);
}

FlameFeedback flame_feedback(const FlameEnvironment& env, double D, FeedbackForm form) {
  env.validate();
  FlameFeedback out;
  out.chi = feedback_fraction(env.K, D);
  const double lead = 4.0 * out.chi / std::numbers::pi * env.rho_inf * env.C_p * std::sqrt(D);
  const double rise = env.T_f - env.T_inf_f;
  if (form == FeedbackForm::gravity_repaired) {
    out.flux = lead * std::sqrt(env.g * env.T_inf_f) * rise;
    out.audit_note =
        "gravity restored under the square root: sqrt(g*T_inf_f)*(T_f - T_inf_f); "
        "the printed correlation carries no g and does not reduce to W/m^2";
  } else {
    out.flux = lead * std::sqrt(env.T_inf_f * rise);
    out.audit_note =
        "verbatim correlation sqrt(T_inf_f*(T_f - T_inf_f)); dimensionally inconsistent";
  }
  return out;
}

FluxBalance flux_balance(const Scenario& scenario) {
  const double V_a = regression_velocity(scenario);
  FluxBalance out;
  out.F = scenario.F;
  out.q_vap = scenario.fuel.density() * scenario.fuel.latent_heat() * V_a;
  out.phi = out.F - out.q_vap;
  out.q_c = out.phi;
  out.deficit = out.phi <= 0.0;
  return out;
}

DimensionlessGroups dimensionless_groups(const Scenario& scenario) {
  scenario.validate();
  const auto& fuel = scenario.fuel;
  const double V_a = regression_velocity(scenario);
  const FluxBalance flux = flux_balance(scenario);
  const double lambda = fuel.conductivity();
  const double dT = scenario.delta_T();

  DimensionlessGroups g;
  g.n_dhs = scenario.y0 * V_a / fuel.a_F;
  g.ste = fuel.specific_heat() * dT / fuel.latent_heat();
  if (fuel.mu) g.bu = *fuel.mu * scenario.y0;
  g.n0 = scenario.F * scenario.y0 / (lambda * dT);
  g.b_sa = g.n0;
  g.h_p = scenario.F / flux.q_vap;
  g.b_f = 1.0 - scenario.F / flux.phi;
  g.n_p = g.n0 / g.n_dhs;
  g.pulse_amplitude = flux.phi * fuel.a_F / (lambda * dT * V_a);
  g.delta_f = scenario.residual_depth() / scenario.y0;
  g.t0 = scenario.y0 * scenario.y0 / fuel.a_F;

  const double via_ratio = g.b_sa * g.ste / g.n_dhs;
  if (std::abs(g.h_p - via_ratio) > 1e-12 * std::abs(g.h_p)) {
    throw std::logic_error("H_p = B_SA*Ste/N_DHS identity violated");
  }
  return g;
}

CharacteristicScales characteristic_scales(const Scenario& scenario) {
  scenario.validate();
  const auto& fuel = scenario.fuel;
  const double V_a = regression_velocity(scenario);
  CharacteristicScales s;
  s.a_F = fuel.a_F;
  s.V_a = V_a;
  s.t0 = scenario.y0 * scenario.y0 / fuel.a_F;
  s.tau0 = scenario.y0 / V_a;
  s.L0 = fuel.conductivity() * scenario.delta_T() / scenario.F;
  s.U0 = scenario.y0 / s.t0;
  s.y_p0 = fuel.a_F / V_a;
  s.tau_rad = s.L0 * s.L0 / fuel.a_F;
  return s;
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::string_view kFuelHeader = "name,a_F,lambda_F,rho_F,C_pF,H_v,mu,T_s";

}  // namespace

FuelDatabase parse_fuel_database(const std::string& text) {
  const auto rows = csv::lines(text);
  if (rows.empty()) throw SchemaError(1, "missing header");
  const auto header = csv::split(rows.front());
  const auto expected = csv::split(kFuelHeader);
  if (header.size() != expected.size()) {
    throw SchemaError(1, "fuel database header must be '" + std::string(kFuelHeader) + "'");
  }
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (csv::trim(header[i]) != expected[i]) {
      throw SchemaError(1, "unexpected column '" + header[i] + "'");
    }
  }

  FuelDatabase db;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const std::size_t line = i + 1;
    if (csv::trim(rows[i]).empty()) continue;
    const auto cells = csv::split(rows[i]);
    if (cells.size() != expected.size()) {
      throw SchemaError(line, "expected " + std::to_string(expected.size()) + " fields, got " +
                                  std::to_string(cells.size()));
    }
    try {
      FuelProperties fuel;
      fuel.name = csv::trim(cells[0]);
      if (fuel.name.empty()) throw InputError("empty fuel name");
      const auto a_F = csv::parse_number(cells[1]);
      const auto T_s = csv::parse_number(cells[7]);
      if (!a_F || !T_s) throw MissingInput("a_F and T_s are mandatory");
      fuel.a_F = *a_F;
      fuel.T_s = *T_s;
      fuel.lambda_F = csv::parse_number(cells[2]);
      fuel.rho_F = csv::parse_number(cells[3]);
      fuel.C_pF = csv::parse_number(cells[4]);
      fuel.H_v = csv::parse_number(cells[5]);
      fuel.mu = csv::parse_number(cells[6]);
      fuel.validate();
      if (!db.emplace(fuel.name, fuel).second) {
        throw InputError("duplicate fuel '" + fuel.name + "'");
      }
    } catch (const SchemaError&) {
      throw;
    } catch (const InputError& e) {
      throw SchemaError(line, e.what());
    }
  }
  return db;
}

FuelDatabase load_fuel_database(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open fuel database " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_fuel_database(buffer.str());
}

std::string format_fuel_database(const FuelDatabase& db) {
  std::string out(kFuelHeader);
  out.push_back('\n');
  const auto cell = [](const std::optional<double>& v) {
    return v ? csv::format_number(*v) : std::string();
  };
  for (const auto& [name, f] : db) {
    out += csv::join({f.name, csv::format_number(f.a_F), cell(f.lambda_F), cell(f.rho_F),
                      cell(f.C_pF), cell(f.H_v), cell(f.mu), csv::format_number(f.T_s)});
    out.push_back('\n');
  }
  return out;
}

const FuelProperties& find_fuel(const FuelDatabase& db, const std::string& name) {
  const auto it = db.find(name);
  if (it == db.end()) throw InputError("unknown fuel '" + name + "'");
  return it->second;
}

}  // namespace boilover
