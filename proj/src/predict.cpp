#include "boilover/predict.hpp"

#include "boilover/errors.hpp"

#include <algorithm>
#include <cmath>

namespace boilover {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::problem_A: return "problem_A";
    case Method::problem_B: return "problem_B";
    case Method::scaled_A: return "scaled_A";
    case Method::conduction: return "conduction";
    case Method::radiation_exact: return "radiation_exact";
    case Method::radiation_unit_prefactor: return "radiation_unit_prefactor";
  }
  return "unknown";
}

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::thin_layer: return "thin_layer";
    case Regime::thick_layer: return "thick_layer";
    case Regime::transition: return "transition";
  }
  return "unknown";
}

Method parse_method(std::string_view text) {
  for (Method m : {Method::problem_A, Method::problem_B, Method::scaled_A, Method::conduction,
                   Method::radiation_exact, Method::radiation_unit_prefactor}) {
    if (text == to_string(m)) return m;
  }
  if (text == "radiation" || text == "radiation_unity") return Method::radiation_unit_prefactor;
  throw InputError("unknown method '" + std::string(text) + "'");
}

bool PredictionResult::has_warning(std::string_view w) const {
  return std::find(warnings.begin(), warnings.end(), w) != warnings.end();
}

namespace {

void set_time(PredictionResult& r, double t_B0, double t0, double y0) {
  r.t_B0 = t_B0;
  r.Fo_e = t_B0 / t0;
  if (t_B0 > 0.0) r.U_T = y0 / t_B0;
}

Regime regime_for(double n_dhs) {
  // Coarse tag from N_DHS alone; classify_regime applies the full band.
  if (n_dhs > 2.5) return Regime::thick_layer;
  if (n_dhs < 0.5) return Regime::thin_layer;
  return Regime::transition;
}

double require_theta(const Scenario& scenario) {
  if (!scenario.theta_B0) throw MissingInput("theta_B0 is required for this predictor");
  return *scenario.theta_B0;
}

}  // namespace

// ---------------------------------------------------------------------------

RegimeReport classify_regime(double y0, double a_F, double V_a, std::optional<double> bu,
                             RegimeBand band) {
  if (!(V_a > 0.0)) throw DomainError("regime classification needs V_a > 0");
  if (!(a_F > 0.0)) throw DomainError("regime classification needs a_F > 0");
  RegimeReport r;
  r.y_crit = a_F / V_a;
  r.n_dhs = y0 / r.y_crit;
  r.bu = bu;
  r.band_lower = band.lower * r.y_crit;
  r.band_upper = band.upper * r.y_crit;
  if (y0 > r.band_upper) {
    r.classification = Regime::thick_layer;
  } else if (y0 < r.band_lower) {
    r.classification = Regime::thin_layer;
  } else {
    r.classification = Regime::transition;
  }
  return r;
}

RegimeReport classify_regime(const Scenario& scenario, const DimensionlessGroups& groups,
                             RegimeBand band) {
  return classify_regime(scenario.y0, scenario.fuel.a_F, regression_velocity(scenario), groups.bu,
                         band);
}

// ---------------------------------------------------------------------------

PredictionResult problem_a(double theta_B0, double amplitude, double n_dhs, double delta_f,
                           double t0) {
  if (!(n_dhs > 0.0)) throw InvalidRegime("problem A needs N_DHS > 0");
  if (!(amplitude > 0.0)) throw InvalidRegime("problem A needs N_p > 0");
  PredictionResult r;
  r.method = Method::problem_A;
  r.theta_B0 = theta_B0;
  r.regime = regime_for(n_dhs);
  const double b_b0 = amplitude * std::exp(-n_dhs * delta_f);
  const double a_b0 = theta_B0 / b_b0;
  r.diagnostics["A_B0"] = a_b0;
  r.diagnostics["B_B0"] = b_b0;
  if (a_b0 < 1.0) {
    r.warnings.emplace_back("nonpositive_log");
    return r;
  }
  if (a_b0 == 1.0) r.warnings.emplace_back("onset_at_t0");
  const double fo = std::log(a_b0) / (n_dhs * n_dhs);
  r.Fo_e = fo;
  r.t_B0 = fo * t0;
  return r;
}

PredictionResult predict_problem_A(const Scenario& scenario, const DimensionlessGroups& groups) {
  const double theta = require_theta(scenario);
  auto r = problem_a(theta, groups.n_p, groups.n_dhs, groups.delta_f, groups.t0);
  if (r.t_B0 && *r.t_B0 > 0.0) r.U_T = scenario.y0 / *r.t_B0;
  return r;
}

PredictionResult problem_b(double Fo_e, double amplitude, double n_dhs, double delta_f,
                           double t0) {
  if (!(Fo_e >= 0.0)) throw DomainError("Fo_e must be non-negative");
  PredictionResult r;
  r.method = Method::problem_B;
  r.regime = regime_for(n_dhs);
  const double b_b0 = amplitude * std::exp(-n_dhs * delta_f);
  const double exponent = n_dhs * n_dhs * Fo_e;
  r.theta_B0 = b_b0 * std::exp(exponent);
  r.Fo_e = Fo_e;
  r.t_B0 = Fo_e * t0;
  r.diagnostics["B_B0"] = b_b0;
  r.diagnostics["theta_B0_linearized"] = b_b0 * (1.0 + exponent);
  if (*r.theta_B0 > 1.0) r.warnings.emplace_back("theta_above_surface");
  return r;
}

PredictionResult predict_problem_B(const Scenario& scenario, const DimensionlessGroups& groups,
                                   double Fo_e) {
  auto r = problem_b(Fo_e, groups.n_p, groups.n_dhs, groups.delta_f, groups.t0);
  if (*r.t_B0 > 0.0) r.U_T = scenario.y0 / *r.t_B0;
  return r;
}

PredictionResult scaled_problem_a(double theta_B0, double h_p, double n0, double n_dhs,
                                  double delta_f, double t0) {
  if (!(n_dhs > 0.0)) throw InvalidRegime("scaled problem A needs N_DHS > 0");
  if (!(n0 > 0.0) || !(h_p > 0.0)) throw InvalidRegime("scaled problem A needs N0, H_p > 0");
  PredictionResult r;
  r.method = Method::scaled_A;
  r.theta_B0 = theta_B0;
  r.regime = regime_for(n_dhs);
  if (n_dhs * delta_f > 0.5) r.warnings.emplace_back("series_step_invalid");
  const double a_b0 = theta_B0 * h_p / (n0 * delta_f);
  r.diagnostics["A_B0_scaled"] = a_b0;
  if (a_b0 < 1.0) {
    r.warnings.emplace_back("nonpositive_log");
    return r;
  }
  if (a_b0 == 1.0) r.warnings.emplace_back("onset_at_t0");
  r.diagnostics["Fo_e_log"] = std::log(a_b0) / (n_dhs * n_dhs);
  r.Fo_e = (a_b0 - 1.0) / (n_dhs * n_dhs);
  r.t_B0 = *r.Fo_e * t0;
  return r;
}

PredictionResult scaled_problem_A(const Scenario& scenario, const DimensionlessGroups& groups) {
  const double theta = require_theta(scenario);
  auto r = scaled_problem_a(theta, groups.h_p, groups.n0, groups.n_dhs, groups.delta_f, groups.t0);
  if (r.t_B0 && *r.t_B0 > 0.0) r.U_T = scenario.y0 / *r.t_B0;
  return r;
}

// ---------------------------------------------------------------------------

PredictionResult conduction_time(double tau0, double n_dhs) {
  if (!(n_dhs > 1.0)) {
    throw InvalidRegime("conduction estimate requires N_DHS > 1 (got " + std::to_string(n_dhs) +
                        ")");
  }
  if (!(tau0 > 0.0)) throw DomainError("tau0 must be positive");
  PredictionResult r;
  r.method = Method::conduction;
  r.regime = Regime::thick_layer;
  r.t_B0 = tau0 * (1.0 - 1.0 / n_dhs);
  // y0 = V_a tau0, so y0/t_B0 = V_a N/(N - 1).
  r.diagnostics["U_T_over_V_a"] = n_dhs / (n_dhs - 1.0);
  r.diagnostics["tau0"] = tau0;
  return r;
}

PredictionResult conduction_t_B0(const Scenario& scenario, const DimensionlessGroups& groups,
                                 const CharacteristicScales& scales) {
  auto r = conduction_time(scales.tau0, groups.n_dhs);
  set_time(r, *r.t_B0, scales.t0, scenario.y0);
  if (scenario.theta_B0) r.theta_B0 = scenario.theta_B0;
  const auto report = classify_regime(scenario, groups);
  r.regime = report.classification;
  if (report.classification != Regime::thick_layer) {
    r.warnings.emplace_back("below_thick_band_edge");
  }
  return r;
}

PredictionResult radiation_time(double t0, double bu, double y0, RadiationPrefactor mode,
                                double theta_B0, double residual_fraction,
                                std::optional<double> n_dhs) {
  if (!(bu > 0.0)) throw DomainError("Bu must be positive");
  if (!(t0 > 0.0)) throw DomainError("t0 must be positive");
  PredictionResult r;
  r.regime = Regime::thin_layer;
  double prefactor = 1.0;
  if (mode == RadiationPrefactor::exact_084) {
    if (!(residual_fraction > 0.0)) throw DomainError("residual fraction must be positive");
    prefactor = theta_B0 / residual_fraction;
    r.method = Method::radiation_exact;
    r.theta_B0 = theta_B0;
  } else {
    r.method = Method::radiation_unit_prefactor;
  }
  r.diagnostics["prefactor"] = prefactor;
  r.diagnostics["Bu"] = bu;
  // The closed form as typeset for Koseki's velocity; annotation only.
  r.diagnostics["U_T_printed_annotation"] = 1.2 * bu * bu * y0 / t0;
  set_time(r, prefactor * t0 / bu, t0, y0);
  if (n_dhs) {
    if (*n_dhs >= 1.0) r.warnings.emplace_back("radiation_outside_thin_regime");
    if (*n_dhs >= bu) r.warnings.emplace_back("n_dhs_not_below_bu");
  }
  return r;
}

PredictionResult radiation_t_B0(const Scenario& scenario, const DimensionlessGroups& groups,
                                const CharacteristicScales& scales, RadiationPrefactor mode) {
  if (!groups.bu) throw MissingInput("radiation estimate needs the absorption coefficient mu");
  return radiation_time(scales.t0, *groups.bu, scenario.y0, mode,
                        scenario.theta_B0.value_or(kThetaGaro), kResidualFraction, groups.n_dhs);
}

// ---------------------------------------------------------------------------

AutoPrediction predict_auto(const Scenario& scenario, RegimeBand band) {
  const auto groups = dimensionless_groups(scenario);
  const auto scales = characteristic_scales(scenario);
  AutoPrediction out;
  out.regime = classify_regime(scenario, groups, band);

  std::optional<PredictionResult> conduction;
  std::optional<PredictionResult> radiation;
  try {
    conduction = conduction_t_B0(scenario, groups, scales);
  } catch (const RegimeError& e) {
    out.warnings.emplace_back(std::string("conduction: ") + e.what());
  }
  try {
    radiation = radiation_t_B0(scenario, groups, scales, RadiationPrefactor::unity);
  } catch (const Error& e) {
    out.warnings.emplace_back(std::string("radiation: ") + e.what());
  }

  const auto tag = [&](PredictionResult& r) { r.regime = out.regime.classification; };
  const auto pick = [&](std::optional<PredictionResult>& first,
                        std::optional<PredictionResult>& second) {
    if (first) {
      out.primary = *first;
      if (second) out.alternates.push_back(*second);
    } else if (second) {
      out.primary = *second;
      out.warnings.emplace_back("preferred_estimate_unavailable");
    } else {
      throw InvalidRegime("no closed-form estimate applies to this scenario");
    }
  };

  switch (out.regime.classification) {
    case Regime::thick_layer:
      pick(conduction, radiation);
      out.alternates.clear();
      break;
    case Regime::thin_layer:
      pick(radiation, conduction);
      out.alternates.clear();
      break;
    case Regime::transition:
      out.warnings.emplace_back("transition_band");
      if (groups.n_dhs > 1.0) {
        pick(conduction, radiation);
      } else {
        pick(radiation, conduction);
      }
      break;
  }
  tag(out.primary);
  for (auto& alt : out.alternates) tag(alt);

  if (scenario.theta_B0) {
    try {
      out.problem_A = predict_problem_A(scenario, groups);
    } catch (const Error& e) {
      out.warnings.emplace_back(std::string("problem_A: ") + e.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

double scaling_chain_time(const Scenario& scenario) {
  const auto groups = dimensionless_groups(scenario);
  const double V_a = regression_velocity(scenario);
  return scenario.fuel.a_F / (V_a * V_a) * groups.h_p;
}

KosekiWave koseki_velocity(const PredictionResult& prediction, const Scenario& scenario) {
  if (!prediction.t_B0) throw MissingInput("Koseki velocity needs t_B0");
  if (!(*prediction.t_B0 > 0.0)) throw DomainError("Koseki velocity needs t_B0 > 0");
  KosekiWave w;
  w.U_T = scenario.y0 / *prediction.t_B0;
  const double V_a = regression_velocity(scenario);
  const double n_dhs = scenario.y0 * V_a / scenario.fuel.a_F;
  if (n_dhs > 1.0) w.conduction_form = V_a * n_dhs / (n_dhs - 1.0);
  if (scenario.fuel.rho_F && scenario.fuel.H_v && scenario.fuel.C_pF) {
    w.scaling_chain_time = scaling_chain_time(scenario);
    w.note = "t_B0 ~ (a_F/V_a^2) F/(H_v m_dot); with F ~ D^(1/2) this gives t_B0 ~ D^(1/2)";
  } else {
    w.note = "scaling chain unavailable: fuel lacks rho_F, C_pF or H_v";
  }
  return w;
}

}  // namespace boilover
