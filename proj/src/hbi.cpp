#include "boilover/hbi.hpp"

#include "boilover/csv.hpp"
#include "boilover/errors.hpp"

#include <cmath>

namespace boilover {

namespace {

void require_nonnegative_time(double t) {
  if (!(t >= 0.0)) throw DomainError("time must be non-negative");
}

}  // namespace

double hbi_delta(double a_F, double V_a, double B_F, double t) {
  require_nonnegative_time(t);
  if (!(B_F > 0.0)) {
    throw InvalidRegime("B_F <= 0: the net flux cannot sustain a penetration front");
  }
  const double y_p0 = a_F / V_a;
  // -expm1 keeps the small-time limit sqrt(6 a_F B_F t) free of cancellation.
  const double saturation = -std::expm1(-3.0 * V_a * V_a / a_F * t);
  return std::sqrt(2.0 * y_p0 * y_p0 * B_F * saturation);
}

double hbi_delta(const DimensionlessGroups& groups, const CharacteristicScales& scales, double t) {
  return hbi_delta(scales.a_F, scales.V_a, groups.b_f, t);
}

double hbi_delta_saturation(double a_F, double V_a, double B_F) {
  if (!(B_F > 0.0)) throw InvalidRegime("B_F <= 0");
  return std::sqrt(2.0 * B_F) * a_F / V_a;
}

double hbi_delta_verbatim(double a_F, double V_a, double B_F, double t) {
  require_nonnegative_time(t);
  if (!(B_F > 0.0)) throw InvalidRegime("B_F <= 0");
  return std::sqrt(2.0 * a_F * B_F / V_a * -std::expm1(-3.0 * V_a * t));
}

double hbi_support_width(double a_F, double B_F, double t) {
  require_nonnegative_time(t);
  if (!(B_F > 0.0)) throw InvalidRegime("B_F <= 0");
  return std::sqrt(6.0 * a_F * t) * std::sqrt(B_F);
}

// ---------------------------------------------------------------------------

double QuadraticProfile::temperature(double y) const {
  return beta0 + beta1 * y + beta2 * y * y;
}

double QuadraticProfile::gradient(double y) const { return beta1 + 2.0 * beta2 * y; }

double QuadraticProfile::theta(double y) const {
  if (y < 0.0 || y > delta) {
    throw DomainError("quadratic profile is defined on [0, delta] only");
  }
  // Factored form, so theta(delta) is exactly zero.
  const double s = 1.0 - y / delta;
  return phi * delta / (2.0 * lambda_F * delta_T) * s * s;
}

QuadraticProfile quadratic_profile(double phi, double lambda_F, double T_inf, double T_s,
                                   double delta) {
  if (!(delta > 0.0)) throw DomainError("penetration depth must be positive");
  if (!(lambda_F > 0.0)) throw DomainError("conductivity must be positive");
  QuadraticProfile p;
  p.delta = delta;
  p.phi = phi;
  p.lambda_F = lambda_F;
  p.T_inf = T_inf;
  p.delta_T = T_s - T_inf;
  p.beta0 = T_inf + phi * delta / (2.0 * lambda_F);
  p.beta1 = -phi / lambda_F;
  p.beta2 = phi / (2.0 * lambda_F * delta);
  return p;
}

QuadraticProfile hbi_quadratic_profile(const Scenario& scenario, double t) {
  if (!(t > 0.0)) throw DomainError("the quadratic profile needs t > 0");
  const auto groups = dimensionless_groups(scenario);
  const auto scales = characteristic_scales(scenario);
  const auto flux = flux_balance(scenario);
  const double delta = hbi_delta(groups, scales, t);
  return quadratic_profile(flux.phi, scenario.fuel.conductivity(), scenario.T_inf,
                           scenario.fuel.T_s, delta);
}

// ---------------------------------------------------------------------------

InternalGenerationDepth goodman_internal_generation_delta(const FuelProperties& fuel, double F,
                                                          double t, double h, double B_F) {
  require_nonnegative_time(t);
  if (!(F > 0.0)) throw DomainError("surface flux must be positive");
  if (!(h > 0.0)) throw DomainError("layer depth must be positive");
  if (!(B_F > 0.0)) throw InvalidRegime("B_F <= 0");
  // Constant flux, Q = F t, with int_0^t Q^2 dt taken as Q^2 t.
  const double t0_h = h * h / fuel.a_F;
  InternalGenerationDepth out;
  out.delta = std::sqrt(24.0 * fuel.a_F * t);
  out.t_h = t0_h / 24.0;
  out.t_h_without_source = t0_h / (6.0 * B_F);
  return out;
}

// ---------------------------------------------------------------------------

std::string_view to_string(AblationVariant v) {
  return v == AblationVariant::linear_bc ? "linear_bc" : "stefan_bc";
}

AblationVariant parse_ablation_variant(std::string_view text) {
  if (text == "linear_bc" || text == "linear") return AblationVariant::linear_bc;
  if (text == "stefan_bc" || text == "stefan") return AblationVariant::stefan_bc;
  throw InputError("unknown ablation variant '" + std::string(text) + "'");
}

double AblationProfile::theta(double y, double t) const {
  return amplitude * initial_factor * std::exp(-decay * y + growth * t);
}

AblationProfile make_ablation_profile(AblationVariant variant, const Scenario& scenario) {
  scenario.validate();
  const double V_a = regression_velocity(scenario);
  const double a_F = scenario.fuel.a_F;
  AblationProfile p;
  p.variant = variant;
  p.decay = V_a / a_F;
  p.growth = V_a * V_a / a_F;
  p.initial_factor = 1.0;
  if (variant == AblationVariant::stefan_bc) {
    p.amplitude = dimensionless_groups(scenario).pulse_amplitude;
  }
  return p;
}

namespace {

ProfileSample flag(double theta, const Scenario& scenario, double y, double t) {
  const double layer = scenario.y0 - regression_velocity(scenario) * t;
  return ProfileSample{theta, theta > 1.0, y > layer};
}

void require_depth_time(double y, double t) {
  if (!(y >= 0.0)) throw DomainError("depth must be non-negative");
  require_nonnegative_time(t);
}

}  // namespace

ProfileSample ablation_profile(AblationVariant variant, const Scenario& scenario, double y,
                               double t) {
  require_depth_time(y, t);
  const auto p = make_ablation_profile(variant, scenario);
  return flag(p.theta(y, t), scenario, y, t);
}

ProfileSample wave_pulse(AblationVariant variant, const Scenario& scenario, double y, double t) {
  require_depth_time(y, t);
  const auto p = make_ablation_profile(variant, scenario);
  const double V_a = regression_velocity(scenario);
  const double theta = p.amplitude * std::exp(-(V_a / scenario.fuel.a_F) * (y - V_a * t));
  return flag(theta, scenario, y, t);
}

// ---------------------------------------------------------------------------

PenetrationDepth penetration_depth(const DimensionlessGroups& groups,
                                   const CharacteristicScales& scales) {
  PenetrationDepth out;
  out.a_F = scales.a_F;
  out.V_a = scales.V_a;
  out.B_F = groups.b_f;
  out.y_p0 = scales.y_p0;
  return out;
}

double penetration_depth_nonlinear(double y_p0, double pulse_amplitude) {
  if (!(y_p0 > 0.0)) throw DomainError("heat penetration depth must be positive");
  if (!(pulse_amplitude > 0.0)) {
    throw InvalidRegime("pulse magnitude <= 0: no attenuated pulse exists");
  }
  return y_p0 * (1.0 + std::log(pulse_amplitude));
}

double penetration_depth_nonlinear(const DimensionlessGroups& groups,
                                   const CharacteristicScales& scales) {
  return penetration_depth_nonlinear(scales.y_p0, groups.pulse_amplitude);
}

// ---------------------------------------------------------------------------

std::string profile_csv(const std::vector<ProfileRow>& rows) {
  std::string out = "y_m,t_s,theta,variant,saturated\n";
  for (const auto& r : rows) {
    out += csv::join({csv::format_number(r.y), csv::format_number(r.t),
                      csv::format_number(r.theta), r.variant, r.saturated ? "1" : "0"});
    out.push_back('\n');
  }
  return out;
}

}  // namespace boilover
