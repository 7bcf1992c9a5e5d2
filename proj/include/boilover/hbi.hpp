#pragma once

// Closed-form heat-balance-integral (HBI) and ablation solutions in the frame
// attached to the regressing surface.

#include "boilover/corephys.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace boilover {

// -- thermal penetration depth ----------------------------------------------

/// delta(t) = sqrt(2 (a_F/V_a)^2 B_F (1 - exp(-3 V_a^2 t / a_F))).
/// Solves d(delta^2)/dt = 6 a_F B_F - 3 (V_a^2/a_F) delta^2 with delta(0) = 0.
/// Throws InvalidRegime when B_F <= 0, DomainError for t < 0.
double hbi_delta(double a_F, double V_a, double B_F, double t);
double hbi_delta(const DimensionlessGroups& groups, const CharacteristicScales& scales, double t);

/// Large-time limit sqrt(2 B_F) a_F/V_a.
double hbi_delta_saturation(double a_F, double V_a, double B_F);

/// The correlation exactly as typeset, delta^2 = (2 a_F B_F / V_a)(1 - exp(-3 V_a t)).
/// Dimensionally inconsistent; kept for documentation and strict mode output only.
double hbi_delta_verbatim(double a_F, double V_a, double B_F, double t);

/// Support width Z = sqrt(6 a_F t) sqrt(B_F) of the quadratic profile.
double hbi_support_width(double a_F, double B_F, double t);

// -- quadratic HBI profile ---------------------------------------------------

// T(y) = beta0 + beta1 y + beta2 y^2 on [0, delta] with
//   T(delta) = T_inf, dT/dy(delta) = 0, -lambda_F dT/dy(0) = Phi.
struct QuadraticProfile {
  double beta0{0.0};  ///< [K]
  double beta1{0.0};  ///< [K/m]
  double beta2{0.0};  ///< [K/m^2]
  double delta{0.0};  ///< penetration depth [m]
  double phi{0.0};    ///< net conducted flux [W/m^2]
  double lambda_F{0.0};
  double T_inf{0.0};
  double delta_T{0.0};  ///< T_s - T_inf

  double temperature(double y) const;
  double gradient(double y) const;
  /// Dimensionless (T - T_inf)/(T_s - T_inf); DomainError outside [0, delta].
  double theta(double y) const;
};

QuadraticProfile quadratic_profile(double phi, double lambda_F, double T_inf, double T_s,
                                   double delta);

/// Profile at time t, with delta from hbi_delta and Phi from the flux balance.
QuadraticProfile hbi_quadratic_profile(const Scenario& scenario, double t);

// -- Goodman's internal-generation variant -------------------------------------

struct InternalGenerationDepth {
  double delta{0.0};             ///< sqrt(24 a_F t) [m]
  double t_h{0.0};               ///< time for delta to reach h: t0_h/24 [s]
  double t_h_without_source{0.0};  ///< t0_h/(6 B_F) [s]
};

/// Penetration depth for constant surface flux F with the cubic internal
/// generation profile. The flux cancels out of delta; it is accepted so the
/// call reads like the physical statement.
InternalGenerationDepth goodman_internal_generation_delta(const FuelProperties& fuel, double F,
                                                          double t, double h, double B_F);

// -- ablation (front-fixed) exponential profiles -----------------------------

enum class AblationVariant { linear_bc, stefan_bc };

std::string_view to_string(AblationVariant v);
AblationVariant parse_ablation_variant(std::string_view text);

// Theta(y, t) = amplitude * exp(-decay*y) * initial_factor * exp(growth*t)
struct AblationProfile {
  AblationVariant variant{AblationVariant::linear_bc};
  double amplitude{1.0};       ///< 1 (linear) or the Stefan pulse magnitude
  double decay{0.0};           ///< V_a/a_F [1/m]
  double growth{0.0};          ///< V_a^2/a_F [1/s]
  double initial_factor{1.0};  ///< D0 = P0 = 1

  double theta(double y, double t) const;
};

AblationProfile make_ablation_profile(AblationVariant variant, const Scenario& scenario);

struct ProfileSample {
  double theta{0.0};
  bool saturated{false};     ///< theta > 1, above the physical ceiling
  bool out_of_layer{false};  ///< y beyond the current layer y0 - V_a t
};

/// Ablation profile with the growing time factor. Values are unclipped.
ProfileSample ablation_profile(AblationVariant variant, const Scenario& scenario, double y,
                               double t);

/// Same solution written as a travelling pulse A exp(-(V_a/a_F)(y - V_a t)).
ProfileSample wave_pulse(AblationVariant variant, const Scenario& scenario, double y, double t);

// -- penetration depths --------------------------------------------------------

struct PenetrationDepth {
  double a_F{0.0};
  double V_a{0.0};
  double B_F{0.0};
  double y_p0{0.0};  ///< a_F/V_a

  double delta_hbi(double t) const { return hbi_delta(a_F, V_a, B_F, t); }
  double y_pt(double t) const { return y_p0 + V_a * t; }
  double support_width(double t) const { return hbi_support_width(a_F, B_F, t); }
};

PenetrationDepth penetration_depth(const DimensionlessGroups& groups,
                                   const CharacteristicScales& scales);

/// (a_F/V_a)(1 + ln Y) with Y the Stefan pulse magnitude.
/// Throws InvalidRegime when Y <= 0.
double penetration_depth_nonlinear(const DimensionlessGroups& groups,
                                   const CharacteristicScales& scales);
double penetration_depth_nonlinear(double y_p0, double pulse_amplitude);

// -- export -------------------------------------------------------------------

struct ProfileRow {
  double y{0.0};
  double t{0.0};
  double theta{0.0};
  std::string variant;
  bool saturated{false};
};

/// CSV with header y_m,t_s,theta,variant,saturated
std::string profile_csv(const std::vector<ProfileRow>& rows);

}  // namespace boilover
