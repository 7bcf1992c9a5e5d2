#pragma once

// Fuel / scenario data model, surface flux bookkeeping and the dimensionless
// groups shared by every closed-form solution and predictor.
//
// Conventions (SI throughout, temperatures in kelvin):
//   y        depth below the burning surface, positive downward
//   V_a      surface regression velocity, positive when the layer thins
//   Phi      net flux conducted into the liquid, Phi = F - rho_F*H_v*V_a
//   Theta    (T - T_inf) / (T_s - T_inf)

#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace boilover {

struct FuelProperties {
  std::string name;
  double a_F{0.0};  ///< thermal diffusivity [m^2/s]
  double T_s{0.0};  ///< surface (vaporization) temperature [K]
  std::optional<double> lambda_F;  ///< conductivity [W/(m K)]
  std::optional<double> rho_F;     ///< density [kg/m^3]
  std::optional<double> C_pF;      ///< specific heat [J/(kg K)]
  std::optional<double> H_v;       ///< latent heat of vaporization [J/kg]
  std::optional<double> mu;        ///< radiation absorption coefficient [1/m]

  // Accessors throw MissingInput when the property is absent. Conductivity
  // falls back to a_F*rho_F*C_pF when not given explicitly.
  double conductivity() const;
  double density() const;
  double specific_heat() const;
  double latent_heat() const;
  double absorption() const;

  /// Throws ValidationError on non-positive fields or when the supplied
  /// a_F, lambda_F, rho_F, C_pF disagree by more than 5%.
  void validate() const;
};

struct FlameEnvironment {
  double T_f{1100.0};     ///< flame temperature [K]
  double T_inf_f{293.0};  ///< fire-environment air temperature [K]
  double rho_inf{1.2};    ///< air density [kg/m^3]
  double C_p{1005.0};     ///< flame-gas specific heat [J/(kg K)]
  double K{1.0};          ///< extinction coefficient [1/m]
  double g{9.81};         ///< gravitational acceleration [m/s^2]

  void validate() const;
};

struct Scenario {
  FuelProperties fuel;
  double D{0.0};       ///< pool diameter [m]
  double y0{0.0};      ///< initial fuel layer depth [m]
  double T_inf{293.0}; ///< initial layer temperature [K]
  std::optional<double> V_a;    ///< regression velocity [m/s]
  std::optional<double> m_dot;  ///< mass burning rate [kg/(m^2 s)]
  double F{0.0};                ///< net surface heat flux [W/m^2]
  std::optional<double> theta_B0;  ///< boilover-onset temperature (-)
  std::optional<double> y_F;       ///< residual fuel depth [m]

  double residual_depth() const { return y_F.value_or(y0); }
  double delta_T() const { return fuel.T_s - T_inf; }

  void validate() const;
};

struct FluxBalance {
  double F{0.0};       ///< surface flux [W/m^2]
  double q_vap{0.0};   ///< vaporization sink rho_F*H_v*V_a [W/m^2]
  double phi{0.0};     ///< net flux into the liquid F - q_vap [W/m^2]
  double q_c{0.0};     ///< conducted flux at the surface [W/m^2]
  bool deficit{false}; ///< phi <= 0: the flux cannot heat the layer
};

struct DimensionlessGroups {
  double n_dhs{0.0};  ///< y0*V_a/a_F
  double ste{0.0};    ///< C_pF*(T_s - T_inf)/H_v
  std::optional<double> bu;  ///< mu*y0, absent when mu is unknown
  double n0{0.0};     ///< F*y0/(lambda_F*(T_s - T_inf))
  double b_sa{0.0};   ///< alias of n0
  double h_p{0.0};    ///< F/(rho_F*H_v*V_a)
  double b_f{0.0};    ///< 1 - F/Phi
  double n_p{0.0};    ///< n0/n_dhs
  /// Stefan-condition pulse magnitude Phi*a_F/(lambda_F*(T_s - T_inf)*V_a).
  /// Equals n_p*Phi/F; this is the amplitude that honours -lambda dT/dy = Phi.
  double pulse_amplitude{0.0};
  double delta_f{1.0};  ///< y_F/y0
  double t0{0.0};       ///< y0^2/a_F, the Fourier time scale

  double fourier(double t) const { return t / t0; }

  /// 1 - 1/H_p, the approximate chain printed alongside the exact 1 - F/Phi.
  double b_f_approx() const { return 1.0 - 1.0 / h_p; }
};

struct CharacteristicScales {
  double a_F{0.0};
  double V_a{0.0};
  double t0{0.0};    ///< y0^2/a_F [s]
  double tau0{0.0};  ///< y0/V_a, complete-burn time [s]
  double L0{0.0};    ///< lambda_F*(T_s - T_inf)/F [m]
  double U0{0.0};    ///< y0/t0 [m/s]
  double y_p0{0.0};  ///< a_F/V_a, e-folding heat penetration depth [m]
  double tau_rad{0.0};  ///< L0^2/a_F, radiation-kinetics time scale [s]

  double t0_h(double h) const { return h * h / a_F; }
};

enum class FeedbackForm {
  gravity_repaired,  ///< sqrt(g*T_inf_f)*(T_f - T_inf_f): W/m^2 up to sqrt(K)
  as_printed         ///< sqrt(T_inf_f*(T_f - T_inf_f)), the verbatim correlation
};

struct FlameFeedback {
  double flux{0.0};  ///< q_s [W/m^2]
  double chi{0.0};   ///< radiative feedback fraction
  std::string audit_note;
};

/// V_a from the scenario, derived from m_dot/rho_F when only the burning
/// rate is given.
double regression_velocity(const Scenario& scenario);

/// chi = [(1 - exp(-K D)) / sqrt(D)]^0.61
double feedback_fraction(double K, double D);

FlameFeedback flame_feedback(const FlameEnvironment& env, double D,
                             FeedbackForm form = FeedbackForm::gravity_repaired);

FluxBalance flux_balance(const Scenario& scenario);

DimensionlessGroups dimensionless_groups(const Scenario& scenario);

CharacteristicScales characteristic_scales(const Scenario& scenario);

// ---------------------------------------------------------------------------
// Fuel database: CSV with the exact header
//   name,a_F,lambda_F,rho_F,C_pF,H_v,mu,T_s
// Empty cells mark unknown optional properties (a_F, T_s are mandatory).

using FuelDatabase = std::map<std::string, FuelProperties>;

FuelDatabase parse_fuel_database(const std::string& text);
FuelDatabase load_fuel_database(const std::filesystem::path& path);
std::string format_fuel_database(const FuelDatabase& db);

const FuelProperties& find_fuel(const FuelDatabase& db, const std::string& name);

}  // namespace boilover
