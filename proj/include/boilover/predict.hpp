#pragma once

// Boilover-onset predictors built on the ablation solutions.

#include "boilover/corephys.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace boilover {

/// Interface temperature at onset reported for the heating-oil slicks
/// (T_B0 = 373 K from 293 K).
inline constexpr double kThetaGaro = 0.335;
/// Value derived from the crude-oil tank experiments.
inline constexpr double kThetaKoseki = 0.432;
/// Relative thickness of the residual fuel at onset in the radiation regime.
inline constexpr double kResidualFraction = 0.4;

enum class Method {
  problem_A,
  problem_B,
  scaled_A,
  conduction,
  radiation_exact,
  radiation_unit_prefactor,
};

enum class Regime { thin_layer, thick_layer, transition };

enum class RadiationPrefactor {
  exact_084,  ///< (theta_B0 / residual fraction) = 0.335/0.4 ~ 0.84
  unity       ///< prefactor set to one by convention
};

std::string_view to_string(Method m);
std::string_view to_string(Regime r);
Method parse_method(std::string_view text);

struct PredictionResult {
  Method method{Method::conduction};
  std::optional<double> t_B0;      ///< [s]
  std::optional<double> Fo_e;      ///< t_B0 a_F / y0^2
  std::optional<double> theta_B0;  ///< interface temperature at onset (-)
  Regime regime{Regime::transition};
  std::optional<double> U_T;  ///< Koseki wave velocity y0/t_B0 [m/s]
  std::vector<std::string> warnings;
  /// Intermediate quantities (A_B0, B_B0, linearized forms, ...).
  std::map<std::string, double> diagnostics;

  bool has_warning(std::string_view w) const;
};

struct RegimeBand {
  double lower{0.5};  ///< fraction of y_crit below which the layer is thin
  double upper{2.5};  ///< fraction of y_crit above which the layer is thick
};

struct RegimeReport {
  double y_crit{0.0};  ///< a_F/V_a [m]
  double n_dhs{0.0};
  std::optional<double> bu;
  Regime classification{Regime::transition};
  double band_lower{0.0};  ///< [m]
  double band_upper{0.0};  ///< [m]
};

RegimeReport classify_regime(double y0, double a_F, double V_a, std::optional<double> bu = {},
                             RegimeBand band = {});
RegimeReport classify_regime(const Scenario& scenario, const DimensionlessGroups& groups,
                             RegimeBand band = {});

// -- problems A and B ----------------------------------------------------------

/// Onset time from the Stefan-condition profile evaluated at the fuel/water
/// interface: A_B0 = theta_B0 / (Y exp(-N_DHS delta_F)), Fo_e = ln(A_B0)/N_DHS^2.
/// `amplitude` is the Stefan pulse magnitude Y.
PredictionResult problem_a(double theta_B0, double amplitude, double n_dhs, double delta_f,
                           double t0);
PredictionResult predict_problem_A(const Scenario& scenario, const DimensionlessGroups& groups);

/// Interface temperature reached at a given Fo_e: theta = B_B0 exp(N_DHS^2 Fo_e).
PredictionResult problem_b(double Fo_e, double amplitude, double n_dhs, double delta_f,
                           double t0);
PredictionResult predict_problem_B(const Scenario& scenario, const DimensionlessGroups& groups,
                                   double Fo_e);

/// Series-scaled problem A: A_B0 ~ theta_B0 H_p/(N0 delta_F), ln x ~ x - 1.
PredictionResult scaled_problem_A(const Scenario& scenario, const DimensionlessGroups& groups);
PredictionResult scaled_problem_a(double theta_B0, double h_p, double n0, double n_dhs,
                                  double delta_f, double t0);

// -- simplified regimes ---------------------------------------------------------

/// t_B0 = tau0 (1 - 1/N_DHS). Throws InvalidRegime for N_DHS <= 1.
PredictionResult conduction_time(double tau0, double n_dhs);
PredictionResult conduction_t_B0(const Scenario& scenario, const DimensionlessGroups& groups,
                                 const CharacteristicScales& scales);

/// t_B0 = prefactor * t0 / Bu.
PredictionResult radiation_time(double t0, double bu, double y0, RadiationPrefactor mode,
                                double theta_B0 = kThetaGaro,
                                double residual_fraction = kResidualFraction,
                                std::optional<double> n_dhs = {});
PredictionResult radiation_t_B0(const Scenario& scenario, const DimensionlessGroups& groups,
                                const CharacteristicScales& scales, RadiationPrefactor mode);

struct AutoPrediction {
  RegimeReport regime;
  PredictionResult primary;
  std::vector<PredictionResult> alternates;
  std::optional<PredictionResult> problem_A;
  std::vector<std::string> warnings;
};

/// Regime-dispatched estimate: conduction for thick layers, radiation (unit
/// prefactor) for thin ones, both inside the transition band.
AutoPrediction predict_auto(const Scenario& scenario, RegimeBand band = {});

// -- Koseki heat wave ------------------------------------------------------------

struct KosekiWave {
  double U_T{0.0};  ///< y0/t_B0 [m/s]
  std::optional<double> conduction_form;  ///< V_a N_DHS/(N_DHS - 1) when N_DHS > 1
  /// (a_F/V_a^2) H_p, the chain behind the t_B0 ~ D^(1/2) argument [s].
  double scaling_chain_time{0.0};
  std::string note;
};

KosekiWave koseki_velocity(const PredictionResult& prediction, const Scenario& scenario);

/// (a_F/V_a^2) F/(H_v m_dot).
double scaling_chain_time(const Scenario& scenario);

}  // namespace boilover
