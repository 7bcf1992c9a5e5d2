#pragma once

// Finite-volume reference solver for the heat equation in the frame attached
// to the regressing surface:
//
//   dTheta/dt = a_F d2Theta/dy2 + V_a dTheta/dy + S(y),   y in [0, L]
//
// The liquid moves toward the surface at V_a, so the steady Dirichlet profile
// is exp(-V_a y / a_F). Nodes sit at y_i = i L / n_cells with half cells at
// both ends; the update is a theta scheme on the conservative flux form.

#include "boilover/corephys.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace boilover {

enum class FDScheme { explicit_euler, implicit_theta };
enum class FDBoundary { flux_linear, flux_stefan, dirichlet_Ts };
enum class FDAdvection {
  hybrid,  ///< central faces while the cell Peclet number is <= 2, upwind beyond
  upwind
};
enum class FDBottom {
  far_field,  ///< Theta = 0 at the truncation depth
  adiabatic   ///< zero gradient; liquid enters at the local temperature
};

std::string_view to_string(FDScheme s);
std::string_view to_string(FDBoundary b);
std::string_view to_string(FDAdvection a);
std::string_view to_string(FDBottom b);
FDScheme parse_fd_scheme(std::string_view text);
FDBoundary parse_fd_boundary(std::string_view text);
FDAdvection parse_fd_advection(std::string_view text);
FDBottom parse_fd_bottom(std::string_view text);

struct FDConfig {
  std::size_t n_cells{256};
  /// Default max(y0, 8 a_F/V_a); with V_a = 0, max(y0, 8 sqrt(a_F t_end)).
  /// Adiabatic-bottom runs default to y0.
  std::optional<double> domain_depth;
  double dt_safety{0.4};
  double t_end{0.0};
  /// Time step. Explicit runs default to the stability bound scaled by
  /// dt_safety; implicit runs to min(t_end/100, 10 dy^2/a_F).
  std::optional<double> dt;
  FDScheme scheme{FDScheme::implicit_theta};
  double theta{0.5};
  FDBoundary bc_mode{FDBoundary::dirichlet_Ts};
  bool source_on{false};
  FDAdvection advection{FDAdvection::hybrid};
  FDBottom bottom{FDBottom::far_field};
  /// Overrides the scenario's regression velocity (0 gives pure conduction).
  std::optional<double> velocity;
  /// Upper bound on stored profiles; the first and last steps are always kept.
  std::size_t max_saved_profiles{2001};

  /// Throws ValidationError on inconsistent settings.
  void validate() const;
};

struct FDSolution {
  std::vector<double> times;               ///< [s]
  std::vector<double> grid;                ///< node depths [m]
  std::vector<std::vector<double>> theta;  ///< theta[k][i] at times[k], grid[i]
  /// Per-step |dE - dt*(boundary + source)| / scale with E = sum m_i Theta_i.
  std::vector<double> energy_audit;
  FDConfig config;
  double a_F{0.0};
  double V_a{0.0};     ///< velocity actually used
  double dt{0.0};      ///< time step actually used
  double flux_gradient{0.0};  ///< -dTheta/dy imposed at y = 0 in flux modes
  double source_scale{0.0};   ///< S(0) [1/s]
  double mu{0.0};

  /// Linear interpolation of the stored profile k at depth y.
  double theta_at(std::size_t k, double y) const;
  double max_energy_residual() const;
};

FDSolution fd_solve(const Scenario& scenario, const FDConfig& config);

struct InterfaceSample {
  double t{0.0};
  double y{0.0};  ///< probe depth y0 - V_a t
  double theta{0.0};
};

/// Interface temperature history at y_F(t) = y0 - V_a t, truncated at burn-through.
std::vector<InterfaceSample> interface_history(const FDSolution& solution,
                                               const Scenario& scenario);

struct ProbeResult {
  std::optional<double> t_star;  ///< [s]
  std::vector<std::string> warnings;
};

/// First time the interface temperature reaches theta_B0, interpolated
/// linearly between stored steps.
ProbeResult fd_probe_boilover(const FDSolution& solution, const Scenario& scenario);
/// Same probe with an explicit threshold, which may lie outside (0, 1).
ProbeResult fd_probe_boilover(const FDSolution& solution, const Scenario& scenario,
                              double theta_threshold);

struct SteadyReport {
  double successive_linf{0.0};
  /// Distance to exp(-V_a y/a_F); only for the Dirichlet no-source setup.
  std::optional<double> analytic_linf;
  bool monotone_decreasing{false};
};

SteadyReport fd_steady_check(const FDSolution& solution);

/// Solution dump with header t_s,y_m,theta.
std::string fd_solution_csv(const FDSolution& solution);
/// Configuration echo written next to every dump.
std::string fd_config_json(const FDSolution& solution, const Scenario& scenario);

/// Solves a tridiagonal system (sub-, main and super-diagonal) with
/// residual-checked iterative refinement. Throws NonConvergence when the
/// relative residual stays above `tol` after `max_iter` refinements.
std::vector<double> solve_tridiagonal(const std::vector<double>& lower,
                                      const std::vector<double>& diag,
                                      const std::vector<double>& upper,
                                      const std::vector<double>& rhs, double tol = 1e-10,
                                      int max_iter = 100);

}  // namespace boilover
