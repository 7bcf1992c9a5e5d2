#include "boilover/fdoracle.hpp"

#include "boilover/csv.hpp"
#include "boilover/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace boilover {

std::string_view to_string(FDScheme s) {
  return s == FDScheme::explicit_euler ? "explicit" : "implicit_theta";
}

std::string_view to_string(FDBoundary b) {
  switch (b) {
    case FDBoundary::flux_linear: return "flux_linear";
    case FDBoundary::flux_stefan: return "flux_stefan";
    case FDBoundary::dirichlet_Ts: return "dirichlet_Ts";
  }
  return "unknown";
}

std::string_view to_string(FDAdvection a) { return a == FDAdvection::hybrid ? "hybrid" : "upwind"; }

std::string_view to_string(FDBottom b) {
  return b == FDBottom::far_field ? "far_field" : "adiabatic";
}

FDScheme parse_fd_scheme(std::string_view text) {
  if (text == "explicit") return FDScheme::explicit_euler;
  if (text == "implicit_theta" || text == "implicit") return FDScheme::implicit_theta;
  throw InputError("unknown scheme '" + std::string(text) + "'");
}

FDBoundary parse_fd_boundary(std::string_view text) {
  for (auto b : {FDBoundary::flux_linear, FDBoundary::flux_stefan, FDBoundary::dirichlet_Ts}) {
    if (text == to_string(b)) return b;
  }
  throw InputError("unknown boundary mode '" + std::string(text) + "'");
}

FDAdvection parse_fd_advection(std::string_view text) {
  if (text == "hybrid") return FDAdvection::hybrid;
  if (text == "upwind") return FDAdvection::upwind;
  throw InputError("unknown advection scheme '" + std::string(text) + "'");
}

FDBottom parse_fd_bottom(std::string_view text) {
  if (text == "far_field") return FDBottom::far_field;
  if (text == "adiabatic") return FDBottom::adiabatic;
  throw InputError("unknown bottom condition '" + std::string(text) + "'");
}

void FDConfig::validate() const {
  if (n_cells < 16) throw ValidationError("n_cells must be at least 16");
  if (!(dt_safety > 0.0 && dt_safety <= 1.0)) throw ValidationError("dt_safety must be in (0, 1]");
  if (!(t_end > 0.0) || !std::isfinite(t_end)) throw ValidationError("t_end must be positive");
  if (scheme == FDScheme::implicit_theta && !(theta >= 0.5 && theta <= 1.0)) {
    throw ValidationError("theta weight must be in [0.5, 1]");
  }
  if (dt && !(*dt > 0.0)) throw ValidationError("dt must be positive");
  if (domain_depth && !(*domain_depth > 0.0)) throw ValidationError("domain depth must be positive");
  if (velocity && !std::isfinite(*velocity)) throw ValidationError("velocity must be finite");
  if (max_saved_profiles < 2) throw ValidationError("max_saved_profiles must be at least 2");
}

// ---------------------------------------------------------------------------

std::vector<double> solve_tridiagonal(const std::vector<double>& lower,
                                      const std::vector<double>& diag,
                                      const std::vector<double>& upper,
                                      const std::vector<double>& rhs, double tol, int max_iter) {
  const std::size_t n = diag.size();
  if (lower.size() != n || upper.size() != n || rhs.size() != n) {
    throw std::invalid_argument("tridiagonal bands must have equal length");
  }
  if (n == 0) return {};

  std::vector<double> c(n), inv(n);
  const auto thomas = [&](const std::vector<double>& d) {
    std::vector<double> x(n), dd(n);
    double denom = diag[0];
    inv[0] = 1.0 / denom;
    c[0] = upper[0] * inv[0];
    dd[0] = d[0] * inv[0];
    for (std::size_t i = 1; i < n; ++i) {
      denom = diag[i] - lower[i] * c[i - 1];
      inv[i] = 1.0 / denom;
      c[i] = upper[i] * inv[i];
      dd[i] = (d[i] - lower[i] * dd[i - 1]) * inv[i];
    }
    x[n - 1] = dd[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = dd[i] - c[i] * x[i + 1];
    return x;
  };
  const auto residual = [&](const std::vector<double>& x) {
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) {
      double ax = diag[i] * x[i];
      if (i > 0) ax += lower[i] * x[i - 1];
      if (i + 1 < n) ax += upper[i] * x[i + 1];
      r[i] = rhs[i] - ax;
    }
    return r;
  };
  const auto norm = [](const std::vector<double>& v) {
    double m = 0.0;
    for (double e : v) {
      if (!std::isfinite(e)) return std::numeric_limits<double>::infinity();
      m = std::max(m, std::abs(e));
    }
    return m;
  };

  const double scale = std::max(norm(rhs), std::numeric_limits<double>::min());
  auto x = thomas(rhs);
  for (int it = 0; it <= max_iter; ++it) {
    const auto r = residual(x);
    const double rel = norm(r) / scale;
    if (!std::isfinite(rel)) throw NonConvergence("tridiagonal solve produced non-finite values");
    if (rel <= tol) return x;
    if (it == max_iter) break;
    const auto dx = thomas(r);
    for (std::size_t i = 0; i < n; ++i) x[i] += dx[i];
  }
  throw NonConvergence("tridiagonal residual above tolerance after refinement");
}

// ---------------------------------------------------------------------------

namespace {

struct Assembly {
  // Row i of the semi-discrete system m_i dTheta_i/dt = sum_j A_ij Theta_j + c_i.
  std::vector<double> lower, diag, upper, c, mass;
  double cL{0.0}, cR{0.0};  // interior face flux J = cL Theta_left + cR Theta_right
  double w{0.0};
  double a_g{0.0};
  std::vector<double> source_mass;  // m_i S_i
};

}  // namespace

double FDSolution::theta_at(std::size_t k, double y) const {
  const auto& profile = theta.at(k);
  if (y <= grid.front()) return profile.front();
  if (y >= grid.back()) return profile.back();
  const double h = grid[1] - grid[0];
  auto i = static_cast<std::size_t>(y / h);
  i = std::min(i, grid.size() - 2);
  const double s = (y - grid[i]) / (grid[i + 1] - grid[i]);
  return profile[i] + s * (profile[i + 1] - profile[i]);
}

double FDSolution::max_energy_residual() const {
  double m = 0.0;
  for (double r : energy_audit) m = std::max(m, r);
  return m;
}

FDSolution fd_solve(const Scenario& scenario, const FDConfig& config) {
  scenario.validate();
  config.validate();

  const double a = scenario.fuel.a_F;
  const double V = config.velocity.value_or(regression_velocity(scenario));
  const double dT = scenario.delta_T();

  double L = 0.0;
  if (config.domain_depth) {
    L = *config.domain_depth;
  } else if (config.bottom == FDBottom::adiabatic) {
    L = scenario.y0;
  } else if (V != 0.0) {
    L = std::max(scenario.y0, 8.0 * a / std::abs(V));
  } else {
    L = std::max(scenario.y0, 8.0 * std::sqrt(a * config.t_end));
  }

  const std::size_t N = config.n_cells;
  const double h = L / static_cast<double>(N);
  const bool dirichlet = config.bc_mode == FDBoundary::dirichlet_Ts;
  const bool far = config.bottom == FDBottom::far_field;

  FDSolution sol;
  sol.config = config;
  sol.a_F = a;
  sol.V_a = V;
  sol.grid.resize(N + 1);
  for (std::size_t i = 0; i <= N; ++i) sol.grid[i] = h * static_cast<double>(i);

  // Face weights.
  const double w = -V;
  double alpha = 0.5;
  const bool central = config.advection == FDAdvection::hybrid && std::abs(w) * h / a <= 2.0;
  if (!central) alpha = w < 0.0 ? 0.0 : 1.0;

  Assembly as;
  as.w = w;
  as.cL = w * alpha + a / h;
  as.cR = w * (1.0 - alpha) - a / h;
  as.lower.assign(N + 1, 0.0);
  as.diag.assign(N + 1, 0.0);
  as.upper.assign(N + 1, 0.0);
  as.c.assign(N + 1, 0.0);
  as.mass.assign(N + 1, h);
  as.mass.front() = as.mass.back() = 0.5 * h;
  as.source_mass.assign(N + 1, 0.0);

  for (std::size_t j = 0; j < N; ++j) {
    as.diag[j] -= as.cL;
    as.upper[j] -= as.cR;
    as.lower[j + 1] += as.cL;
    as.diag[j + 1] += as.cR;
  }
  if (!dirichlet) {
    const double lambda = scenario.fuel.conductivity();
    double phi = scenario.F;
    if (config.bc_mode == FDBoundary::flux_stefan) {
      phi = scenario.F - scenario.fuel.density() * scenario.fuel.latent_heat() * V;
    }
    sol.flux_gradient = phi / (lambda * dT);
    as.a_g = a * sol.flux_gradient;
    as.diag[0] += w;
    as.c[0] += as.a_g;
  }
  if (!far) as.diag[N] -= w;
  if (config.source_on) {
    sol.mu = scenario.fuel.absorption();
    sol.source_scale = sol.mu * scenario.F /
                       (scenario.fuel.density() * scenario.fuel.specific_heat() * dT);
    for (std::size_t i = 0; i <= N; ++i) {
      as.source_mass[i] = as.mass[i] * sol.source_scale * std::exp(-sol.mu * sol.grid[i]);
      as.c[i] += as.source_mass[i];
    }
  }

  std::vector<double> u(N + 1, 0.0);
  if (dirichlet) u[0] = 1.0;
  if (far) u[N] = 0.0;
  const std::size_t lo = dirichlet ? 1 : 0;
  const std::size_t hi = far ? N - 1 : N;
  const std::size_t n = hi - lo + 1;

  // Time step.
  const double dt_bound = h * h / (2.0 * a + std::abs(w) * h);
  const bool explicit_mode = config.scheme == FDScheme::explicit_euler;
  const double th = explicit_mode ? 0.0 : config.theta;
  double dt = 0.0;
  if (config.dt) {
    dt = *config.dt;
    if (explicit_mode && dt > dt_bound) {
      throw Instability("explicit time step exceeds the stability bound " +
                        csv::format_number(dt_bound) + " s");
    }
  } else if (explicit_mode) {
    dt = config.dt_safety * dt_bound;
  } else {
    dt = std::min(config.t_end / 100.0, 10.0 * h * h / a);
  }
  const auto n_steps = static_cast<std::size_t>(std::ceil(config.t_end / dt - 1e-9));
  dt = config.t_end / static_cast<double>(n_steps);
  sol.dt = dt;
  const std::size_t save_every =
      std::max<std::size_t>(1, (n_steps + config.max_saved_profiles - 2) /
                                   (config.max_saved_profiles - 1));

  // A Theta + c restricted to the unknown rows, fixed nodes folded into c.
  const auto apply = [&](const std::vector<double>& v, std::vector<double>& out) {
    for (std::size_t i = lo; i <= hi; ++i) {
      double s = as.diag[i] * v[i] + as.c[i];
      if (i > 0) s += as.lower[i] * v[i - 1];
      if (i < N) s += as.upper[i] * v[i + 1];
      out[i] = s;
    }
  };
  // Net boundary inflow plus integrated source for the unknown block.
  const auto boundary_and_source = [&](const std::vector<double>& v) {
    double top = dirichlet ? as.cL * v[0] + as.cR * v[1] : w * v[0] + as.a_g;
    double bottom = far ? as.cL * v[N - 1] + as.cR * v[N] : w * v[N];
    double src = 0.0;
    for (std::size_t i = lo; i <= hi; ++i) src += as.source_mass[i];
    return top - bottom + src;
  };
  const auto energy = [&](const std::vector<double>& v) {
    double e = 0.0;
    for (std::size_t i = lo; i <= hi; ++i) e += as.mass[i] * v[i];
    return e;
  };

  // Left-hand matrix for the implicit update.
  std::vector<double> L_lo(n), L_di(n), L_up(n), rhs(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = lo + k;
    L_di[k] = as.mass[i] / dt - th * as.diag[i];
    L_lo[k] = k > 0 ? -th * as.lower[i] : 0.0;
    L_up[k] = k + 1 < n ? -th * as.upper[i] : 0.0;
  }

  sol.times.push_back(0.0);
  sol.theta.push_back(u);
  std::vector<double> Au(N + 1, 0.0), Au_new(N + 1, 0.0), next = u;
  double B_old = boundary_and_source(u);
  for (std::size_t step = 1; step <= n_steps; ++step) {
    apply(u, Au);
    if (explicit_mode) {
      for (std::size_t i = lo; i <= hi; ++i) next[i] = u[i] + dt * Au[i] / as.mass[i];
    } else {
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t i = lo + k;
        double r = as.mass[i] / dt * u[i] + (1.0 - th) * Au[i] + th * as.c[i];
        // Contributions of fixed boundary nodes at the new level.
        if (k == 0 && i > 0) r += th * as.lower[i] * next[i - 1];
        if (k + 1 == n && i < N) r += th * as.upper[i] * next[i + 1];
        rhs[k] = r;
      }
      const auto x = solve_tridiagonal(L_lo, L_di, L_up, rhs);
      for (std::size_t k = 0; k < n; ++k) next[lo + k] = x[k];
    }
    for (std::size_t i = lo; i <= hi; ++i) {
      if (!std::isfinite(next[i])) throw Instability("non-finite temperature in FD solve");
    }

    const double B_new = boundary_and_source(next);
    const double dE = energy(next) - energy(u);
    const double expected = dt * (th * B_new + (1.0 - th) * B_old);
    const double scale = std::max({std::abs(dE), dt * std::abs(B_new), dt * std::abs(B_old),
                                   std::numeric_limits<double>::min()});
    sol.energy_audit.push_back(std::abs(dE - expected) / scale);
    B_old = B_new;

    u.swap(next);
    next = u;
    if (step % save_every == 0 || step == n_steps) {
      sol.times.push_back(dt * static_cast<double>(step));
      sol.theta.push_back(u);
    }
  }
  sol.times.back() = config.t_end;
  return sol;
}

// ---------------------------------------------------------------------------

std::vector<InterfaceSample> interface_history(const FDSolution& solution,
                                               const Scenario& scenario) {
  std::vector<InterfaceSample> out;
  for (std::size_t k = 0; k < solution.times.size(); ++k) {
    const double t = solution.times[k];
    const double y = scenario.y0 - solution.V_a * t;
    if (y < 0.0) break;
    out.push_back({t, y, solution.theta_at(k, y)});
  }
  return out;
}

namespace {

ProbeResult probe(const FDSolution& solution, const Scenario& scenario, double threshold) {
  ProbeResult r;
  const auto history = interface_history(solution, scenario);
  for (std::size_t k = 0; k < history.size(); ++k) {
    if (history[k].theta >= threshold) {
      if (k == 0) {
        r.t_star = history[0].t;
      } else {
        const auto& p = history[k - 1];
        const auto& q = history[k];
        const double s = (threshold - p.theta) / (q.theta - p.theta);
        r.t_star = p.t + s * (q.t - p.t);
      }
      return r;
    }
  }
  r.warnings.emplace_back("threshold_not_reached");
  if (history.size() < solution.times.size()) r.warnings.emplace_back("layer_burnt_through");
  return r;
}

}  // namespace

ProbeResult fd_probe_boilover(const FDSolution& solution, const Scenario& scenario) {
  if (!scenario.theta_B0) throw MissingInput("theta_B0 is required to probe for boilover");
  return probe(solution, scenario, *scenario.theta_B0);
}

ProbeResult fd_probe_boilover(const FDSolution& solution, const Scenario& scenario,
                              double theta_threshold) {
  return probe(solution, scenario, theta_threshold);
}

SteadyReport fd_steady_check(const FDSolution& solution) {
  SteadyReport r;
  if (solution.theta.empty()) return r;
  const auto& last = solution.theta.back();
  if (solution.theta.size() >= 2) {
    const auto& prev = solution.theta[solution.theta.size() - 2];
    for (std::size_t i = 0; i < last.size(); ++i) {
      r.successive_linf = std::max(r.successive_linf, std::abs(last[i] - prev[i]));
    }
  }
  const auto& cfg = solution.config;
  if (cfg.bc_mode == FDBoundary::dirichlet_Ts && !cfg.source_on) {
    double d = 0.0;
    for (std::size_t i = 0; i < last.size(); ++i) {
      d = std::max(d, std::abs(last[i] - std::exp(-solution.V_a * solution.grid[i] / solution.a_F)));
    }
    r.analytic_linf = d;
  }
  r.monotone_decreasing = true;
  for (std::size_t i = 1; i < last.size(); ++i) {
    if (last[i] > last[i - 1]) {
      r.monotone_decreasing = false;
      break;
    }
  }
  return r;
}

std::string fd_solution_csv(const FDSolution& solution) {
  std::string out = "t_s,y_m,theta\n";
  for (std::size_t k = 0; k < solution.times.size(); ++k) {
    const std::string t = csv::format_number(solution.times[k]);
    for (std::size_t i = 0; i < solution.grid.size(); ++i) {
      out += t;
      out.push_back(',');
      out += csv::format_number(solution.grid[i]);
      out.push_back(',');
      out += csv::format_number(solution.theta[k][i]);
      out.push_back('\n');
    }
  }
  return out;
}

std::string fd_config_json(const FDSolution& solution, const Scenario& scenario) {
  const auto& c = solution.config;
  nlohmann::json j;
  j["n_cells"] = c.n_cells;
  j["domain_depth_m"] = solution.grid.back();
  j["dt_s"] = solution.dt;
  j["dt_safety"] = c.dt_safety;
  j["t_end_s"] = c.t_end;
  j["scheme"] = to_string(c.scheme);
  j["theta"] = c.scheme == FDScheme::explicit_euler ? 0.0 : c.theta;
  j["bc_mode"] = to_string(c.bc_mode);
  j["source_on"] = c.source_on;
  j["advection"] = to_string(c.advection);
  j["bottom"] = to_string(c.bottom);
  j["V_a_m_per_s"] = solution.V_a;
  j["a_F_m2_per_s"] = solution.a_F;
  j["fuel"] = scenario.fuel.name;
  j["D_m"] = scenario.D;
  j["y0_m"] = scenario.y0;
  j["F_W_per_m2"] = scenario.F;
  j["T_inf_K"] = scenario.T_inf;
  j["T_s_K"] = scenario.fuel.T_s;
  if (scenario.theta_B0) j["theta_B0"] = *scenario.theta_B0;
  return j.dump(2);
}

}  // namespace boilover
