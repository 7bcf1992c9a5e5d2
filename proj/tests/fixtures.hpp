#pragma once

#include "boilover/corephys.hpp"

#include <string>

namespace fixtures {

inline boilover::FuelProperties heating_oil() {
  boilover::FuelProperties f;
  f.name = "heating_oil";
  f.a_F = 0.877e-7;
  f.T_s = 533.0;
  f.rho_F = 820.0;
  f.C_pF = 1900.0;
  f.H_v = 332119.0;
  f.mu = 262.0;
  return f;
}

// Heating oil slick with a flux of 20 kW/m^2 and V_a = 1e-5 m/s.
inline boilover::Scenario heating_oil_scenario(double y0, double F = 2e4, double V_a = 1e-5) {
  boilover::Scenario s;
  s.fuel = heating_oil();
  s.D = 0.15;
  s.y0 = y0;
  s.V_a = V_a;
  s.F = F;
  return s;
}

inline std::string data_path(const std::string& file) {
  return std::string(BOILOVER_DATA_DIR) + "/" + file;
}

}  // namespace fixtures
