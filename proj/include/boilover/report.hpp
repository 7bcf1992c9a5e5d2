#pragma once

// JSON / CSV renderings shared by the CLI and the acceptance driver.

#include "boilover/predict.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace boilover::report {

using Json = nlohmann::ordered_json;

/// {method, t_B0_s, Fo_e, theta_B0, regime, U_T_m_per_s, warnings[]}; absent
/// values are null. Diagnostics follow under "diagnostics".
Json prediction(const PredictionResult& p);
Json regime(const RegimeReport& r);

std::vector<std::string> prediction_csv_header();
std::vector<std::string> prediction_csv_row(const PredictionResult& p);

/// Flat CSV of an array of objects (header from the first element) or of a
/// single object as key,value rows. Nested values are written as JSON text.
std::string to_csv(const Json& j);
/// Aligned plain-text rendering of the same shapes.
std::string to_table(const Json& j);

}  // namespace boilover::report
