#include "boilover/report.hpp"

#include "boilover/csv.hpp"

#include <algorithm>

namespace boilover::report {

namespace {

Json opt(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::string cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return csv::format_number(v.get<double>());
  if (v.is_number()) return v.dump();
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_string(); })) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : "; ") + e.get<std::string>();
    return s;
  }
  return v.dump();
}

bool is_row_list(const Json& j) {
  return j.is_array() && !j.empty() &&
         std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_object(); });
}

std::vector<std::vector<std::string>> grid(const Json& j) {
  std::vector<std::vector<std::string>> rows;
  if (is_row_list(j)) {
    std::vector<std::string> header;
    for (const auto& [k, v] : j.front().items()) header.push_back(k);
    rows.push_back(header);
    for (const auto& e : j) {
      std::vector<std::string> row;
      for (const auto& k : header) row.push_back(e.contains(k) ? cell(e[k]) : "");
      rows.push_back(row);
    }
  } else if (j.is_object()) {
    rows.push_back({"key", "value"});
    for (const auto& [k, v] : j.items()) rows.push_back({k, cell(v)});
  } else {
    rows.push_back({"value"});
    rows.push_back({cell(j)});
  }
  return rows;
}

}  // namespace

Json prediction(const PredictionResult& p) {
  Json j;
  j["method"] = std::string(to_string(p.method));
  j["t_B0_s"] = opt(p.t_B0);
  j["Fo_e"] = opt(p.Fo_e);
  j["theta_B0"] = opt(p.theta_B0);
  j["regime"] = std::string(to_string(p.regime));
  j["U_T_m_per_s"] = opt(p.U_T);
  j["warnings"] = p.warnings;
  Json d = Json::object();
  for (const auto& [k, v] : p.diagnostics) d[k] = v;
  j["diagnostics"] = d;
  return j;
}

Json regime(const RegimeReport& r) {
  Json j;
  j["y_crit_m"] = r.y_crit;
  j["N_DHS"] = r.n_dhs;
  j["Bu"] = opt(r.bu);
  j["classification"] = std::string(to_string(r.classification));
  j["transition_band_m"] = Json::array({r.band_lower, r.band_upper});
  return j;
}

std::vector<std::string> prediction_csv_header() {
  return {"method", "t_B0_s", "Fo_e", "theta_B0", "regime", "U_T_m_per_s", "warnings"};
}

std::vector<std::string> prediction_csv_row(const PredictionResult& p) {
  const auto num = [](const std::optional<double>& v) {
    return v ? csv::format_number(*v) : std::string();
  };
  std::string warnings;
  for (const auto& w : p.warnings) warnings += (warnings.empty() ? "" : "; ") + w;
  return {std::string(to_string(p.method)), num(p.t_B0), num(p.Fo_e), num(p.theta_B0),
          std::string(to_string(p.regime)), num(p.U_T), warnings};
}

std::string to_csv(const Json& j) {
  std::string out;
  for (const auto& row : grid(j)) out += csv::join(row) + "\n";
  return out;
}

std::string to_table(const Json& j) {
  const auto rows = grid(j);
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

}  // namespace boilover::report
