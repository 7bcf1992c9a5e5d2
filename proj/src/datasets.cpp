#include "boilover/datasets.hpp"

#include "boilover/csv.hpp"
#include "boilover/errors.hpp"
#include "boilover/units.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

namespace boilover {

namespace {

enum class Col {
  source, fuel, legibility, notes,
  D, y0, tB0, UT, Va, T_inf, pub_conduction, pub_radiation, pub_radiation_alt,
  Fo_e, N_DHS, Bu, Ste,
};

struct ColSpec {
  Col col;
  std::string_view quantity;
  std::optional<units::Dimension> dim;  // unset: text or dimensionless, exact name
};

using units::Dimension;

// Longer prefixes first: tB0_pub_radiation_alt_s must not be read as
// tB0_pub_radiation in unit "alt_s", nor as tB0 in unit "pub_..._s".
const std::array<ColSpec, 17> kColumns{{
    {Col::pub_radiation_alt, "tB0_pub_radiation_alt", Dimension::time},
    {Col::pub_conduction, "tB0_pub_conduction", Dimension::time},
    {Col::pub_radiation, "tB0_pub_radiation", Dimension::time},
    {Col::T_inf, "T_inf", Dimension::temperature},
    {Col::tB0, "tB0", Dimension::time},
    {Col::D, "D", Dimension::length},
    {Col::y0, "y0", Dimension::length},
    {Col::UT, "UT", Dimension::velocity},
    {Col::Va, "Va", Dimension::velocity},
    {Col::source, "source", std::nullopt},
    {Col::fuel, "fuel", std::nullopt},
    {Col::legibility, "legibility", std::nullopt},
    {Col::notes, "notes", std::nullopt},
    {Col::Fo_e, "Fo_e", std::nullopt},
    {Col::N_DHS, "N_DHS", std::nullopt},
    {Col::Bu, "Bu", std::nullopt},
    {Col::Ste, "Ste", std::nullopt},
}};

constexpr std::array kRequired{Col::source, Col::fuel, Col::D,     Col::y0,  Col::tB0, Col::UT,
                               Col::Fo_e,   Col::Va,   Col::N_DHS, Col::Bu,  Col::Ste};

struct Column {
  Col col;
  units::Conversion conv;
};

Column parse_column(const std::string& name) {
  for (const auto& spec : kColumns) {
    if (!spec.dim) {
      if (name == spec.quantity) return {spec.col, {}};
      continue;
    }
    const std::string prefix = std::string(spec.quantity) + "_";
    if (name.size() > prefix.size() && name.compare(0, prefix.size(), prefix) == 0) {
      return {spec.col, units::conversion(name.substr(prefix.size()), *spec.dim)};
    }
  }
  throw SchemaError(1, "unknown column '" + name + "'");
}

std::string rel_percent(double rel) {
  std::ostringstream os;
  os.precision(3);
  os << rel * 100.0 << "%";
  return os.str();
}

std::string_view column_field(Col c) {
  for (const auto& spec : kColumns) {
    if (spec.col == c) return spec.quantity;
  }
  return {};
}

}  // namespace

bool ExperimentRecord::is_low(const std::string& field) const {
  if (legibility == "low") return true;
  constexpr std::string_view prefix = "low:";
  if (legibility.rfind(prefix, 0) != 0) return false;
  std::string_view rest(legibility);
  rest.remove_prefix(prefix.size());
  while (!rest.empty()) {
    const auto cut = rest.find(';');
    if (csv::trim(rest.substr(0, cut)) == field) return true;
    if (cut == std::string_view::npos) break;
    rest.remove_prefix(cut + 1);
  }
  return false;
}

std::vector<ExperimentRecord> parse_experiments(const std::string& text,
                                                const FuelDatabase* fuels) {
  std::vector<ExperimentRecord> out;
  const auto rows = csv::lines(text);
  std::size_t first = 0;
  while (first < rows.size() && csv::trim(rows[first]).empty()) ++first;
  if (first == rows.size()) return out;
  if (first != 0) throw SchemaError(1, "blank line before the header");

  std::vector<Column> header;
  std::set<Col> seen;
  for (const auto& name : csv::split(rows[0])) {
    const auto column = parse_column(csv::trim(name));
    if (!seen.insert(column.col).second) throw SchemaError(1, "duplicate column '" + name + "'");
    header.push_back(column);
  }
  for (Col c : kRequired) {
    if (!seen.count(c)) {
      throw SchemaError(1, "missing required column '" + std::string(column_field(c)) + "'");
    }
  }

  for (std::size_t i = 1; i < rows.size(); ++i) {
    const std::size_t line = i + 1;
    if (csv::trim(rows[i]).empty()) continue;
    const auto cells = csv::split(rows[i]);
    if (cells.size() != header.size()) {
      throw SchemaError(line, "expected " + std::to_string(header.size()) + " fields, got " +
                                  std::to_string(cells.size()));
    }
    ExperimentRecord r;
    r.line = line;
    std::optional<double> D, y0, tB0;
    try {
      for (std::size_t k = 0; k < cells.size(); ++k) {
        const auto& col = header[k];
        switch (col.col) {
          case Col::source: r.source = csv::trim(cells[k]); continue;
          case Col::fuel: r.fuel = csv::trim(cells[k]); continue;
          case Col::legibility: {
            const auto v = csv::trim(cells[k]);
            r.legibility = v.empty() ? "high" : v;
            if (r.legibility != "high" && r.legibility != "low" &&
                r.legibility.rfind("low:", 0) != 0) {
              throw InputError("legibility must be high, low or low:<fields>");
            }
            continue;
          }
          case Col::notes: r.notes = cells[k]; continue;
          default: break;
        }
        auto value = csv::parse_number(cells[k]);
        if (value) value = col.conv.to_si(*value);
        switch (col.col) {
          case Col::D: D = value; break;
          case Col::y0: y0 = value; break;
          case Col::tB0: tB0 = value; break;
          case Col::UT: r.U_T_exp = value; break;
          case Col::Va: r.V_a = value; break;
          case Col::T_inf: r.T_inf = value; break;
          case Col::pub_conduction: r.t_B0_pub_conduction = value; break;
          case Col::pub_radiation: r.t_B0_pub_radiation = value; break;
          case Col::pub_radiation_alt: r.t_B0_pub_radiation_alt = value; break;
          case Col::Fo_e: r.Fo_e_exp = value; break;
          case Col::N_DHS: r.N_DHS = value; break;
          case Col::Bu: r.Bu = value; break;
          case Col::Ste: r.Ste = value; break;
          default: break;
        }
      }
      if (r.fuel.empty()) throw InputError("fuel is required");
      if (!D || !y0 || !tB0) throw InputError("D, y0 and tB0 are required");
      if (!(*D > 0.0) || !(*y0 > 0.0) || !(*tB0 > 0.0)) {
        throw InputError("D, y0 and tB0 must be positive");
      }
      for (const auto* v : {&r.V_a, &r.N_DHS, &r.Bu, &r.U_T_exp, &r.Fo_e_exp}) {
        if (*v && !(**v > 0.0)) throw InputError("numeric fields must be positive when present");
      }
    } catch (const SchemaError&) {
      throw;
    } catch (const InputError& e) {
      throw SchemaError(line, e.what());
    }
    r.D = *D;
    r.y0 = *y0;
    r.t_B0_exp = *tB0;
    if (r.legibility != "high") r.flags.push_back("legibility " + r.legibility);

    const FuelProperties* fuel = nullptr;
    if (fuels) {
      const auto it = fuels->find(r.fuel);
      if (it != fuels->end()) fuel = &it->second;
    }
    if (fuel && r.N_DHS) {
      if (!r.V_a) {
        r.V_a = *r.N_DHS * fuel->a_F / r.y0;
        r.va_back_solved = true;
        r.flags.emplace_back("V_a back-solved from N_DHS");
      } else {
        const double recomputed = r.y0 * *r.V_a / fuel->a_F;
        const double rel = std::abs(recomputed - *r.N_DHS) / *r.N_DHS;
        if (rel > 0.10) {
          r.inconsistent = true;
          r.flags.push_back("N_DHS differs from y0*V_a/a_F by " + rel_percent(rel));
        }
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ExperimentRecord> load_experiments(const std::filesystem::path& path,
                                               const FuelDatabase* fuels) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open dataset " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_experiments(buffer.str(), fuels);
}

std::string format_experiments(const std::vector<ExperimentRecord>& records) {
  std::string out =
      "source,fuel,D_m,y0_m,tB0_s,UT_m_per_s,Fo_e,Va_m_per_s,N_DHS,Bu,Ste,T_inf_K,legibility,"
      "tB0_pub_conduction_s,tB0_pub_radiation_s,tB0_pub_radiation_alt_s,notes\n";
  const auto num = [](const std::optional<double>& v) {
    return v ? csv::format_number(*v) : std::string();
  };
  for (const auto& r : records) {
    const std::string va = r.V_a && !r.va_back_solved ? csv::format_number(*r.V_a) : "";
    out += csv::join({r.source, r.fuel, csv::format_number(r.D), csv::format_number(r.y0),
                      csv::format_number(r.t_B0_exp), num(r.U_T_exp), num(r.Fo_e_exp), va,
                      num(r.N_DHS), num(r.Bu), num(r.Ste), num(r.T_inf), r.legibility,
                      num(r.t_B0_pub_conduction), num(r.t_B0_pub_radiation), num(r.t_B0_pub_radiation_alt), r.notes});
    out.push_back('\n');
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<DerivedCheck> derived_checks(const std::vector<ExperimentRecord>& records,
                                         const FuelDatabase& fuels) {
  std::vector<DerivedCheck> out;
  for (const auto& r : records) {
    const auto it = fuels.find(r.fuel);
    if (it == fuels.end()) continue;
    const auto& f = it->second;
    const auto add = [&](const char* field, double tabulated, double recomputed) {
      DerivedCheck c;
      c.line = r.line;
      c.fuel = r.fuel;
      c.y0 = r.y0;
      c.field = field;
      c.tabulated = tabulated;
      c.recomputed = recomputed;
      c.rel_error = std::abs(recomputed - tabulated) / std::abs(tabulated);
      c.excluded = r.is_low(field);
      out.push_back(c);
    };
    if (r.N_DHS && r.V_a && !r.va_back_solved) add("N_DHS", *r.N_DHS, r.y0 * *r.V_a / f.a_F);
    if (r.Ste && f.C_pF && f.H_v) {
      add("Ste", *r.Ste, *f.C_pF * (f.T_s - r.T_inf.value_or(293.0)) / *f.H_v);
    }
    if (r.Bu && f.mu) add("Bu", *r.Bu, *f.mu * r.y0);
    if (r.Fo_e_exp) add("Fo_e", *r.Fo_e_exp, r.t_B0_exp * f.a_F / (r.y0 * r.y0));
    if (r.U_T_exp) add("UT", *r.U_T_exp, r.y0 / r.t_B0_exp);
  }
  return out;
}

// ---------------------------------------------------------------------------

double median(std::vector<double> values) {
  if (values.empty()) throw DomainError("median of an empty set");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

ComparisonReport compare_report(const std::vector<ExperimentRecord>& records,
                                const std::set<Method>& methods, const FuelDatabase& fuels,
                                RegimeBand band) {
  ComparisonReport report;
  for (std::size_t idx = 0; idx < records.size(); ++idx) {
    const auto& r = records[idx];
    ComparisonRow row;
    row.record = idx;
    row.source = r.source;
    row.fuel = r.fuel;
    row.D = r.D;
    row.y0 = r.y0;
    row.t_B0_exp = r.t_B0_exp;
    row.excluded = r.is_low("tB0");
    row.notes = r.flags;
    if (!r.notes.empty()) row.notes.push_back(r.notes);
    if (r.t_B0_pub_conduction) row.printed["tB0_pub_conduction_s"] = *r.t_B0_pub_conduction;
    if (r.t_B0_pub_radiation) row.printed["tB0_pub_radiation_s"] = *r.t_B0_pub_radiation;
    if (r.t_B0_pub_radiation_alt) row.printed["tB0_pub_radiation_alt_s"] = *r.t_B0_pub_radiation_alt;

    const auto it = fuels.find(r.fuel);
    const FuelProperties* fuel = it == fuels.end() ? nullptr : &it->second;
    if (!fuel) row.notes.push_back("fuel '" + r.fuel + "' not in the fuel database");

    row.n_dhs = r.N_DHS;
    if (!row.n_dhs && r.V_a && fuel) row.n_dhs = r.y0 * *r.V_a / fuel->a_F;
    if (row.n_dhs) {
      if (*row.n_dhs > band.upper) {
        row.regime = Regime::thick_layer;
      } else if (*row.n_dhs < band.lower) {
        row.regime = Regime::thin_layer;
      } else {
        row.regime = Regime::transition;
      }
    } else {
      row.notes.emplace_back("regime unknown: no N_DHS or V_a");
    }

    std::optional<double> bu = r.Bu;
    if (!bu && fuel && fuel->mu) bu = *fuel->mu * r.y0;

    for (Method m : methods) {
      const std::string tag(to_string(m));
      try {
        std::optional<PredictionResult> p;
        switch (m) {
          case Method::conduction:
            if (!row.n_dhs || !r.V_a) {
              row.notes.push_back(tag + ": needs N_DHS and V_a");
              break;
            }
            p = conduction_time(r.y0 / *r.V_a, *row.n_dhs);
            break;
          case Method::radiation_unit_prefactor:
          case Method::radiation_exact:
            if (!fuel || !bu) {
              row.notes.push_back(tag + ": needs a_F and Bu");
              break;
            }
            p = radiation_time(r.y0 * r.y0 / fuel->a_F, *bu, r.y0,
                               m == Method::radiation_exact ? RadiationPrefactor::exact_084
                                                            : RadiationPrefactor::unity,
                               kThetaGaro, kResidualFraction, row.n_dhs);
            break;
          default:
            row.notes.push_back(tag + ": needs the surface flux, not available from records");
            break;
        }
        if (p && p->t_B0 && *p->t_B0 > 0.0) {
          row.predictions[m] = *p->t_B0;
          row.ratios[m] = r.t_B0_exp / *p->t_B0;
          for (const auto& w : p->warnings) row.notes.push_back(tag + ": " + w);
        }
      } catch (const Error& e) {
        row.notes.push_back(tag + ": " + e.what());
      }
    }

    const auto cond = row.predictions.find(Method::conduction);
    if (cond != row.predictions.end() && r.t_B0_pub_conduction) {
      const double rel = std::abs(cond->second - *r.t_B0_pub_conduction) / *r.t_B0_pub_conduction;
      if (rel > 0.01) row.notes.push_back("conduction differs from printed value by " +
                                          rel_percent(rel));
    }
    report.rows.push_back(std::move(row));
  }

  for (Method m : methods) {
    MethodSummary s;
    std::vector<double> ratios;
    for (const auto& row : report.rows) {
      if (row.excluded) continue;
      const auto rt = row.ratios.find(m);
      if (rt == row.ratios.end()) continue;
      const double q = rt->second;
      ratios.push_back(q);
      if (q >= 0.7 && q <= 1.2) {
        ++s.within_07_12;
        if (row.n_dhs) {
          s.n_dhs_min_in_band = std::min(s.n_dhs_min_in_band.value_or(*row.n_dhs), *row.n_dhs);
          s.n_dhs_max_in_band = std::max(s.n_dhs_max_in_band.value_or(*row.n_dhs), *row.n_dhs);
        }
      }
      if (q >= 0.9 && q <= 1.1) ++s.within_09_11;
    }
    s.count = ratios.size();
    if (!ratios.empty()) {
      s.median_ratio = median(ratios);
      s.min_ratio = *std::min_element(ratios.begin(), ratios.end());
      s.max_ratio = *std::max_element(ratios.begin(), ratios.end());
    }
    report.summary[m] = s;
  }
  return report;
}

std::string comparison_csv(const ComparisonReport& report) {
  std::vector<std::string> header{"source", "fuel", "D_m", "y0_m", "tB0_exp_s", "N_DHS",
                                  "regime", "excluded"};
  for (const auto& [m, s] : report.summary) {
    header.push_back("tB0_" + std::string(to_string(m)) + "_s");
    header.push_back("ratio_" + std::string(to_string(m)));
  }
  header.emplace_back("notes");
  std::string out = csv::join(header) + "\n";
  for (const auto& row : report.rows) {
    std::vector<std::string> cells{row.source,
                                   row.fuel,
                                   csv::format_number(row.D),
                                   csv::format_number(row.y0),
                                   csv::format_number(row.t_B0_exp),
                                   row.n_dhs ? csv::format_number(*row.n_dhs) : "",
                                   std::string(to_string(row.regime)),
                                   row.excluded ? "1" : "0"};
    for (const auto& [m, s] : report.summary) {
      const auto p = row.predictions.find(m);
      const auto q = row.ratios.find(m);
      cells.push_back(p != row.predictions.end() ? csv::format_number(p->second) : "");
      cells.push_back(q != row.ratios.end() ? csv::format_number(q->second) : "");
    }
    std::string notes;
    for (const auto& n : row.notes) notes += (notes.empty() ? "" : "; ") + n;
    cells.push_back(notes);
    out += csv::join(cells) + "\n";
  }
  return out;
}

std::string comparison_json(const ComparisonReport& report) {
  nlohmann::json j;
  j["rows"] = nlohmann::json::array();
  for (const auto& row : report.rows) {
    nlohmann::json r;
    r["source"] = row.source;
    r["fuel"] = row.fuel;
    r["D_m"] = row.D;
    r["y0_m"] = row.y0;
    r["tB0_exp_s"] = row.t_B0_exp;
    r["N_DHS"] = row.n_dhs ? nlohmann::json(*row.n_dhs) : nlohmann::json(nullptr);
    r["regime"] = to_string(row.regime);
    r["excluded"] = row.excluded;
    r["predictions_s"] = nlohmann::json::object();
    r["ratios"] = nlohmann::json::object();
    for (const auto& [m, v] : row.predictions) r["predictions_s"][std::string(to_string(m))] = v;
    for (const auto& [m, v] : row.ratios) r["ratios"][std::string(to_string(m))] = v;
    r["printed_s"] = row.printed;
    r["notes"] = row.notes;
    j["rows"].push_back(r);
  }
  j["summary"] = nlohmann::json::object();
  for (const auto& [m, s] : report.summary) {
    nlohmann::json o;
    o["count"] = s.count;
    o["median_ratio"] = s.count ? nlohmann::json(s.median_ratio) : nlohmann::json(nullptr);
    o["min_ratio"] = s.count ? nlohmann::json(s.min_ratio) : nlohmann::json(nullptr);
    o["max_ratio"] = s.count ? nlohmann::json(s.max_ratio) : nlohmann::json(nullptr);
    o["within_0.7_1.2"] = s.within_07_12;
    o["within_0.9_1.1"] = s.within_09_11;
    o["N_DHS_range_in_band"] =
        s.n_dhs_min_in_band
            ? nlohmann::json::array({*s.n_dhs_min_in_band, *s.n_dhs_max_in_band})
            : nlohmann::json(nullptr);
    j["summary"][std::string(to_string(m))] = o;
  }
  return j.dump(2);
}

// ---------------------------------------------------------------------------

std::vector<BurningRate> parse_burning_rates(const std::string& text) {
  std::vector<BurningRate> out;
  const auto rows = csv::lines(text);
  if (rows.empty()) return out;
  const auto header = csv::split(rows[0]);
  if (header.size() != 3 || csv::trim(header[0]) != "fuel" || csv::trim(header[1]) != "D_m" ||
      csv::trim(header[2]) != "Va_m_per_s") {
    throw SchemaError(1, "burning-rate header must be 'fuel,D_m,Va_m_per_s'");
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (csv::trim(rows[i]).empty()) continue;
    const auto cells = csv::split(rows[i]);
    try {
      if (cells.size() != 3) throw InputError("expected 3 fields");
      const auto D = csv::parse_number(cells[1]);
      const auto V = csv::parse_number(cells[2]);
      if (!D || !V || !(*D > 0.0) || !(*V > 0.0)) throw InputError("D and V_a must be positive");
      out.push_back({csv::trim(cells[0]), *D, *V});
    } catch (const SchemaError&) {
      throw;
    } catch (const InputError& e) {
      throw SchemaError(i + 1, e.what());
    }
  }
  return out;
}

std::vector<BurningRate> load_burning_rates(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open burning-rate table " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_burning_rates(buffer.str());
}

RateLookup lookup_burning_rate(const std::vector<BurningRate>& table, const std::string& fuel,
                               double D) {
  const BurningRate* best = nullptr;
  for (const auto& e : table) {
    if (e.fuel != fuel) continue;
    if (!best || std::abs(std::log(e.D / D)) < std::abs(std::log(best->D / D))) best = &e;
  }
  if (!best) throw MissingInput("no tabulated burning rate for fuel '" + fuel + "'");
  return {best->V_a, best->D, std::abs(best->D - D) <= 1e-9 * D};
}

}  // namespace boilover
