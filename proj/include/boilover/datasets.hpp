#pragma once

// Experimental boilover records: CSV ingestion, consistency checks and
// predictor-versus-experiment comparison.
//
// Dataset CSV: a header naming columns as <quantity>_<unit>, e.g.
//   source,fuel,D_m,y0_mm,tB0_s,UT_mm_per_s,Fo_e,Va_mm_per_s,N_DHS,Bu,Ste
// plus the optional columns T_inf_K, legibility, notes, tB0_pub_conduction_s,
// tB0_pub_radiation_s and tB0_pub_radiation_alt_s. Empty cells mark missing values. Values are
// normalized to SI on load.

#include "boilover/corephys.hpp"
#include "boilover/predict.hpp"

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace boilover {

struct ExperimentRecord {
  std::size_t line{0};  ///< 1-based line in the source file
  std::string source;
  std::string fuel;
  double D{0.0};         ///< [m]
  double y0{0.0};        ///< [m]
  double t_B0_exp{0.0};  ///< [s]
  std::optional<double> U_T_exp;  ///< [m/s]
  std::optional<double> Fo_e_exp;
  std::optional<double> V_a;  ///< [m/s]
  std::optional<double> N_DHS;
  std::optional<double> Bu;
  std::optional<double> Ste;
  std::optional<double> T_inf;  ///< [K]
  /// Printed predictions kept for side-by-side reporting [s].
  std::optional<double> t_B0_pub_conduction;
  std::optional<double> t_B0_pub_radiation;
  std::optional<double> t_B0_pub_radiation_alt;

  /// "high", "low" (whole row) or "low:field;field".
  std::string legibility{"high"};
  std::string notes;
  bool va_back_solved{false};
  bool inconsistent{false};
  std::vector<std::string> flags;

  /// True when the row as a whole, or the named column, is marked low.
  /// Field names are the column quantity names (tB0, Fo_e, N_DHS, UT, ...).
  bool is_low(const std::string& field) const;
};

/// Parses dataset text. With a fuel database, V_a is back-solved from N_DHS
/// when the velocity is absent and N_DHS is checked against y0 V_a/a_F.
std::vector<ExperimentRecord> parse_experiments(const std::string& text,
                                                const FuelDatabase* fuels = nullptr);
std::vector<ExperimentRecord> load_experiments(const std::filesystem::path& path,
                                               const FuelDatabase* fuels = nullptr);

/// Writes records with SI column units, so that reloading is bit-exact.
std::string format_experiments(const std::vector<ExperimentRecord>& records);

// -- derived-column reproduction -------------------------------------------------

struct DerivedCheck {
  std::size_t line{0};
  std::string fuel;
  double y0{0.0};
  std::string field;  ///< N_DHS, Ste, Bu, Fo_e or UT
  double tabulated{0.0};
  double recomputed{0.0};
  double rel_error{0.0};
  bool excluded{false};  ///< field marked low-legibility
};

/// Recomputes N_DHS, Ste, Bu, Fo_e and U_T wherever the record and fuel
/// properties allow.
std::vector<DerivedCheck> derived_checks(const std::vector<ExperimentRecord>& records,
                                         const FuelDatabase& fuels);

// -- comparison ---------------------------------------------------------------------

struct ComparisonRow {
  std::size_t record{0};  ///< index into the input records
  std::string source;
  std::string fuel;
  double D{0.0};
  double y0{0.0};
  double t_B0_exp{0.0};
  std::optional<double> n_dhs;
  std::map<Method, double> predictions;  ///< [s]
  std::map<Method, double> ratios;       ///< experimental / predicted
  std::map<std::string, double> printed; ///< printed columns, by column name
  Regime regime{Regime::transition};
  bool excluded{false};  ///< t_B0 marked low-legibility; left out of the summary
  std::vector<std::string> notes;
};

struct MethodSummary {
  std::size_t count{0};
  double median_ratio{0.0};
  double min_ratio{0.0};
  double max_ratio{0.0};
  std::size_t within_07_12{0};
  std::size_t within_09_11{0};
  /// N_DHS span of the rows inside [0.7, 1.2].
  std::optional<double> n_dhs_min_in_band;
  std::optional<double> n_dhs_max_in_band;
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;
  std::map<Method, MethodSummary> summary;
};

/// Per-record predictions from the record's own N_DHS, V_a and Bu where
/// present, falling back to fuel properties. Methods other than conduction
/// and the two radiation forms need the surface flux and are reported as
/// unavailable.
ComparisonReport compare_report(const std::vector<ExperimentRecord>& records,
                                const std::set<Method>& methods, const FuelDatabase& fuels,
                                RegimeBand band = {});

std::string comparison_csv(const ComparisonReport& report);
std::string comparison_json(const ComparisonReport& report);

double median(std::vector<double> values);

// -- burning-rate table ---------------------------------------------------------

/// CSV fuel,D_m,Va_m_per_s
struct BurningRate {
  std::string fuel;
  double D{0.0};
  double V_a{0.0};
};

std::vector<BurningRate> parse_burning_rates(const std::string& text);
std::vector<BurningRate> load_burning_rates(const std::filesystem::path& path);

/// Rate for the fuel at the closest tabulated diameter; `exact` reports
/// whether the diameter matched. Throws InputError when the fuel is absent.
struct RateLookup {
  double V_a{0.0};
  double D{0.0};
  bool exact{false};
};
RateLookup lookup_burning_rate(const std::vector<BurningRate>& table, const std::string& fuel,
                               double D);

}  // namespace boilover
