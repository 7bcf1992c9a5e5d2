#include "boilover/datasets.hpp"
#include "boilover/errors.hpp"

#include "fixtures.hpp"

#include <catch_amalgamated.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>

using namespace boilover;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const std::string kHeader =
    "source,fuel,D_m,y0_mm,tB0_s,UT_mm_per_s,Fo_e,Va_mm_per_s,N_DHS,Bu,Ste\n";

FuelDatabase bundled_fuels() { return load_fuel_database(fixtures::data_path("fuels.csv")); }

std::vector<ExperimentRecord> bundled_records(const FuelDatabase& db) {
  std::vector<ExperimentRecord> all;
  for (const char* f : {"garo_heating_oil.csv", "arai_thin_layer.csv", "koseki_crude.csv"}) {
    auto part = load_experiments(fixtures::data_path(f), &db);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

const ExperimentRecord& find_record(const std::vector<ExperimentRecord>& rs, const std::string& fuel,
                                    double D, double y0) {
  const auto it = std::find_if(rs.begin(), rs.end(), [&](const ExperimentRecord& r) {
    return r.fuel == fuel && std::abs(r.D - D) < 1e-12 && std::abs(r.y0 - y0) < 1e-12;
  });
  REQUIRE(it != rs.end());
  return *it;
}

}  // namespace

TEST_CASE("bundled datasets load and normalize to SI") {
  const auto db = bundled_fuels();
  const auto garo = load_experiments(fixtures::data_path("garo_heating_oil.csv"), &db);
  const auto arai = load_experiments(fixtures::data_path("arai_thin_layer.csv"), &db);
  const auto koseki = load_experiments(fixtures::data_path("koseki_crude.csv"), &db);
  CHECK(garo.size() == 20);
  CHECK(arai.size() == 13);
  CHECK(koseki.size() == 9);

  const auto& r = find_record(garo, "heating_oil", 0.15, 0.019);
  CHECK(r.line == 2);
  CHECK(r.t_B0_exp == 945.0);
  CHECK(*r.Fo_e_exp == 0.22);
  CHECK(*r.N_DHS == 1.9);
  CHECK(*r.V_a == 1e-5);
  CHECK_THAT(*r.U_T_exp, WithinRel(2.01e-5, 1e-12));
  CHECK(*r.t_B0_pub_conduction == 900.0);
  CHECK(r.is_low("N_DHS"));
  CHECK_FALSE(r.is_low("tB0"));
  CHECK(r.inconsistent);

  const auto& tol = arai.front();
  CHECK(tol.fuel == "toluene");
  CHECK(*tol.Ste == 0.462);
  CHECK(*tol.N_DHS == 1.35);
  CHECK(tol.y0 == 0.01);

  const auto& odd = find_record(koseki, "arabian_light_crude", 0.3, 0.0035);
  CHECK(odd.is_low("tB0"));
  CHECK(odd.va_back_solved);
  CHECK_THAT(*odd.V_a, WithinRel(5.89 * 0.679e-7 / 0.0035, 1e-12));
}

TEST_CASE("empty and malformed dataset files") {
  CHECK(parse_experiments("").empty());
  CHECK(parse_experiments(kHeader).empty());

  try {
    parse_experiments("source,fuel,D_m,y0_mm,tB0_s,colour\n");
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(e.line() == 1);
  }
  CHECK_THROWS_AS(parse_experiments("source,fuel,D_m,y0_furlong,tB0_s,UT_mm_per_s,Fo_e,"
                                    "Va_mm_per_s,N_DHS,Bu,Ste\n"),
                  UnitError);
  CHECK_THROWS_AS(parse_experiments("source,fuel,D_m,y0_mm\n"), SchemaError);

  try {
    parse_experiments(kHeader + "X,oil,0.1,5,100,,,,,,\nX,oil,0.1,abc,100,,,,,,\n");
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(e.line() == 3);
  }
  try {
    parse_experiments(kHeader + "X,oil,0.1,5,100,,,,,\n");
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_experiments(kHeader + "X,oil,0.1,5,,,,,,,\n"), SchemaError);
  CHECK_THROWS_AS(load_experiments("/nonexistent/data.csv"), InputError);
}

TEST_CASE("velocity back-solve and consistency flags") {
  const auto db = bundled_fuels();
  const auto rs = parse_experiments(kHeader + "X,toluene,0.048,10,400,,,,1.2,,\n"
                                              "X,toluene,0.048,10,400,,,0.0135,1.31,,\n"
                                              "X,toluene,0.048,10,400,,,0.0135,1.6,,\n",
                                    &db);
  REQUIRE(rs.size() == 3);
  CHECK(rs[0].va_back_solved);
  CHECK_THAT(*rs[0].V_a, WithinRel(1.2 * 1.03e-7 / 0.01, 1e-12));
  CHECK_FALSE(rs[1].inconsistent);
  CHECK(rs[2].inconsistent);
  CHECK_FALSE(rs[2].flags.empty());

  // Without a fuel database nothing is inferred.
  const auto bare = parse_experiments(kHeader + "X,toluene,0.048,10,400,,,,1.2,,\n");
  CHECK_FALSE(bare[0].V_a.has_value());
}

TEST_CASE("dataset round trip is bit-exact") {
  const auto db = bundled_fuels();
  const auto rs = bundled_records(db);
  const auto again = parse_experiments(format_experiments(rs), &db);
  REQUIRE(again.size() == rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) {
    CHECK(again[i].source == rs[i].source);
    CHECK(again[i].fuel == rs[i].fuel);
    CHECK(again[i].D == rs[i].D);
    CHECK(again[i].y0 == rs[i].y0);
    CHECK(again[i].t_B0_exp == rs[i].t_B0_exp);
    CHECK(again[i].U_T_exp == rs[i].U_T_exp);
    CHECK(again[i].Fo_e_exp == rs[i].Fo_e_exp);
    CHECK(again[i].V_a == rs[i].V_a);
    CHECK(again[i].N_DHS == rs[i].N_DHS);
    CHECK(again[i].Bu == rs[i].Bu);
    CHECK(again[i].Ste == rs[i].Ste);
    CHECK(again[i].T_inf == rs[i].T_inf);
    CHECK(again[i].t_B0_pub_conduction == rs[i].t_B0_pub_conduction);
    CHECK(again[i].legibility == rs[i].legibility);
    CHECK(again[i].notes == rs[i].notes);
    CHECK(again[i].va_back_solved == rs[i].va_back_solved);
  }
  CHECK(format_experiments(again) == format_experiments(rs));
}

TEST_CASE("tabulated derived columns reproduce from fuel properties") {
  const auto db = bundled_fuels();
  const auto checks = derived_checks(bundled_records(db), db);
  REQUIRE_FALSE(checks.empty());
  std::size_t used = 0;
  for (const auto& c : checks) {
    if (c.excluded) continue;
    ++used;
    CAPTURE(c.line, c.fuel, c.y0, c.field, c.tabulated, c.recomputed);
    CHECK(c.rel_error <= 0.05);
  }
  CHECK(used > 20);
  // The heating-oil N_DHS column is marked low and excluded.
  CHECK(std::any_of(checks.begin(), checks.end(), [](const DerivedCheck& c) {
    return c.fuel == "heating_oil" && c.field == "N_DHS" && c.excluded;
  }));
}

TEST_CASE("comparison against the bundled experiments") {
  const auto db = bundled_fuels();
  const auto rs = bundled_records(db);
  const auto report =
      compare_report(rs, {Method::conduction, Method::radiation_unit_prefactor}, db);
  REQUIRE(report.rows.size() == rs.size());

  const auto row = [&](double D, double y0) -> const ComparisonRow& {
    const auto it = std::find_if(report.rows.begin(), report.rows.end(), [&](const auto& r) {
      return r.fuel == "heating_oil" && std::abs(r.D - D) < 1e-12 && std::abs(r.y0 - y0) < 1e-12;
    });
    REQUIRE(it != report.rows.end());
    return *it;
  };
  // Conduction with the tabulated N_DHS and V_a: tau0 (1 - 1/N).
  const std::tuple<double, double, double> cond[] = {
      {0.019, 900.0, 1.05}, {0.017, 700.0, 1.18571428571}, {0.013, 433.333333333, 1.44230769231},
      {0.009, 207.692307692, 2.16666666667}};
  for (const auto& [y0, t, ratio] : cond) {
    const auto& r = row(0.15, y0);
    CHECK_THAT(r.predictions.at(Method::conduction), WithinRel(t, 1e-10));
    CHECK_THAT(r.ratios.at(Method::conduction), WithinRel(ratio, 1e-10));
    CHECK_THAT(r.printed.at("tB0_pub_conduction_s"), WithinRel(t, 0.01));
  }
  const auto& thin = row(0.15, 0.002);
  CHECK(thin.regime == Regime::thin_layer);
  CHECK_FALSE(thin.predictions.count(Method::conduction));
  CHECK_THAT(thin.predictions.at(Method::radiation_unit_prefactor),
             WithinRel(0.002 * 0.002 / 0.877e-7 / 0.52, 1e-12));
  CHECK_THAT(thin.ratios.at(Method::radiation_unit_prefactor), WithinAbs(1.03, 0.01));

  const auto& cs = report.summary.at(Method::conduction);
  std::size_t with_cond = 0;
  for (const auto& r : report.rows)
    if (!r.excluded && r.ratios.count(Method::conduction)) ++with_cond;
  CHECK(cs.count == with_cond);
  CHECK(cs.min_ratio <= cs.median_ratio);
  CHECK(cs.median_ratio <= cs.max_ratio);
  CHECK(cs.within_09_11 <= cs.within_07_12);

  const auto j = nlohmann::json::parse(comparison_json(report));
  CHECK(j.at("rows").size() == rs.size());
  const auto csv = comparison_csv(report);
  CHECK(csv.rfind("source,fuel,D_m,y0_m,tB0_exp_s,N_DHS,regime,excluded", 0) == 0);
}

TEST_CASE("median") {
  CHECK(median({3.0, 1.0, 2.0}) == 2.0);
  CHECK(median({4.0, 1.0, 2.0, 3.0}) == 2.5);
  CHECK_THROWS_AS(median({}), DomainError);
}

TEST_CASE("burning-rate table") {
  const auto table = load_burning_rates(fixtures::data_path("burning_rates.csv"));
  CHECK(table.size() == 10);
  const auto exact = lookup_burning_rate(table, "heating_oil", 0.23);
  CHECK(exact.exact);
  CHECK(exact.V_a == 1.1e-5);
  const auto near = lookup_burning_rate(table, "arabian_light_crude", 1.2);
  CHECK_FALSE(near.exact);
  CHECK(near.D == 1.0);
  CHECK(near.V_a == 3.56e-5);
  CHECK_THROWS_AS(lookup_burning_rate(table, "kerosene", 1.0), InputError);
  CHECK_THROWS_AS(parse_burning_rates("fuel,D,V\n"), SchemaError);
}
