#include "boilover/units.hpp"

#include "boilover/csv.hpp"
#include "boilover/errors.hpp"

#include <array>
#include <cctype>
#include <string>
#include <utility>

namespace boilover::units {

double Conversion::to_si(double v) const { return v * factor / divisor + offset; }

double Conversion::from_si(double v) const { return (v - offset) * divisor / factor; }

namespace {

struct Entry {
  std::string_view name;
  Conversion conv;
};

constexpr std::array kLength{Entry{"m", {1.0, 1.0, 0.0}}, Entry{"mm", {1.0, 1000.0, 0.0}},
                             Entry{"cm", {1.0, 100.0, 0.0}}};
constexpr std::array kTime{Entry{"s", {1.0, 1.0, 0.0}}, Entry{"min", {60.0, 1.0, 0.0}},
                           Entry{"h", {3600.0, 1.0, 0.0}}};
constexpr std::array kTemperature{Entry{"K", {1.0, 1.0, 0.0}}, Entry{"C", {1.0, 1.0, 273.15}}};
constexpr std::array kVelocity{Entry{"m/s", {1.0, 1.0, 0.0}}, Entry{"mm/s", {1.0, 1000.0, 0.0}},
                               Entry{"m_per_s", {1.0, 1.0, 0.0}}, Entry{"mm_per_s", {1.0, 1000.0, 0.0}}};

template <std::size_t N>
const Conversion* lookup(const std::array<Entry, N>& table, std::string_view unit) {
  for (const auto& e : table) {
    if (e.name == unit) return &e.conv;
  }
  return nullptr;
}

const char* dimension_name(Dimension dim) {
  switch (dim) {
    case Dimension::length: return "length";
    case Dimension::time: return "time";
    case Dimension::temperature: return "temperature";
    case Dimension::velocity: return "velocity";
    case Dimension::dimensionless: return "dimensionless";
  }
  return "unknown";
}

}  // namespace

Conversion conversion(std::string_view unit, Dimension dim) {
  const Conversion* c = nullptr;
  switch (dim) {
    case Dimension::length: c = lookup(kLength, unit); break;
    case Dimension::time: c = lookup(kTime, unit); break;
    case Dimension::temperature: c = lookup(kTemperature, unit); break;
    case Dimension::velocity: c = lookup(kVelocity, unit); break;
    case Dimension::dimensionless: break;
  }
  if (!c) {
    throw UnitError("unit '" + std::string(unit) + "' is not a known " + dimension_name(dim) +
                    " unit");
  }
  return *c;
}

double parse_quantity(std::string_view text, Dimension dim) {
  const std::string s = csv::trim(text);
  if (s.empty()) throw InputError("empty quantity");
  // The numeric part ends at the first character that cannot continue a
  // floating-point literal; an exponent marker is kept only when followed by
  // a digit or sign.
  std::size_t end = 0;
  while (end < s.size()) {
    const char ch = s[end];
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.' || ch == '+' || ch == '-') {
      ++end;
    } else if ((ch == 'e' || ch == 'E') && end + 1 < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[end + 1])) || s[end + 1] == '-' ||
                s[end + 1] == '+')) {
      ++end;
    } else {
      break;
    }
  }
  const auto value = csv::parse_number(s.substr(0, end));
  if (!value) throw InputError("missing number in '" + s + "'");
  const std::string unit = csv::trim(s.substr(end));
  if (unit.empty()) return *value;
  if (dim == Dimension::dimensionless) {
    throw UnitError("'" + s + "' should be dimensionless");
  }
  return conversion(unit, dim).to_si(*value);
}

}  // namespace boilover::units
