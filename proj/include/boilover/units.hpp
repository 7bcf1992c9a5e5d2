#pragma once

// Suffix-tagged quantities ("19mm", "1.35e-5 m/s", "20C") normalized to SI.

#include <string_view>

namespace boilover::units {

enum class Dimension { length, time, temperature, velocity, dimensionless };

/// Parses a number with an optional unit suffix. A bare number is taken as
/// already SI. Throws UnitError for a suffix that does not fit `dim` and
/// InputError for a malformed number.
double parse_quantity(std::string_view text, Dimension dim);

/// si = value*factor/divisor + offset
struct Conversion {
  double factor{1.0};
  double divisor{1.0};
  double offset{0.0};
  double to_si(double v) const;
  double from_si(double v) const;
};

/// Throws UnitError when `unit` is not a known unit of `dim`. Accepts both
/// symbol spellings ("mm/s") and column spellings ("mm_per_s").
Conversion conversion(std::string_view unit, Dimension dim);

}  // namespace boilover::units
