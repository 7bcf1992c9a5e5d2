#pragma once

// Minimal RFC-4180 reader/writer helpers shared by the file formats.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace boilover::csv {

/// Split one record. Quoted fields may contain commas and doubled quotes.
/// Throws InputError on an unterminated quote.
std::vector<std::string> split(std::string_view line);

/// Quote a field when it contains a comma, quote or newline.
std::string escape(std::string_view field);

std::string join(const std::vector<std::string>& fields);

/// Lines of a document with trailing CR stripped; blank lines are kept so
/// that reported line numbers match the file.
std::vector<std::string> lines(const std::string& text);

std::string trim(std::string_view s);

/// Strict number parse of a whole cell. Empty cells yield nullopt; anything
/// that is not a complete finite number throws InputError.
std::optional<double> parse_number(std::string_view cell);

/// Shortest round-trip representation of a double.
std::string format_number(double value);

}  // namespace boilover::csv
