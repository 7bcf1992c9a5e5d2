#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace boilover::cli {

enum class OutputFormat { json, csv, table };

struct CliConfig {
  std::filesystem::path fuel_db_path;
  std::filesystem::path data_dir;  ///< bundled datasets and burning-rate table
  std::vector<std::filesystem::path> dataset_paths;
  OutputFormat output_format{OutputFormat::json};
  bool strict_paper_mode{false};
};

/// Exit codes: 0 success, 2 input error, 3 regime/validity error, 1 internal.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitRegime = 3;

/// Runs the command line `args` (without the program name). `tty` selects
/// the default output format: table on a terminal, json otherwise.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        bool tty = false);

}  // namespace boilover::cli
