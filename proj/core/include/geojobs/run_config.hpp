#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "geojobs/allocator.hpp"

namespace geojobs {

/// Thrown for unusable configuration (exit code 1 in the CLI).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown for unreadable or unparseable inputs (exit code 2 in the CLI).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when --strict is set and any row was rejected (exit code 4).
struct StrictViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::filesystem::path faces_path;
  std::filesystem::path species_path;
  std::filesystem::path establishments_path;
  std::filesystem::path mapping_path;  // mapping bundle JSON; empty = normalized layout
  std::filesystem::path out_dir;

  std::optional<int> year_filter;
  std::set<std::string> municipality_filter;  // empty = all
  RoundingMode rounding = RoundingMode::Fractional;
  CompatibilityMatrix compatibility;
  bool strict = false;
  bool combined_output = false;  // one national file set instead of per-municipality
  unsigned parallelism = 0;      // 0 = hardware concurrency

  /// Loads the structured config file, then lets CLI flags override fields.
  static RunConfig from_file(const std::filesystem::path& path);

  /// Path existence/readability checks plus parallelism floor.
  /// Throws ConfigError.
  void validate() const;

  unsigned effective_parallelism() const;
};

}  // namespace geojobs
