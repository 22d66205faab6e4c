#pragma once

#include <filesystem>
#include <vector>

#include "geojobs/allocation.hpp"
#include "geojobs/readers.hpp"
#include "geojobs/run_config.hpp"

namespace geojobs {

/// End-to-end run: partition inputs by municipality, then per partition
/// ingest -> index -> allocate -> aggregate -> geometry -> export. Emits one
/// CSV/GeoJSON/report set per municipality (or one combined set), plus a
/// run-level report, under config.out_dir. The returned report satisfies
/// input == allocated + unallocated exactly.
///
/// Throws ConfigError / InputError / StrictViolation (CLI exit codes 1/2/4).
RunReport run(const RunConfig& config);

/// Reader pass over the inputs with no allocation: per-input row accounting
/// for the `inspect` subcommand.
struct InspectResult {
  IngestStats faces;
  IngestStats species;
  IngestStats establishments;
};

InspectResult inspect(const RunConfig& config);

}  // namespace geojobs
