#pragma once

#include <ostream>

#include "geojobs/allocation.hpp"

namespace geojobs {

/// Human-readable run summary: totals, rule histogram, unallocated ledger,
/// per-municipality conservation table.
void write_report_text(const RunReport& report, std::ostream& out);

/// Machine-readable twin of the text report. Keys are emitted in a fixed
/// order and exact totals are carried as rational strings, so identical runs
/// produce identical bytes.
void write_report_json(const RunReport& report, std::ostream& out);

}  // namespace geojobs
