#pragma once

#include <cstdint>
#include <ostream>
#include <span>

#include "geojobs/allocation.hpp"
#include "geojobs/csv_io.hpp"

namespace geojobs {

/// RFC 7946 FeatureCollection of Point features, one per output row, in the
/// same order as the CSV. Written by hand so the number rendering is
/// byte-for-byte the CSV's.
uint64_t write_geojson(std::span<const JobPoint> rows, std::ostream& out);

/// Streaming variant used by the merged-output path, which sees rows as
/// already-formatted CSV fields.
class GeoJsonStreamWriter {
 public:
  explicit GeoJsonStreamWriter(std::ostream& out);
  void add(const CsvRow& row);
  uint64_t finish();  // closes the collection, returns feature count

 private:
  std::ostream& out_;
  uint64_t count_ = 0;
  bool finished_ = false;
};

}  // namespace geojobs
