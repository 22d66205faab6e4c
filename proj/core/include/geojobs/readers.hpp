#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "geojobs/column_mapping.hpp"
#include "geojobs/establishment.hpp"
#include "geojobs/face.hpp"
#include "geojobs/line_reader.hpp"

namespace geojobs {

/// Row accounting for one reader over one input. rows_read is always
/// rows_accepted + rows_rejected; dirty rows are counted and sampled,
/// never silently dropped.
struct IngestStats {
  uint64_t rows_read = 0;
  uint64_t rows_accepted = 0;
  uint64_t rows_rejected = 0;
  std::vector<std::pair<uint64_t, std::string>> rejection_samples;

  static constexpr size_t kMaxSamples = 32;

  void reject(uint64_t line, std::string reason) {
    ++rows_rejected;
    if (rejection_samples.size() < kMaxSamples) {
      rejection_samples.emplace_back(line, std::move(reason));
    }
  }

  void merge(const IngestStats& other) {
    rows_read += other.rows_read;
    rows_accepted += other.rows_accepted;
    rows_rejected += other.rows_rejected;
    for (const auto& s : other.rejection_samples) {
      if (rejection_samples.size() >= kMaxSamples) break;
      rejection_samples.push_back(s);
    }
  }
};

struct FaceRow {
  FaceCode face_code;
  std::string municipality;
  Polyline geometry;
  bool degenerate = false;  // single point or zero-length line
};

/// Streaming reader of face geometry rows. Duplicate face codes within the
/// stream are rejected (first occurrence wins). Memory grows only with the
/// number of distinct codes seen in this stream, which is why the pipeline
/// feeds it one municipality partition at a time.
class FaceReader {
 public:
  FaceReader(std::istream& in, const ColumnMapping& mapping);

  std::optional<FaceRow> next();
  const IngestStats& stats() const { return stats_; }

 private:
  LineReader lines_;
  const ColumnMapping& mapping_;
  RowFields row_;
  IngestStats stats_;
  std::unordered_set<std::string> seen_codes_;
  bool header_skipped_ = false;
};

struct AddressRow {
  FaceCode face_code;
  Cep cep;
  SpeciesCategory species = SpeciesCategory::OtherPurpose;
};

/// Streaming reader of per-address species rows; one row is one address.
class SpeciesReader {
 public:
  SpeciesReader(std::istream& in, const ColumnMapping& mapping);

  std::optional<AddressRow> next();
  const IngestStats& stats() const { return stats_; }

 private:
  LineReader lines_;
  const ColumnMapping& mapping_;
  RowFields row_;
  IngestStats stats_;
  bool header_skipped_ = false;
};

/// Streaming reader of establishment rows.
class EstablishmentReader {
 public:
  EstablishmentReader(std::istream& in, const ColumnMapping& mapping,
                      const SectorMappingConfig& sector_map);

  std::optional<EstablishmentRecord> next();
  const IngestStats& stats() const { return stats_; }

 private:
  LineReader lines_;
  const ColumnMapping& mapping_;
  const SectorMappingConfig& sector_map_;
  RowFields row_;
  IngestStats stats_;
  bool header_skipped_ = false;
};

/// Aggregates an address stream into per-face tallies. Associative and
/// order-insensitive: any permutation of the stream builds the same mapping.
std::map<FaceCode, AddressTally> build_tallies(SpeciesReader& reader);
std::map<FaceCode, AddressTally> build_tallies(std::span<const AddressRow> rows);

}  // namespace geojobs
