#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geojobs/sector_map.hpp"

namespace geojobs {

enum class SourceKind { Delimited, FixedWidth };
enum class Encoding { Utf8, Latin1 };

/// Where one logical field lives in a source row: a column index for
/// delimited files, a [begin, end) byte range for fixed-width files.
struct FieldSpec {
  int column = -1;
  size_t byte_begin = 0;
  size_t byte_end = 0;
};

/// Declarative layout of one input file. The official register layouts vary
/// by release year, so layouts are config, not code.
class ColumnMapping {
 public:
  SourceKind kind = SourceKind::Delimited;
  char delimiter = ',';
  Encoding encoding = Encoding::Utf8;
  bool has_header = false;
  /// Faces/species sources may omit a municipality column and encode the
  /// geocode in the first 7 digits of the face code instead.
  bool municipality_from_code_prefix = false;

  void map_field(std::string name, FieldSpec spec);
  bool has_field(std::string_view name) const;
  const FieldSpec* field(std::string_view name) const;

  /// Throws std::runtime_error naming any missing/duplicate required field
  /// or overlapping fixed-width ranges.
  void validate(const std::vector<std::string>& required_fields) const;

  ColumnMapping without_header() const {
    ColumnMapping m = *this;
    m.has_header = false;
    return m;
  }

  const std::map<std::string, FieldSpec>& fields() const { return fields_; }

 private:
  std::map<std::string, FieldSpec> fields_;
};

/// The three per-file mappings plus the sector prefix table, loaded from one
/// JSON document (see docs/mapping-config.md).
struct MappingBundle {
  ColumnMapping faces;
  ColumnMapping species;
  ColumnMapping establishments;
  SectorMappingConfig sector_map;

  static MappingBundle load(const std::filesystem::path& path);
  static MappingBundle from_json_text(std::string_view text);

  /// Mapping bundle used by the synthetic generator's normalized layouts.
  static MappingBundle normalized_layout();
};

}  // namespace geojobs
