#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geojobs/allocation.hpp"

namespace geojobs {

/// The published CSV contract. Header bytes are fixed (including the space
/// in "non residencial"); rows ascend by face code then CEP; LF endings;
/// number rendering per numfmt.
inline constexpr std::string_view kCsvHeader = "cod_face,CEP,non residencial,jobs,lon,lat";

/// One formatted output line, without the newline.
std::string csv_line(const JobPoint& row);

/// Header plus one line per row. Returns rows written. Stream failures
/// surface as std::runtime_error after the final flush check.
uint64_t write_csv(std::span<const JobPoint> rows, std::ostream& out);

/// A parsed output row; jobs/lon/lat hold the decimal strings as printed so
/// callers can compare bytes or parse as needed.
struct CsvRow {
  std::string cod_face;
  std::string cep;
  uint64_t non_residential = 0;
  std::string jobs;
  std::string lon;
  std::string lat;
};

/// Reads an emitted CSV back (header validated). Malformed lines throw;
/// this parser is for our own output, not for arbitrary files.
std::vector<CsvRow> read_output_csv(std::istream& in);

/// Sort key used for merged output: numeric face code order, then CEP.
bool csv_row_key_less(const CsvRow& a, const CsvRow& b);

}  // namespace geojobs
