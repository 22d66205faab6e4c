#include "geojobs/csv_io.hpp"

#include <charconv>
#include <stdexcept>

#include "geojobs/numfmt.hpp"

namespace geojobs {

std::string csv_line(const JobPoint& row) {
  std::string line;
  line.reserve(64);
  line += row.face_code.str();
  line += ',';
  line += row.cep.digits();
  line += ',';
  line += std::to_string(row.non_residential);
  line += ',';
  line += format_jobs(row.jobs);
  line += ',';
  line += format_coord(row.lon);
  line += ',';
  line += format_coord(row.lat);
  return line;
}

uint64_t write_csv(std::span<const JobPoint> rows, std::ostream& out) {
  out << kCsvHeader << '\n';
  uint64_t written = 0;
  for (const auto& row : rows) {
    out << csv_line(row) << '\n';
    ++written;
  }
  out.flush();
  if (!out) throw std::runtime_error("csv: sink write failure");
  return written;
}

static std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::vector<CsvRow> read_output_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("csv: empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw std::runtime_error("csv: unexpected header '" + line + "'");

  std::vector<CsvRow> rows;
  uint64_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_commas(line);
    if (fields.size() != 6) {
      throw std::runtime_error("csv: line " + std::to_string(lineno) + ": expected 6 fields");
    }
    CsvRow row;
    row.cod_face = std::string(fields[0]);
    row.cep = std::string(fields[1]);
    auto [ptr, ec] =
        std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(), row.non_residential);
    if (ec != std::errc{} || ptr != fields[2].data() + fields[2].size()) {
      throw std::runtime_error("csv: line " + std::to_string(lineno) + ": bad count");
    }
    row.jobs = std::string(fields[3]);
    row.lon = std::string(fields[4]);
    row.lat = std::string(fields[5]);
    rows.push_back(std::move(row));
  }
  return rows;
}

bool csv_row_key_less(const CsvRow& a, const CsvRow& b) {
  if (a.cod_face.size() != b.cod_face.size()) return a.cod_face.size() < b.cod_face.size();
  if (int c = a.cod_face.compare(b.cod_face); c != 0) return c < 0;
  return a.cep < b.cep;
}

}  // namespace geojobs
