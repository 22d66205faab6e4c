#include "geojobs/geojson_writer.hpp"

#include <stdexcept>

#include "geojobs/numfmt.hpp"

namespace geojobs {

namespace {

constexpr std::string_view kCollectionOpen = R"({"type":"FeatureCollection","features":[)";

void write_feature(std::ostream& out, const std::string& cod_face, const std::string& cep,
                   uint64_t non_residential, const std::string& jobs, const std::string& lon,
                   const std::string& lat, bool first) {
  out << (first ? "\n" : ",\n");
  out << R"({"type":"Feature","geometry":{"type":"Point","coordinates":[)" << lon << ',' << lat
      << R"(]},"properties":{"cod_face":")" << cod_face << R"(","CEP":")" << cep
      << R"(","non_residencial":)" << non_residential << R"(,"jobs":)" << jobs << "}}";
}

void close_collection(std::ostream& out, uint64_t count) {
  out << (count > 0 ? "\n]}\n" : "]}\n");
  out.flush();
  if (!out) throw std::runtime_error("geojson: sink write failure");
}

}  // namespace

uint64_t write_geojson(std::span<const JobPoint> rows, std::ostream& out) {
  out << kCollectionOpen;
  uint64_t written = 0;
  for (const auto& row : rows) {
    write_feature(out, row.face_code.str(), row.cep.digits(), row.non_residential,
                  format_jobs(row.jobs), format_coord(row.lon), format_coord(row.lat),
                  written == 0);
    ++written;
  }
  close_collection(out, written);
  return written;
}

GeoJsonStreamWriter::GeoJsonStreamWriter(std::ostream& out) : out_(out) {
  out_ << kCollectionOpen;
}

void GeoJsonStreamWriter::add(const CsvRow& row) {
  write_feature(out_, row.cod_face, row.cep, row.non_residential, row.jobs, row.lon, row.lat,
                count_ == 0);
  ++count_;
}

uint64_t GeoJsonStreamWriter::finish() {
  if (!finished_) {
    close_collection(out_, count_);
    finished_ = true;
  }
  return count_;
}

}  // namespace geojobs
