#include "geojobs/readers.hpp"

#include <charconv>

namespace geojobs {

namespace {

std::optional<int64_t> parse_int(std::string_view field) {
  int64_t v = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size()) return std::nullopt;
  return v;
}

std::optional<double> parse_double(std::string_view field) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size()) return std::nullopt;
  return v;
}

// Geometry arrives as a WKT column, or as lon/lat columns for point sources.
std::optional<Polyline> geometry_from_row(const RowFields& row, const ColumnMapping& mapping) {
  if (mapping.has_field("geometry")) {
    auto wkt = row.get(mapping, "geometry");
    if (!wkt) return std::nullopt;
    return parse_wkt(*wkt);
  }
  auto lon_f = row.get(mapping, "lon");
  auto lat_f = row.get(mapping, "lat");
  if (!lon_f || !lat_f) return std::nullopt;
  auto lon = parse_double(*lon_f);
  auto lat = parse_double(*lat_f);
  if (!lon || !lat) return std::nullopt;
  Polyline p;
  p.vertices.push_back({*lon, *lat});
  return p;
}

std::optional<std::string> municipality_from_row(const RowFields& row,
                                                 const ColumnMapping& mapping,
                                                 const FaceCode& face_code) {
  if (mapping.municipality_from_code_prefix && !mapping.has_field("municipality")) {
    return face_code.municipality_prefix();
  }
  auto field = row.get(mapping, "municipality");
  if (!field) return std::nullopt;
  std::string geo(*field);
  if (!valid_municipality_geocode(geo)) return std::nullopt;
  return geo;
}

}  // namespace

FaceReader::FaceReader(std::istream& in, const ColumnMapping& mapping)
    : lines_(in, mapping.encoding), mapping_(mapping) {}

std::optional<FaceRow> FaceReader::next() {
  std::string_view line;
  while (lines_.next(line)) {
    if (mapping_.has_header && !header_skipped_) {
      header_skipped_ = true;
      continue;
    }
    if (line.empty()) continue;
    ++stats_.rows_read;
    row_.split(line, mapping_);

    auto code_field = row_.get(mapping_, "face_code");
    if (!code_field || code_field->empty()) {
      stats_.reject(lines_.line_number(), "MissingField: face_code");
      continue;
    }
    auto code = FaceCode::parse(*code_field);
    if (!code) {
      stats_.reject(lines_.line_number(), "MalformedFaceCode: '" + std::string(*code_field) + "'");
      continue;
    }
    if (!seen_codes_.insert(code->str()).second) {
      stats_.reject(lines_.line_number(), "DuplicateFaceCode: " + code->str());
      continue;
    }
    auto municipality = municipality_from_row(row_, mapping_, *code);
    if (!municipality) {
      stats_.reject(lines_.line_number(), "MissingField: municipality");
      continue;
    }
    auto geometry = geometry_from_row(row_, mapping_);
    if (!geometry) {
      stats_.reject(lines_.line_number(), "MalformedGeometry");
      continue;
    }
    bool coords_ok = true;
    for (const auto& v : geometry->vertices) {
      if (!coords_in_world(v)) coords_ok = false;
    }
    if (!coords_ok) {
      stats_.reject(lines_.line_number(), "MalformedGeometry: coordinates out of world bounds");
      continue;
    }
    ++stats_.rows_accepted;
    FaceRow out;
    out.face_code = *code;
    out.municipality = std::move(*municipality);
    out.degenerate = geometry->is_point() || planar_length(*geometry) <= 0.0;
    out.geometry = std::move(*geometry);
    return out;
  }
  return std::nullopt;
}

SpeciesReader::SpeciesReader(std::istream& in, const ColumnMapping& mapping)
    : lines_(in, mapping.encoding), mapping_(mapping) {}

std::optional<AddressRow> SpeciesReader::next() {
  std::string_view line;
  while (lines_.next(line)) {
    if (mapping_.has_header && !header_skipped_) {
      header_skipped_ = true;
      continue;
    }
    if (line.empty()) continue;
    ++stats_.rows_read;
    row_.split(line, mapping_);

    auto code_field = row_.get(mapping_, "face_code");
    if (!code_field || code_field->empty()) {
      stats_.reject(lines_.line_number(), "MissingField: face_code");
      continue;
    }
    auto code = FaceCode::parse(*code_field);
    if (!code) {
      stats_.reject(lines_.line_number(), "MalformedFaceCode: '" + std::string(*code_field) + "'");
      continue;
    }
    auto cep_field = row_.get(mapping_, "cep");
    if (!cep_field || cep_field->empty()) {
      stats_.reject(lines_.line_number(), "MissingField: cep");
      continue;
    }
    auto cep = normalize_cep(*cep_field);
    if (!cep) {
      stats_.reject(lines_.line_number(), "MalformedCep: '" + std::string(*cep_field) + "'");
      continue;
    }
    auto species_field = row_.get(mapping_, "species");
    if (!species_field || species_field->empty()) {
      stats_.reject(lines_.line_number(), "MissingField: species");
      continue;
    }
    auto species = species_from_field(*species_field);
    if (!species) {
      stats_.reject(lines_.line_number(),
                    "UnknownSpecies: '" + std::string(*species_field) + "'");
      continue;
    }
    ++stats_.rows_accepted;
    return AddressRow{std::move(*code), std::move(*cep), *species};
  }
  return std::nullopt;
}

EstablishmentReader::EstablishmentReader(std::istream& in, const ColumnMapping& mapping,
                                         const SectorMappingConfig& sector_map)
    : lines_(in, mapping.encoding), mapping_(mapping), sector_map_(sector_map) {}

std::optional<EstablishmentRecord> EstablishmentReader::next() {
  std::string_view line;
  while (lines_.next(line)) {
    if (mapping_.has_header && !header_skipped_) {
      header_skipped_ = true;
      continue;
    }
    if (line.empty()) continue;
    ++stats_.rows_read;
    row_.split(line, mapping_);

    auto id = row_.get(mapping_, "id");
    if (!id || id->empty()) {
      stats_.reject(lines_.line_number(), "MissingField: id");
      continue;
    }
    auto muni = row_.get(mapping_, "municipality");
    if (!muni || !valid_municipality_geocode(*muni)) {
      stats_.reject(lines_.line_number(), "MissingField: municipality");
      continue;
    }
    auto cep_field = row_.get(mapping_, "cep");
    if (!cep_field || cep_field->empty()) {
      stats_.reject(lines_.line_number(), "MissingField: cep");
      continue;
    }
    auto cep = normalize_cep(*cep_field);
    if (!cep) {
      stats_.reject(lines_.line_number(), "MalformedCep: '" + std::string(*cep_field) + "'");
      continue;
    }
    auto activity = row_.get(mapping_, "activity");
    if (!activity) {
      stats_.reject(lines_.line_number(), "MissingField: activity");
      continue;
    }
    auto jobs_field = row_.get(mapping_, "jobs");
    if (!jobs_field || jobs_field->empty()) {
      stats_.reject(lines_.line_number(), "MissingField: jobs");
      continue;
    }
    auto jobs = parse_int(*jobs_field);
    if (!jobs) {
      stats_.reject(lines_.line_number(), "MalformedJobs: '" + std::string(*jobs_field) + "'");
      continue;
    }
    if (*jobs < 0) {
      stats_.reject(lines_.line_number(), "NegativeJobs");
      continue;
    }
    auto year_field = row_.get(mapping_, "year");
    if (!year_field || year_field->empty()) {
      stats_.reject(lines_.line_number(), "MissingField: year");
      continue;
    }
    auto year = parse_int(*year_field);
    if (!year) {
      stats_.reject(lines_.line_number(), "MalformedYear: '" + std::string(*year_field) + "'");
      continue;
    }
    if (*year < kMinEstablishmentYear) {
      stats_.reject(lines_.line_number(), "BadYear: " + std::to_string(*year));
      continue;
    }
    ++stats_.rows_accepted;
    EstablishmentRecord rec;
    rec.establishment_id = std::string(*id);
    rec.municipality = std::string(*muni);
    rec.cep = std::move(*cep);
    rec.sector = sector_map_.classify(*activity);
    rec.jobs = static_cast<uint64_t>(*jobs);
    rec.year = static_cast<int>(*year);
    return rec;
  }
  return std::nullopt;
}

std::map<FaceCode, AddressTally> build_tallies(SpeciesReader& reader) {
  std::map<FaceCode, AddressTally> tallies;
  while (auto row = reader.next()) {
    tallies[row->face_code].add(row->cep, row->species);
  }
  return tallies;
}

std::map<FaceCode, AddressTally> build_tallies(std::span<const AddressRow> rows) {
  std::map<FaceCode, AddressTally> tallies;
  for (const auto& row : rows) {
    tallies[row.face_code].add(row.cep, row.species);
  }
  return tallies;
}

}  // namespace geojobs
