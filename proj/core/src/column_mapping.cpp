#include "geojobs/column_mapping.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace geojobs {

void ColumnMapping::map_field(std::string name, FieldSpec spec) {
  if (fields_.count(name)) {
    throw std::runtime_error("mapping: field '" + name + "' mapped twice");
  }
  fields_.emplace(std::move(name), spec);
}

bool ColumnMapping::has_field(std::string_view name) const {
  return fields_.find(std::string(name)) != fields_.end();
}

const FieldSpec* ColumnMapping::field(std::string_view name) const {
  auto it = fields_.find(std::string(name));
  return it == fields_.end() ? nullptr : &it->second;
}

void ColumnMapping::validate(const std::vector<std::string>& required) const {
  for (const auto& name : required) {
    if (!fields_.count(name)) {
      throw std::runtime_error("mapping: required field '" + name + "' is not mapped");
    }
  }
  if (kind == SourceKind::FixedWidth) {
    std::vector<std::pair<size_t, size_t>> ranges;
    for (const auto& [name, spec] : fields_) {
      if (spec.byte_end <= spec.byte_begin) {
        throw std::runtime_error("mapping: field '" + name + "' has an empty byte range");
      }
      ranges.emplace_back(spec.byte_begin, spec.byte_end);
    }
    std::sort(ranges.begin(), ranges.end());
    for (size_t i = 1; i < ranges.size(); ++i) {
      if (ranges[i].first < ranges[i - 1].second) {
        throw std::runtime_error("mapping: fixed-width byte ranges overlap");
      }
    }
  } else {
    for (const auto& [name, spec] : fields_) {
      if (spec.column < 0) {
        throw std::runtime_error("mapping: field '" + name + "' has no column index");
      }
    }
  }
}

namespace {

using nlohmann::json;

ColumnMapping mapping_from_json(const json& j, const std::string& which) {
  ColumnMapping m;
  const std::string kind = j.value("kind", "delimited");
  if (kind == "delimited") {
    m.kind = SourceKind::Delimited;
  } else if (kind == "fixed-width") {
    m.kind = SourceKind::FixedWidth;
  } else {
    throw std::runtime_error("mapping '" + which + "': unknown kind '" + kind + "'");
  }
  const std::string delim = j.value("delimiter", ",");
  if (delim.size() != 1) {
    throw std::runtime_error("mapping '" + which + "': delimiter must be a single character");
  }
  m.delimiter = delim[0];
  const std::string enc = j.value("encoding", "utf-8");
  if (enc == "utf-8") {
    m.encoding = Encoding::Utf8;
  } else if (enc == "latin-1") {
    m.encoding = Encoding::Latin1;
  } else {
    throw std::runtime_error("mapping '" + which + "': unknown encoding '" + enc + "'");
  }
  m.has_header = j.value("header", false);
  m.municipality_from_code_prefix = j.value("municipality_from_code_prefix", false);

  if (!j.contains("fields") || !j.at("fields").is_object()) {
    throw std::runtime_error("mapping '" + which + "': missing fields object");
  }
  for (const auto& [name, val] : j.at("fields").items()) {
    FieldSpec spec;
    if (m.kind == SourceKind::Delimited) {
      if (!val.is_number_integer() || val.get<int>() < 0) {
        throw std::runtime_error("mapping '" + which + "': field '" + name +
                                 "' needs a non-negative column index");
      }
      spec.column = val.get<int>();
    } else {
      if (!val.is_array() || val.size() != 2) {
        throw std::runtime_error("mapping '" + which + "': field '" + name +
                                 "' needs a [begin, end) byte range");
      }
      spec.byte_begin = val.at(0).get<size_t>();
      spec.byte_end = val.at(1).get<size_t>();
    }
    m.map_field(name, spec);
  }
  return m;
}

}  // namespace

MappingBundle MappingBundle::from_json_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("mapping config: invalid JSON: ") + e.what());
  }
  MappingBundle b;
  for (const char* key : {"faces", "species", "establishments"}) {
    if (!j.contains(key)) {
      throw std::runtime_error(std::string("mapping config: missing '") + key + "' section");
    }
  }
  b.faces = mapping_from_json(j.at("faces"), "faces");
  b.species = mapping_from_json(j.at("species"), "species");
  b.establishments = mapping_from_json(j.at("establishments"), "establishments");

  b.faces.validate(b.faces.municipality_from_code_prefix
                       ? std::vector<std::string>{"face_code"}
                       : std::vector<std::string>{"face_code", "municipality"});
  if (!b.faces.has_field("geometry") && !(b.faces.has_field("lon") && b.faces.has_field("lat"))) {
    throw std::runtime_error(
        "mapping config: faces need a 'geometry' (WKT) field or 'lon'+'lat' fields");
  }
  b.species.validate(b.species.municipality_from_code_prefix ||
                             !b.species.has_field("municipality")
                         ? std::vector<std::string>{"face_code", "cep", "species"}
                         : std::vector<std::string>{"face_code", "cep", "species", "municipality"});
  b.establishments.validate({"id", "municipality", "cep", "activity", "jobs", "year"});

  if (j.contains("sector_prefixes")) {
    for (const auto& [prefix, sector] : j.at("sector_prefixes").items()) {
      b.sector_map.add_prefix_named(prefix, sector.get<std::string>());
    }
  }
  return b;
}

MappingBundle MappingBundle::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("mapping config: cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

MappingBundle MappingBundle::normalized_layout() {
  MappingBundle b;
  b.faces.kind = SourceKind::Delimited;
  b.faces.has_header = true;
  b.faces.map_field("face_code", {.column = 0});
  b.faces.map_field("municipality", {.column = 1});
  b.faces.map_field("geometry", {.column = 2});

  b.species.kind = SourceKind::Delimited;
  b.species.has_header = true;
  b.species.map_field("face_code", {.column = 0});
  b.species.map_field("municipality", {.column = 1});
  b.species.map_field("cep", {.column = 2});
  b.species.map_field("species", {.column = 3});

  b.establishments.kind = SourceKind::Delimited;
  b.establishments.has_header = true;
  b.establishments.map_field("id", {.column = 0});
  b.establishments.map_field("municipality", {.column = 1});
  b.establishments.map_field("cep", {.column = 2});
  b.establishments.map_field("activity", {.column = 3});
  b.establishments.map_field("jobs", {.column = 4});
  b.establishments.map_field("year", {.column = 5});

  b.sector_map.add_prefix_named("01", "agriculture");
  b.sector_map.add_prefix_named("02", "agriculture");
  b.sector_map.add_prefix_named("03", "agriculture");
  b.sector_map.add_prefix_named("85", "education");
  b.sector_map.add_prefix_named("86", "health");
  b.sector_map.add_prefix_named("87", "health");
  return b;
}

}  // namespace geojobs
