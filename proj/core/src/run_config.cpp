#include "geojobs/run_config.hpp"

#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace geojobs {

namespace {

using nlohmann::json;

CompatibilityMatrix compatibility_from_json(const json& j) {
  CompatibilityMatrix m;
  for (const auto& [sector_str, species_list] : j.items()) {
    auto sector = sector_from_name(sector_str);
    if (!sector) throw ConfigError("config: unknown sector '" + sector_str + "'");
    if (!species_list.is_array() || species_list.empty()) {
      throw ConfigError("config: compatibility for '" + sector_str +
                        "' must be a non-empty array of species codes");
    }
    std::vector<SpeciesCategory> species;
    for (const auto& code : species_list) {
      auto s = species_from_code(code.get<int>());
      if (!s) {
        throw ConfigError("config: species code " + code.dump() + " out of range 1..7");
      }
      species.push_back(*s);
    }
    m.set_compatible(*sector, species);
  }
  return m;
}

}  // namespace

RunConfig RunConfig::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("config: invalid JSON in " + path.string() + ": " + e.what());
  }

  RunConfig c;
  c.faces_path = j.value("faces", "");
  c.species_path = j.value("species", "");
  c.establishments_path = j.value("establishments", "");
  c.mapping_path = j.value("mapping", "");
  c.out_dir = j.value("out", "");
  if (j.contains("year")) c.year_filter = j.at("year").get<int>();
  if (j.contains("municipalities")) {
    for (const auto& m : j.at("municipalities")) {
      c.municipality_filter.insert(m.get<std::string>());
    }
  }
  const std::string rounding = j.value("rounding", "fractional");
  if (rounding == "fractional") {
    c.rounding = RoundingMode::Fractional;
  } else if (rounding == "integer") {
    c.rounding = RoundingMode::LargestRemainder;
  } else {
    throw ConfigError("config: rounding must be 'fractional' or 'integer'");
  }
  if (j.contains("compatibility")) c.compatibility = compatibility_from_json(j.at("compatibility"));
  c.strict = j.value("strict", false);
  c.combined_output = j.value("combined", false);
  c.parallelism = j.value("jobs", 0u);
  return c;
}

void RunConfig::validate() const {
  auto must_be_readable = [](const std::filesystem::path& p, const char* what) {
    if (p.empty()) throw ConfigError(std::string("config: missing ") + what + " path");
    std::ifstream probe(p);
    if (!probe) throw InputError(std::string("input: cannot read ") + what + " at " + p.string());
  };
  must_be_readable(faces_path, "faces");
  must_be_readable(species_path, "species");
  must_be_readable(establishments_path, "establishments");
  if (!mapping_path.empty()) must_be_readable(mapping_path, "mapping");
  if (out_dir.empty()) throw ConfigError("config: missing output directory");
  for (const auto& geo : municipality_filter) {
    if (!valid_municipality_geocode(geo)) {
      throw ConfigError("config: '" + geo + "' is not a 7-digit municipality geocode");
    }
  }
}

unsigned RunConfig::effective_parallelism() const {
  if (parallelism > 0) return parallelism;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

}  // namespace geojobs
