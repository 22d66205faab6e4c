#include "geojobs/sector_map.hpp"

#include <stdexcept>

namespace geojobs {

void SectorMappingConfig::add_prefix(std::string prefix, SectorClass sector) {
  if (prefix.empty()) throw std::runtime_error("sector mapping: empty activity prefix");
  prefixes_[std::move(prefix)] = sector;
}

void SectorMappingConfig::add_prefix_named(std::string prefix, std::string_view name) {
  auto sector = sector_from_name(name);
  if (!sector) {
    throw std::runtime_error("sector mapping: unknown sector '" + std::string(name) +
                             "' (expected education|health|agriculture|other)");
  }
  add_prefix(std::move(prefix), *sector);
}

SectorClass SectorMappingConfig::classify(std::string_view code) const {
  // Trim the field; activity codes arrive as-is from the source file.
  while (!code.empty() && (code.front() == ' ' || code.front() == '\t')) code.remove_prefix(1);
  while (!code.empty() && (code.back() == ' ' || code.back() == '\t')) code.remove_suffix(1);

  // Longest match first: probe code, then each shorter prefix of it.
  for (size_t len = code.size(); len > 0; --len) {
    auto it = prefixes_.find(code.substr(0, len));
    if (it != prefixes_.end()) return it->second;
  }
  return SectorClass::Other;
}

}  // namespace geojobs
