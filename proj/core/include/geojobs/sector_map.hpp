#pragma once

#include <map>
#include <string>
#include <string_view>

#include "geojobs/species.hpp"

namespace geojobs {

/// Prefix table from activity codes (CNAE-style, but opaque to us) to the
/// four sector classes. The longest matching prefix wins; codes that match
/// nothing fall through to Other. The table ships in config because no
/// single activity taxonomy is bundled.
class SectorMappingConfig {
 public:
  SectorMappingConfig() = default;

  /// Throws std::runtime_error on an empty prefix or unknown sector name.
  void add_prefix(std::string prefix, SectorClass sector);
  void add_prefix_named(std::string prefix, std::string_view sector_name);

  size_t size() const { return prefixes_.size(); }

  /// Longest-prefix classification of a raw activity code; total function.
  SectorClass classify(std::string_view raw_activity_code) const;

 private:
  std::map<std::string, SectorClass, std::less<>> prefixes_;
};

inline SectorClass sector_of(std::string_view raw_activity_code,
                             const SectorMappingConfig& mapping) {
  return mapping.classify(raw_activity_code);
}

}  // namespace geojobs
