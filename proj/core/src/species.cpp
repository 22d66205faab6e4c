#include "geojobs/species.hpp"

#include <charconv>

namespace geojobs {

std::optional<SpeciesCategory> species_from_code(int code) {
  if (code < 1 || code > kSpeciesCount) return std::nullopt;
  return static_cast<SpeciesCategory>(code);
}

std::optional<SpeciesCategory> species_from_field(std::string_view field) {
  size_t begin = 0, end = field.size();
  while (begin < end && (field[begin] == ' ' || field[begin] == '\t')) ++begin;
  while (end > begin && (field[end - 1] == ' ' || field[end - 1] == '\t')) --end;
  int code = 0;
  auto [ptr, ec] = std::from_chars(field.data() + begin, field.data() + end, code);
  if (ec != std::errc{} || ptr != field.data() + end) return std::nullopt;
  return species_from_code(code);
}

std::string_view species_name(SpeciesCategory s) {
  switch (s) {
    case SpeciesCategory::PrivateHousehold: return "private household";
    case SpeciesCategory::CollectiveHousehold: return "collective household";
    case SpeciesCategory::Agricultural: return "agricultural establishment";
    case SpeciesCategory::Educational: return "educational establishment";
    case SpeciesCategory::Health: return "health establishment";
    case SpeciesCategory::OtherPurpose: return "other-purpose establishment";
    case SpeciesCategory::UnderConstruction: return "under construction";
  }
  return "?";
}

std::string_view sector_name(SectorClass s) {
  switch (s) {
    case SectorClass::Education: return "education";
    case SectorClass::Health: return "health";
    case SectorClass::Agriculture: return "agriculture";
    case SectorClass::Other: return "other";
  }
  return "?";
}

std::optional<SectorClass> sector_from_name(std::string_view name) {
  if (name == "education") return SectorClass::Education;
  if (name == "health") return SectorClass::Health;
  if (name == "agriculture") return SectorClass::Agriculture;
  if (name == "other") return SectorClass::Other;
  return std::nullopt;
}

}  // namespace geojobs
