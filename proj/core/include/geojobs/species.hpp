#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace geojobs {

/// The national address register classifies every address into one of seven
/// species. Codes are stable and appear verbatim in the input files.
enum class SpeciesCategory : int {
  PrivateHousehold = 1,
  CollectiveHousehold = 2,
  Agricultural = 3,
  Educational = 4,
  Health = 5,
  OtherPurpose = 6,
  UnderConstruction = 7,
};

constexpr int kSpeciesCount = 7;

std::optional<SpeciesCategory> species_from_code(int code);
std::optional<SpeciesCategory> species_from_field(std::string_view field);
constexpr int species_code(SpeciesCategory s) { return static_cast<int>(s); }
std::string_view species_name(SpeciesCategory s);

/// Sector of an employer, reduced to the four classes that matter for
/// matching against address species.
enum class SectorClass : int {
  Education = 0,
  Health = 1,
  Agriculture = 2,
  Other = 3,
};

constexpr int kSectorCount = 4;

std::string_view sector_name(SectorClass s);
std::optional<SectorClass> sector_from_name(std::string_view name);

}  // namespace geojobs
