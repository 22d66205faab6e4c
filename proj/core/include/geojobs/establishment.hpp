#pragma once

#include <cstdint>
#include <string>

#include "geojobs/cep.hpp"
#include "geojobs/species.hpp"

namespace geojobs {

/// Postal codes appear in the employment register only from this year on.
constexpr int kMinEstablishmentYear = 2014;

/// One employer at one postal code: the allocation source.
struct EstablishmentRecord {
  std::string establishment_id;
  std::string municipality;  // 7-digit geocode
  Cep cep;
  SectorClass sector = SectorClass::Other;
  uint64_t jobs = 0;
  int year = kMinEstablishmentYear;
};

}  // namespace geojobs
