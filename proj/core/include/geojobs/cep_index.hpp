#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "geojobs/face.hpp"

namespace geojobs {

/// Lookup structure over one batch of faces. Face lists are index positions
/// into the faces span given to build_index, ordered ascending by face code
/// so every downstream iteration is deterministic.
struct CepIndex {
  std::map<Cep, std::vector<uint32_t>> by_cep;
  std::map<std::string, std::vector<uint32_t>> by_municipality;
  /// Municipalities whose addresses all carry one identical CEP.
  std::set<std::string> single_cep_municipalities;

  bool has_cep(const Cep& cep) const { return by_cep.count(cep) != 0; }
};

/// A face is listed under CEP c iff its tally holds at least one address of
/// any species with that CEP.
CepIndex build_index(std::span<const StreetFace> faces);

}  // namespace geojobs
