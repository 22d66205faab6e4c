#include "geojobs/cep_index.hpp"

#include <algorithm>

namespace geojobs {

CepIndex build_index(std::span<const StreetFace> faces) {
  CepIndex index;
  std::map<std::string, std::set<Cep>> ceps_per_municipality;

  for (uint32_t i = 0; i < faces.size(); ++i) {
    const StreetFace& face = faces[i];
    index.by_municipality[face.municipality].push_back(i);

    const Cep* last = nullptr;  // tally keys are (cep, species) sorted, so ceps repeat adjacently
    for (const auto& [key, count] : face.tally.counts()) {
      if (count == 0) continue;
      const Cep& cep = key.first;
      if (last && *last == cep) continue;
      index.by_cep[cep].push_back(i);
      ceps_per_municipality[face.municipality].insert(cep);
      last = &cep;
    }
  }

  auto by_code = [&](uint32_t a, uint32_t b) { return faces[a].face_code < faces[b].face_code; };
  for (auto& [cep, list] : index.by_cep) std::sort(list.begin(), list.end(), by_code);
  for (auto& [geo, list] : index.by_municipality) std::sort(list.begin(), list.end(), by_code);

  for (const auto& [geo, ceps] : ceps_per_municipality) {
    if (ceps.size() == 1) index.single_cep_municipalities.insert(geo);
  }
  return index;
}

}  // namespace geojobs
