#include "geojobs/face.hpp"

namespace geojobs {

std::optional<FaceCode> FaceCode::parse(std::string_view raw) {
  if (raw.size() < 15 || raw.size() > 25) return std::nullopt;
  for (char c : raw) {
    if (c < '0' || c > '9') return std::nullopt;
  }
  FaceCode fc;
  fc.code_.assign(raw);
  return fc;
}

}  // namespace geojobs
