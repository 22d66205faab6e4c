#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "geojobs/cep.hpp"
#include "geojobs/geometry.hpp"
#include "geojobs/species.hpp"

namespace geojobs {

/// Street-face identifier: an opaque string of 15-25 decimal digits.
/// Ordering is numeric (shorter strings sort first, then lexicographic),
/// which fixes the deterministic iteration order used everywhere downstream.
class FaceCode {
 public:
  FaceCode() = default;

  /// nullopt unless `raw` is 15-25 decimal digits.
  static std::optional<FaceCode> parse(std::string_view raw);

  const std::string& str() const { return code_; }
  bool empty() const { return code_.empty(); }

  /// First 7 digits read as a municipality geocode. Only meaningful when the
  /// source encodes it that way, so callers opt in via mapping config.
  std::string municipality_prefix() const { return code_.substr(0, 7); }

  friend std::strong_ordering operator<=>(const FaceCode& a, const FaceCode& b) {
    if (auto c = a.code_.size() <=> b.code_.size(); c != 0) return c;
    return a.code_.compare(b.code_) <=> 0;
  }
  bool operator==(const FaceCode&) const = default;

 private:
  std::string code_;
};

/// Per-face address counts keyed by (CEP, species). Built by streaming the
/// address file; one increment per address row.
class AddressTally {
 public:
  using Key = std::pair<Cep, SpeciesCategory>;

  void add(const Cep& cep, SpeciesCategory species, uint64_t n = 1) {
    counts_[{cep, species}] += n;
  }

  uint64_t count(const Cep& cep, SpeciesCategory species) const {
    auto it = counts_.find({cep, species});
    return it == counts_.end() ? 0 : it->second;
  }

  uint64_t total() const {
    uint64_t t = 0;
    for (const auto& [k, v] : counts_) t += v;
    return t;
  }

  bool empty() const { return counts_.empty(); }

  /// Deterministically ordered (Cep asc, species asc).
  const std::map<Key, uint64_t>& counts() const { return counts_; }

  void merge(const AddressTally& other) {
    for (const auto& [k, v] : other.counts_) counts_[k] += v;
  }

 private:
  std::map<Key, uint64_t> counts_;
};

struct StreetFace {
  FaceCode face_code;
  std::string municipality;  // 7-digit geocode
  Polyline geometry;
  AddressTally tally;
};

inline bool valid_municipality_geocode(std::string_view g) {
  if (g.size() != 7) return false;
  for (char c : g) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace geojobs
