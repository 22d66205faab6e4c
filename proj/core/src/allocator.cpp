#include "geojobs/allocator.hpp"

#include <algorithm>
#include <stdexcept>

namespace geojobs {

CompatibilityMatrix::CompatibilityMatrix() {
  set_compatible(SectorClass::Education, {SpeciesCategory::Educational});
  set_compatible(SectorClass::Health, {SpeciesCategory::Health});
  set_compatible(SectorClass::Agriculture, {SpeciesCategory::Agricultural});
  set_compatible(SectorClass::Other, {SpeciesCategory::OtherPurpose});
}

void CompatibilityMatrix::set_compatible(SectorClass sector,
                                         const std::vector<SpeciesCategory>& species) {
  if (species.empty()) {
    throw std::runtime_error("compatibility matrix: empty species set for sector '" +
                             std::string(sector_name(sector)) + "'");
  }
  uint8_t mask = 0;
  for (SpeciesCategory s : species) mask |= static_cast<uint8_t>(1u << species_code(s));
  masks_[static_cast<size_t>(sector)] = mask;
}

std::vector<SpeciesCategory> CompatibilityMatrix::compatible(SectorClass sector) const {
  std::vector<SpeciesCategory> out;
  for (int code = 1; code <= kSpeciesCount; ++code) {
    auto s = static_cast<SpeciesCategory>(code);
    if (is_compatible(sector, s)) out.push_back(s);
  }
  return out;
}

namespace {

uint64_t compatible_count_under_cep(const AddressTally& tally, const Cep& cep,
                                    SectorClass sector, const CompatibilityMatrix& matrix) {
  uint64_t weight = 0;
  for (const auto& [key, count] : tally.counts()) {
    if (key.first != cep) continue;
    if (matrix.is_compatible(sector, key.second)) weight += count;
  }
  return weight;
}

uint64_t compatible_count_all_ceps(const AddressTally& tally, SectorClass sector,
                                   const CompatibilityMatrix& matrix) {
  uint64_t weight = 0;
  for (const auto& [key, count] : tally.counts()) {
    if (matrix.is_compatible(sector, key.second)) weight += count;
  }
  return weight;
}

AllocationAmounts split_over(const std::vector<WeightEntry>& entries, uint64_t total_weight,
                             uint64_t jobs, AllocationRule weighted_rule,
                             AllocationRule uniform_rule) {
  AllocationAmounts out;
  out.amounts.reserve(entries.size());
  if (total_weight > 0) {
    out.rule = weighted_rule;
    for (const auto& e : entries) {
      out.amounts.emplace_back(e.face, Rational(BigInt(jobs) * e.weight, BigInt(total_weight)));
    }
  } else {
    out.rule = uniform_rule;
    const Rational share(BigInt(jobs), BigInt(entries.size()));
    for (const auto& e : entries) out.amounts.emplace_back(e.face, share);
  }
  return out;
}

}  // namespace

std::optional<WeightVector> weights_for(const EstablishmentRecord& e, const CepIndex& index,
                                        const CompatibilityMatrix& matrix,
                                        std::span<const StreetFace> faces) {
  auto it = index.by_cep.find(e.cep);
  if (it == index.by_cep.end() || it->second.empty()) return std::nullopt;

  WeightVector w;
  w.entries.reserve(it->second.size());
  for (uint32_t face_idx : it->second) {
    const uint64_t weight =
        compatible_count_under_cep(faces[face_idx].tally, e.cep, e.sector, matrix);
    w.entries.push_back({face_idx, weight});
    w.total += weight;
  }
  return w;
}

AllocationAmounts allocate(const EstablishmentRecord& e, const WeightVector& w) {
  if (w.entries.empty()) {
    throw std::invalid_argument("allocate: empty weight vector");
  }
  return split_over(w.entries, w.total, e.jobs, AllocationRule::WeightedBySpecies,
                    AllocationRule::UniformOverCepFaces);
}

AllocationAmounts allocate_fallback(const EstablishmentRecord& e, const CepIndex& index,
                                    const CompatibilityMatrix& matrix,
                                    std::span<const StreetFace> faces) {
  auto it = index.by_municipality.find(e.municipality);
  if (it == index.by_municipality.end() || it->second.empty()) {
    AllocationAmounts out;
    out.rule = AllocationRule::Unallocated;
    return out;
  }
  WeightVector w;
  w.entries.reserve(it->second.size());
  for (uint32_t face_idx : it->second) {
    const uint64_t weight = compatible_count_all_ceps(faces[face_idx].tally, e.sector, matrix);
    w.entries.push_back({face_idx, weight});
    w.total += weight;
  }
  return split_over(w.entries, w.total, e.jobs, AllocationRule::MunicipalityWide,
                    AllocationRule::MunicipalityWide);
}

AllocationAmounts allocate_establishment(const EstablishmentRecord& e, const CepIndex& index,
                                         const CompatibilityMatrix& matrix,
                                         std::span<const StreetFace> faces) {
  if (auto w = weights_for(e, index, matrix, faces)) return allocate(e, *w);
  return allocate_fallback(e, index, matrix, faces);
}

std::vector<Allocation> to_allocations(const EstablishmentRecord& e,
                                       const AllocationAmounts& amounts,
                                       std::span<const StreetFace> faces) {
  std::vector<Allocation> out;
  if (amounts.rule == AllocationRule::Unallocated) {
    out.push_back({e.establishment_id, FaceCode{}, Rational(e.jobs), AllocationRule::Unallocated});
    return out;
  }
  out.reserve(amounts.amounts.size());
  for (const auto& [face_idx, amount] : amounts.amounts) {
    out.push_back({e.establishment_id, faces[face_idx].face_code, amount, amounts.rule});
  }
  return out;
}

void round_to_integers(AllocationAmounts& amounts, uint64_t jobs, RoundingMode mode) {
  if (mode == RoundingMode::Fractional) return;
  if (amounts.rule == AllocationRule::Unallocated || amounts.amounts.empty()) return;

  struct Slot {
    size_t pos;
    Rational frac;
  };
  std::vector<Slot> slots;
  slots.reserve(amounts.amounts.size());
  BigInt floor_sum = 0;
  for (size_t i = 0; i < amounts.amounts.size(); ++i) {
    Rational& amount = amounts.amounts[i].second;
    BigInt fl = rational_floor(amount);
    slots.push_back({i, amount - Rational(fl)});
    amount = Rational(fl);
    floor_sum += fl;
  }
  BigInt leftover = BigInt(jobs) - floor_sum;

  // Largest fractional part first; equal fractions go to the lower face
  // code. amounts.amounts already ascend by face code, so a stable sort on
  // the fraction alone preserves that tie order.
  std::stable_sort(slots.begin(), slots.end(),
                   [](const Slot& a, const Slot& b) { return a.frac > b.frac; });
  for (size_t i = 0; leftover > 0 && i < slots.size(); ++i, --leftover) {
    amounts.amounts[slots[i].pos].second += 1;
  }
}

uint64_t non_residential_count(const AddressTally& tally, const Cep& cep) {
  uint64_t n = 0;
  for (SpeciesCategory s : {SpeciesCategory::Agricultural, SpeciesCategory::Educational,
                            SpeciesCategory::Health, SpeciesCategory::OtherPurpose}) {
    n += tally.count(cep, s);
  }
  return n;
}

Aggregator::Aggregator(std::span<const StreetFace> faces)
    : faces_(faces), primary_cep_(faces.size()) {}

const Cep& Aggregator::booking_cep(uint32_t face_idx, const Cep& establishment_cep,
                                   AllocationRule rule) {
  if (rule != AllocationRule::MunicipalityWide) return establishment_cep;

  auto& cached = primary_cep_[face_idx];
  if (!cached) {
    // Busiest CEP of the face: highest address count, ties to the lower CEP.
    std::map<Cep, uint64_t> per_cep;
    for (const auto& [key, count] : faces_[face_idx].tally.counts()) per_cep[key.first] += count;
    const Cep* best = nullptr;
    uint64_t best_count = 0;
    for (const auto& [cep, count] : per_cep) {
      if (count > best_count) {
        best = &cep;
        best_count = count;
      }
    }
    if (!best) return establishment_cep;  // face with no addresses: keep the source CEP
    cached = *best;
  }
  return *cached;
}

void Aggregator::add(const EstablishmentRecord& e, const AllocationAmounts& amounts) {
  if (amounts.rule == AllocationRule::Unallocated) return;
  for (const auto& [face_idx, amount] : amounts.amounts) {
    if (amount == 0) continue;
    cells_[{face_idx, booking_cep(face_idx, e.cep, amounts.rule)}] += amount;
  }
}

std::vector<JobPoint> Aggregator::rows() const {
  std::vector<JobPoint> rows;
  rows.reserve(cells_.size());
  for (const auto& [key, jobs] : cells_) {
    if (jobs == 0) continue;
    JobPoint row;
    row.face_code = faces_[key.face].face_code;
    row.cep = key.cep;
    row.non_residential = non_residential_count(faces_[key.face].tally, key.cep);
    row.jobs = jobs;
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const JobPoint& a, const JobPoint& b) {
    if (a.face_code != b.face_code) return a.face_code < b.face_code;
    return a.cep < b.cep;
  });
  return rows;
}

}  // namespace geojobs
