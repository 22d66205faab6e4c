#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "geojobs/allocation.hpp"
#include "geojobs/cep_index.hpp"
#include "geojobs/establishment.hpp"
#include "geojobs/face.hpp"

namespace geojobs {

/// Which address species count as plausible job hosts for each sector.
/// Defaults: Education->{4}, Health->{5}, Agriculture->{3}, Other->{6}.
/// Residential species (1, 2) and under-construction (7) carry no weight
/// unless a config override says otherwise.
class CompatibilityMatrix {
 public:
  CompatibilityMatrix();  // defaults above

  /// Replaces the species set for one sector. Throws on an empty set.
  void set_compatible(SectorClass sector, const std::vector<SpeciesCategory>& species);

  bool is_compatible(SectorClass sector, SpeciesCategory species) const {
    return (masks_[static_cast<size_t>(sector)] >> species_code(species)) & 1u;
  }
  std::vector<SpeciesCategory> compatible(SectorClass sector) const;

 private:
  std::array<uint8_t, kSectorCount> masks_{};  // bit i = species code i
};

/// Per-face weight of one establishment's CEP: the number of addresses of
/// compatible species that face holds under that CEP. `face` indexes into
/// the faces span the index was built from; entries ascend by face code.
struct WeightEntry {
  uint32_t face = 0;
  uint64_t weight = 0;
};

struct WeightVector {
  std::vector<WeightEntry> entries;
  uint64_t total = 0;

  bool all_zero() const { return total == 0; }
};

/// Weights for the faces sharing the establishment's CEP. nullopt when the
/// CEP is absent from the index, which routes the caller to the fallback.
std::optional<WeightVector> weights_for(const EstablishmentRecord& e, const CepIndex& index,
                                        const CompatibilityMatrix& matrix,
                                        std::span<const StreetFace> faces);

/// One establishment's amounts over a face set, before any rounding.
struct AllocationAmounts {
  AllocationRule rule = AllocationRule::WeightedBySpecies;
  std::vector<std::pair<uint32_t, Rational>> amounts;  // (face index, amount)
};

/// Proportional split of e.jobs over w: weighted when any weight is
/// positive, uniform over the same faces otherwise. The amounts always sum
/// to e.jobs exactly.
AllocationAmounts allocate(const EstablishmentRecord& e, const WeightVector& w);

/// The path for CEPs with no faces: spread over every face of the
/// establishment's municipality, weighted by compatible counts summed over
/// all CEPs (uniform when that sum is zero). Municipalities without faces
/// yield rule == Unallocated and no amounts.
AllocationAmounts allocate_fallback(const EstablishmentRecord& e, const CepIndex& index,
                                    const CompatibilityMatrix& matrix,
                                    std::span<const StreetFace> faces);

/// weights_for + allocate + allocate_fallback in one call.
AllocationAmounts allocate_establishment(const EstablishmentRecord& e, const CepIndex& index,
                                         const CompatibilityMatrix& matrix,
                                         std::span<const StreetFace> faces);

/// Public-record form of the amounts.
std::vector<Allocation> to_allocations(const EstablishmentRecord& e,
                                       const AllocationAmounts& amounts,
                                       std::span<const StreetFace> faces);

enum class RoundingMode { Fractional, LargestRemainder };

/// Integer apportionment of one establishment's amounts: floor everything,
/// then hand the leftover units to the largest fractional parts, ties broken
/// by ascending face code (amounts already ascend by code, so a stable sort
/// on the fraction settles ties). Preserves the establishment total exactly.
/// Fractional mode is the identity.
void round_to_integers(AllocationAmounts& amounts, uint64_t jobs, RoundingMode mode);

/// Aggregation key: (face, the CEP the jobs were matched under). CEP-matched
/// rules use the establishment's CEP; the municipality-wide fallback books
/// under the face's busiest CEP since the establishment's own CEP has no
/// face evidence (the face's address profile is the best anchor we have).
struct AggregationKey {
  uint32_t face = 0;
  Cep cep;

  auto operator<=>(const AggregationKey&) const = default;
};

/// Streaming per-(face, CEP) job accumulator for one batch of faces.
class Aggregator {
 public:
  explicit Aggregator(std::span<const StreetFace> faces);

  /// Adds one establishment's amounts. Unallocated amounts are ignored here;
  /// the caller books them in the run report.
  void add(const EstablishmentRecord& e, const AllocationAmounts& amounts);

  /// Partial output rows (geometry not yet attached): ascending face code
  /// then CEP, rows with zero jobs omitted. non_residential is the tally
  /// total of species 3-6 under the row's CEP.
  std::vector<JobPoint> rows() const;

  const std::map<AggregationKey, Rational>& cells() const { return cells_; }

 private:
  const Cep& booking_cep(uint32_t face_idx, const Cep& establishment_cep, AllocationRule rule);

  std::span<const StreetFace> faces_;
  std::map<AggregationKey, Rational> cells_;
  std::vector<std::optional<Cep>> primary_cep_;  // lazy per-face busiest CEP
};

uint64_t non_residential_count(const AddressTally& tally, const Cep& cep);

}  // namespace geojobs
