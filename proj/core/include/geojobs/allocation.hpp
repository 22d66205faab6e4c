#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "geojobs/cep.hpp"
#include "geojobs/face.hpp"
#include "geojobs/rational.hpp"

namespace geojobs {

enum class AllocationRule : int {
  WeightedBySpecies = 0,   // faces under the CEP, weighted by compatible counts
  UniformOverCepFaces = 1, // faces under the CEP, all compatible weights zero
  MunicipalityWide = 2,    // CEP unknown to the index; spread over the whole town
  Unallocated = 3,         // municipality has no faces at all
};

std::string_view rule_name(AllocationRule r);

/// One (establishment, face) slice of a job count. Amounts are exact; the
/// per-establishment sum always reproduces the input jobs.
struct Allocation {
  std::string establishment_id;
  FaceCode face_code;  // empty when rule == Unallocated
  Rational amount;
  AllocationRule rule = AllocationRule::WeightedBySpecies;
};

/// Final per-(face, CEP) output row.
struct JobPoint {
  FaceCode face_code;
  Cep cep;
  uint64_t non_residential = 0;
  Rational jobs;
  double lon = 0.0;
  double lat = 0.0;
};

struct UnallocatedEntry {
  std::string establishment_id;
  Cep cep;
  uint64_t jobs = 0;
  std::string reason;
};

/// Conservation ledger for one run: what came in, where it went, and why
/// anything fell through.
struct RunReport {
  uint64_t input_jobs_total = 0;  // accepted establishment rows, post filters
  Rational allocated_jobs_total;
  std::vector<UnallocatedEntry> unallocated;
  std::map<AllocationRule, uint64_t> rule_histogram;  // establishments per rule

  struct MunicipalityTotals {
    uint64_t input = 0;
    Rational allocated;
  };
  std::map<std::string, MunicipalityTotals> per_municipality;

  // Ingest accounting, merged over all readers.
  uint64_t rows_read = 0;
  uint64_t rows_accepted = 0;
  uint64_t rows_rejected = 0;
  uint64_t establishments_filtered = 0;  // excluded by year/municipality filters
  std::vector<std::string> rejection_samples;
  std::vector<std::string> degenerate_faces;  // zero-length or single-point geometry
  std::vector<std::string> warnings;

  uint64_t unallocated_jobs_total() const {
    uint64_t t = 0;
    for (const auto& u : unallocated) t += u.jobs;
    return t;
  }

  void merge(const RunReport& other);
};

}  // namespace geojobs
