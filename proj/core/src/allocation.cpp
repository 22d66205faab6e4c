#include "geojobs/allocation.hpp"

namespace geojobs {

std::string_view rule_name(AllocationRule r) {
  switch (r) {
    case AllocationRule::WeightedBySpecies: return "weighted_by_species";
    case AllocationRule::UniformOverCepFaces: return "uniform_over_cep_faces";
    case AllocationRule::MunicipalityWide: return "municipality_wide";
    case AllocationRule::Unallocated: return "unallocated";
  }
  return "?";
}

void RunReport::merge(const RunReport& other) {
  input_jobs_total += other.input_jobs_total;
  allocated_jobs_total += other.allocated_jobs_total;
  unallocated.insert(unallocated.end(), other.unallocated.begin(), other.unallocated.end());
  for (const auto& [rule, n] : other.rule_histogram) rule_histogram[rule] += n;
  for (const auto& [geo, t] : other.per_municipality) {
    auto& mine = per_municipality[geo];
    mine.input += t.input;
    mine.allocated += t.allocated;
  }
  rows_read += other.rows_read;
  rows_accepted += other.rows_accepted;
  rows_rejected += other.rows_rejected;
  establishments_filtered += other.establishments_filtered;
  rejection_samples.insert(rejection_samples.end(), other.rejection_samples.begin(),
                           other.rejection_samples.end());
  degenerate_faces.insert(degenerate_faces.end(), other.degenerate_faces.begin(),
                          other.degenerate_faces.end());
  warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
}

}  // namespace geojobs
