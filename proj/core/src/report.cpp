#include "geojobs/report.hpp"

#include <stdexcept>

#include <json.hpp>

#include "geojobs/numfmt.hpp"

namespace geojobs {

static const AllocationRule kAllRules[] = {
    AllocationRule::WeightedBySpecies,
    AllocationRule::UniformOverCepFaces,
    AllocationRule::MunicipalityWide,
    AllocationRule::Unallocated,
};

void write_report_text(const RunReport& r, std::ostream& out) {
  out << "run report\n";
  out << "==========\n";
  out << "input jobs:        " << r.input_jobs_total << "\n";
  out << "allocated jobs:    " << format_jobs(r.allocated_jobs_total) << "\n";
  out << "unallocated jobs:  " << r.unallocated_jobs_total() << "\n";
  out << "\nrows: read " << r.rows_read << ", accepted " << r.rows_accepted << ", rejected "
      << r.rows_rejected;
  if (r.establishments_filtered > 0) out << ", filtered " << r.establishments_filtered;
  out << "\n";

  out << "\nestablishments by rule\n";
  for (AllocationRule rule : kAllRules) {
    auto it = r.rule_histogram.find(rule);
    const uint64_t n = it == r.rule_histogram.end() ? 0 : it->second;
    out << "  " << rule_name(rule) << ": " << n << "\n";
  }

  out << "\nper-municipality conservation (input -> allocated)\n";
  for (const auto& [geo, totals] : r.per_municipality) {
    out << "  " << geo << ": " << totals.input << " -> " << format_jobs(totals.allocated) << "\n";
  }

  if (!r.unallocated.empty()) {
    out << "\nunallocated establishments (" << r.unallocated.size() << ")\n";
    for (const auto& u : r.unallocated) {
      out << "  " << u.establishment_id << " cep=" << u.cep.digits() << " jobs=" << u.jobs
          << " reason=" << u.reason << "\n";
    }
  }
  if (!r.degenerate_faces.empty()) {
    out << "\ndegenerate face geometries (" << r.degenerate_faces.size() << ")\n";
    for (const auto& code : r.degenerate_faces) out << "  " << code << "\n";
  }
  if (!r.rejection_samples.empty()) {
    out << "\nrejected row samples\n";
    for (const auto& s : r.rejection_samples) out << "  " << s << "\n";
  }
  if (!r.warnings.empty()) {
    out << "\nwarnings\n";
    for (const auto& w : r.warnings) out << "  " << w << "\n";
  }
  out.flush();
  if (!out) throw std::runtime_error("report: sink write failure");
}

void write_report_json(const RunReport& r, std::ostream& out) {
  using json = nlohmann::ordered_json;
  json j;
  j["input_jobs_total"] = r.input_jobs_total;
  j["allocated_jobs_total"] = {{"exact", rational_string(r.allocated_jobs_total)},
                               {"decimal", format_jobs(r.allocated_jobs_total)}};
  j["unallocated_jobs_total"] = r.unallocated_jobs_total();

  json hist = json::object();
  for (AllocationRule rule : kAllRules) {
    auto it = r.rule_histogram.find(rule);
    hist[std::string(rule_name(rule))] = it == r.rule_histogram.end() ? 0 : it->second;
  }
  j["rule_histogram"] = std::move(hist);

  json unalloc = json::array();
  for (const auto& u : r.unallocated) {
    unalloc.push_back({{"establishment_id", u.establishment_id},
                       {"cep", u.cep.digits()},
                       {"jobs", u.jobs},
                       {"reason", u.reason}});
  }
  j["unallocated"] = std::move(unalloc);

  json per_muni = json::object();
  for (const auto& [geo, totals] : r.per_municipality) {
    per_muni[geo] = {{"input", totals.input},
                     {"allocated_exact", rational_string(totals.allocated)},
                     {"allocated_decimal", format_jobs(totals.allocated)}};
  }
  j["per_municipality_totals"] = std::move(per_muni);

  j["ingest"] = {{"rows_read", r.rows_read},
                 {"rows_accepted", r.rows_accepted},
                 {"rows_rejected", r.rows_rejected},
                 {"establishments_filtered", r.establishments_filtered}};

  json samples = json::array();
  for (const auto& s : r.rejection_samples) samples.push_back(s);
  j["rejection_samples"] = std::move(samples);
  j["degenerate_faces"] = r.degenerate_faces;
  j["warnings"] = r.warnings;

  out << j.dump(2) << "\n";
  out.flush();
  if (!out) throw std::runtime_error("report: sink write failure");
}

}  // namespace geojobs
