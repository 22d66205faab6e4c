#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <list>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "geojobs/column_mapping.hpp"
#include "geojobs/readers.hpp"

namespace geojobs {

/// Routes raw input lines into one spill file per municipality so each
/// partition can later be processed with memory bounded by its own size.
/// Handles are kept in a small LRU pool; the file count is unbounded.
class SpillPartitioner {
 public:
  SpillPartitioner(std::filesystem::path dir, size_t max_open = 64);
  ~SpillPartitioner();

  void append(const std::string& municipality, std::string_view line);
  void close_all();

  const std::set<std::string>& municipalities() const { return municipalities_; }
  std::filesystem::path file_for(const std::string& municipality) const;

 private:
  std::ofstream& handle_for(const std::string& municipality);

  std::filesystem::path dir_;
  size_t max_open_;
  std::set<std::string> municipalities_;
  std::list<std::pair<std::string, std::ofstream>> open_;  // front = most recent
  std::unordered_map<std::string, decltype(open_)::iterator> by_key_;
};

/// Outcome of routing one input file by municipality.
struct PartitionStats {
  IngestStats ingest;          // read / routed(accepted) / rejected at routing time
  uint64_t rows_filtered = 0;  // excluded by the municipality filter
};

/// Streams `in` once, extracting only the municipality key from each row and
/// appending the raw line to that municipality's spill file. Rows whose key
/// cannot be determined are rejected here; full validation happens when the
/// partition is read back. `filter` empty means keep everything.
PartitionStats partition_by_municipality(std::istream& in, const ColumnMapping& mapping,
                                         SpillPartitioner& spill,
                                         const std::set<std::string>& filter,
                                         const std::string& input_name);

/// Merges per-municipality chunk files of sorted CSV lines into one global
/// order (face code, then CEP). Chunks beyond the fan-in are merged
/// hierarchically through temporary files so the open-file count stays
/// bounded. Emits each line exactly once, in order.
void merge_sorted_csv_chunks(const std::vector<std::filesystem::path>& chunks,
                             const std::filesystem::path& scratch_dir,
                             const std::function<void(std::string_view)>& emit,
                             size_t fan_in = 64);

}  // namespace geojobs
