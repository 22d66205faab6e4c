#include "geojobs/partition.hpp"

#include <algorithm>
#include <memory>
#include <queue>
#include <stdexcept>

#include "geojobs/face.hpp"
#include "geojobs/line_reader.hpp"

namespace geojobs {

SpillPartitioner::SpillPartitioner(std::filesystem::path dir, size_t max_open)
    : dir_(std::move(dir)), max_open_(std::max<size_t>(max_open, 2)) {
  std::filesystem::create_directories(dir_);
}

SpillPartitioner::~SpillPartitioner() { close_all(); }

std::filesystem::path SpillPartitioner::file_for(const std::string& municipality) const {
  return dir_ / (municipality + ".rows");
}

std::ofstream& SpillPartitioner::handle_for(const std::string& municipality) {
  auto it = by_key_.find(municipality);
  if (it != by_key_.end()) {
    open_.splice(open_.begin(), open_, it->second);  // refresh LRU position
    return open_.front().second;
  }
  if (open_.size() >= max_open_) {
    by_key_.erase(open_.back().first);
    open_.pop_back();
  }
  const bool existing = municipalities_.count(municipality) > 0;
  municipalities_.insert(municipality);
  std::ofstream out(file_for(municipality),
                    existing ? std::ios::app | std::ios::binary : std::ios::binary);
  if (!out) {
    throw std::runtime_error("spill: cannot open " + file_for(municipality).string());
  }
  open_.emplace_front(municipality, std::move(out));
  by_key_[municipality] = open_.begin();
  return open_.front().second;
}

void SpillPartitioner::append(const std::string& municipality, std::string_view line) {
  std::ofstream& out = handle_for(municipality);
  out.write(line.data(), static_cast<std::streamsize>(line.size()));
  out.put('\n');
  if (!out) throw std::runtime_error("spill: write failure for " + municipality);
}

void SpillPartitioner::close_all() {
  open_.clear();
  by_key_.clear();
}

PartitionStats partition_by_municipality(std::istream& in, const ColumnMapping& mapping,
                                         SpillPartitioner& spill,
                                         const std::set<std::string>& filter,
                                         const std::string& input_name) {
  PartitionStats stats;
  LineReader lines(in, mapping.encoding);
  RowFields row;
  bool header_skipped = false;
  std::string_view line;
  std::string geo;
  while (lines.next(line)) {
    if (mapping.has_header && !header_skipped) {
      header_skipped = true;
      continue;
    }
    if (line.empty()) continue;
    ++stats.ingest.rows_read;
    row.split(line, mapping);

    geo.clear();
    if (mapping.has_field("municipality")) {
      if (auto field = row.get(mapping, "municipality")) geo.assign(*field);
    } else if (mapping.municipality_from_code_prefix) {
      if (auto code = row.get(mapping, "face_code"); code && code->size() >= 7) {
        geo.assign(code->substr(0, 7));
      }
    }
    if (!valid_municipality_geocode(geo)) {
      stats.ingest.reject(lines.line_number(), input_name + ": BadMunicipality: '" + geo + "'");
      continue;
    }
    if (!filter.empty() && !filter.count(geo)) {
      ++stats.rows_filtered;
      continue;
    }
    ++stats.ingest.rows_accepted;
    spill.append(geo, line);
  }
  return stats;
}

namespace {

struct MergeCursor {
  std::ifstream in;
  std::string line;
  size_t code_len = 0;  // bytes of the face-code field
  size_t cep_end = 0;   // end of the CEP field

  bool advance() {
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      const size_t c1 = line.find(',');
      if (c1 == std::string::npos) continue;
      size_t c2 = line.find(',', c1 + 1);
      if (c2 == std::string::npos) c2 = line.size();
      code_len = c1;
      cep_end = c2;
      return true;
    }
    return false;
  }
};

// (face code numeric order, then CEP)
bool cursor_greater(const MergeCursor* a, const MergeCursor* b) {
  std::string_view code_a(a->line.data(), a->code_len);
  std::string_view code_b(b->line.data(), b->code_len);
  if (code_a.size() != code_b.size()) return code_a.size() > code_b.size();
  if (int c = code_a.compare(code_b); c != 0) return c > 0;
  std::string_view cep_a(a->line.data() + a->code_len + 1, a->cep_end - a->code_len - 1);
  std::string_view cep_b(b->line.data() + b->code_len + 1, b->cep_end - b->code_len - 1);
  return cep_a > cep_b;
}

void merge_pass(const std::vector<std::filesystem::path>& chunks,
                const std::function<void(std::string_view)>& emit) {
  std::vector<std::unique_ptr<MergeCursor>> cursors;
  for (const auto& path : chunks) {
    auto cur = std::make_unique<MergeCursor>();
    cur->in.open(path, std::ios::binary);
    if (!cur->in) throw std::runtime_error("merge: cannot open " + path.string());
    if (cur->advance()) cursors.push_back(std::move(cur));
  }
  auto cmp = [](const MergeCursor* a, const MergeCursor* b) { return cursor_greater(a, b); };
  std::priority_queue<MergeCursor*, std::vector<MergeCursor*>, decltype(cmp)> heap(cmp);
  for (auto& cur : cursors) heap.push(cur.get());
  while (!heap.empty()) {
    MergeCursor* cur = heap.top();
    heap.pop();
    emit(cur->line);
    if (cur->advance()) heap.push(cur);
  }
}

}  // namespace

void merge_sorted_csv_chunks(const std::vector<std::filesystem::path>& chunks,
                             const std::filesystem::path& scratch_dir,
                             const std::function<void(std::string_view)>& emit, size_t fan_in) {
  fan_in = std::max<size_t>(fan_in, 2);
  std::vector<std::filesystem::path> work = chunks;
  size_t generation = 0;
  std::vector<std::filesystem::path> temporaries;
  while (work.size() > fan_in) {
    std::vector<std::filesystem::path> next;
    for (size_t i = 0; i < work.size(); i += fan_in) {
      const size_t end = std::min(i + fan_in, work.size());
      std::vector<std::filesystem::path> group(work.begin() + i, work.begin() + end);
      auto merged = scratch_dir / ("merge-" + std::to_string(generation) + "-" +
                                   std::to_string(i / fan_in) + ".rows");
      std::ofstream out(merged, std::ios::binary);
      if (!out) throw std::runtime_error("merge: cannot create " + merged.string());
      merge_pass(group, [&out](std::string_view line) {
        out.write(line.data(), static_cast<std::streamsize>(line.size()));
        out.put('\n');
      });
      out.close();
      next.push_back(merged);
      temporaries.push_back(merged);
    }
    work = std::move(next);
    ++generation;
  }
  merge_pass(work, emit);
  for (const auto& t : temporaries) {
    std::error_code ec;
    std::filesystem::remove(t, ec);
  }
}

}  // namespace geojobs
