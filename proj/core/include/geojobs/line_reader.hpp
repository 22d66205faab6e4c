#pragma once

#include <cstdint>
#include <deque>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "geojobs/column_mapping.hpp"

namespace geojobs {

/// Chunked line reader over an istream. Keeps a fixed-size buffer regardless
/// of file size; lines are viewed in place when possible. CRLF and a missing
/// final newline are both handled. Latin-1 sources are transcoded to UTF-8
/// line by line.
class LineReader {
 public:
  explicit LineReader(std::istream& in, Encoding encoding = Encoding::Utf8,
                      size_t buffer_size = 1 << 18);

  /// False at end of input. The returned view is valid until the next call.
  bool next(std::string_view& line);

  /// 1-based number of the line most recently returned.
  uint64_t line_number() const { return line_number_; }

 private:
  bool refill();

  std::istream& in_;
  Encoding encoding_;
  std::string buf_;
  size_t pos_ = 0;
  size_t filled_ = 0;
  bool eof_ = false;
  std::string carry_;    // partial line spanning refills
  std::string recoded_;  // Latin-1 -> UTF-8 scratch
  uint64_t line_number_ = 0;
};

/// Splits one row into logical fields per a ColumnMapping. Delimited rows
/// honor RFC 4180-style double quotes (doubled quote escapes); fixed-width
/// rows are sliced by byte range. Extracted fields are trimmed of spaces and
/// tabs. Views remain valid until the next split.
class RowFields {
 public:
  void split(std::string_view line, const ColumnMapping& mapping);

  /// nullopt when the row has no such column / is too short; empty fields
  /// come back as empty views.
  std::optional<std::string_view> get(const ColumnMapping& mapping,
                                      std::string_view field_name) const;

  size_t column_count() const { return fields_.size(); }
  std::string_view column(size_t i) const { return fields_[i]; }

 private:
  std::vector<std::string_view> fields_;
  std::deque<std::string> scratch_;  // stable backing for unescaped quoted fields
  std::string_view line_;
  const ColumnMapping* mapping_ = nullptr;
};

std::string_view trim_ascii(std::string_view s);

}  // namespace geojobs
