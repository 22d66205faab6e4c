#include "geojobs/line_reader.hpp"

#include <cstring>

namespace geojobs {

LineReader::LineReader(std::istream& in, Encoding encoding, size_t buffer_size)
    : in_(in), encoding_(encoding) {
  buf_.resize(buffer_size);
}

bool LineReader::refill() {
  in_.read(buf_.data(), static_cast<std::streamsize>(buf_.size()));
  filled_ = static_cast<size_t>(in_.gcount());
  pos_ = 0;
  if (filled_ == 0) {
    eof_ = true;
    return false;
  }
  return true;
}

static std::string_view latin1_to_utf8(std::string_view line, std::string& out) {
  bool ascii = true;
  for (unsigned char c : line) {
    if (c >= 0x80) {
      ascii = false;
      break;
    }
  }
  if (ascii) return line;
  out.clear();
  out.reserve(line.size() * 2);
  for (unsigned char c : line) {
    if (c < 0x80) {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back(static_cast<char>(0xC0 | (c >> 6)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    }
  }
  return out;
}

bool LineReader::next(std::string_view& line) {
  carry_.clear();
  while (true) {
    if (pos_ >= filled_) {
      if (eof_ || !refill()) {
        if (carry_.empty()) return false;
        break;  // final line without newline
      }
    }
    const char* start = buf_.data() + pos_;
    const char* nl = static_cast<const char*>(std::memchr(start, '\n', filled_ - pos_));
    if (nl) {
      size_t len = static_cast<size_t>(nl - start);
      pos_ += len + 1;
      if (carry_.empty()) {
        line = std::string_view(start, len);
        if (len > 0 && line.back() == '\r') line.remove_suffix(1);
        ++line_number_;
        if (encoding_ == Encoding::Latin1) line = latin1_to_utf8(line, recoded_);
        return true;
      }
      carry_.append(start, len);
      break;
    }
    carry_.append(start, filled_ - pos_);
    pos_ = filled_;
  }
  line = carry_;
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  ++line_number_;
  if (encoding_ == Encoding::Latin1) line = latin1_to_utf8(line, recoded_);
  return true;
}

std::string_view trim_ascii(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

void RowFields::split(std::string_view line, const ColumnMapping& mapping) {
  fields_.clear();
  scratch_.clear();
  line_ = line;
  mapping_ = &mapping;
  if (mapping.kind == SourceKind::FixedWidth) return;  // sliced lazily in get()

  const char delim = mapping.delimiter;
  size_t i = 0;
  const size_t n = line.size();
  while (true) {
    if (i < n && line[i] == '"') {
      // Quoted field; doubled quotes unescape. Runs until the closing quote.
      std::string out;
      ++i;
      while (i < n) {
        if (line[i] == '"') {
          if (i + 1 < n && line[i + 1] == '"') {
            out.push_back('"');
            i += 2;
          } else {
            ++i;
            break;
          }
        } else {
          out.push_back(line[i++]);
        }
      }
      scratch_.push_back(std::move(out));
      fields_.push_back(scratch_.back());
      while (i < n && line[i] != delim) ++i;  // tolerate junk after the quote
    } else {
      size_t start = i;
      while (i < n && line[i] != delim) ++i;
      fields_.push_back(line.substr(start, i - start));
    }
    if (i >= n) break;
    ++i;  // skip delimiter
    if (i == n) {
      fields_.push_back({});  // trailing delimiter means a final empty field
      break;
    }
  }
}

std::optional<std::string_view> RowFields::get(const ColumnMapping& mapping,
                                               std::string_view field_name) const {
  const FieldSpec* spec = mapping.field(field_name);
  if (!spec) return std::nullopt;
  if (mapping.kind == SourceKind::Delimited) {
    if (spec->column < 0 || static_cast<size_t>(spec->column) >= fields_.size()) {
      return std::nullopt;
    }
    return trim_ascii(fields_[static_cast<size_t>(spec->column)]);
  }
  if (spec->byte_begin >= line_.size()) return std::nullopt;
  const size_t end = std::min(spec->byte_end, line_.size());
  return trim_ascii(line_.substr(spec->byte_begin, end - spec->byte_begin));
}

}  // namespace geojobs
