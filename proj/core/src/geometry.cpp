#include "geojobs/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

namespace geojobs {

bool coords_in_world(const Point& p) {
  return std::isfinite(p.lon) && std::isfinite(p.lat) && p.lon >= -180.0 && p.lon <= 180.0 &&
         p.lat >= -90.0 && p.lat <= 90.0;
}

static double seg_length(const Point& a, const Point& b) {
  return std::hypot(b.lon - a.lon, b.lat - a.lat);
}

double planar_length(const Polyline& line) {
  double total = 0.0;
  for (size_t i = 1; i < line.vertices.size(); ++i) {
    total += seg_length(line.vertices[i - 1], line.vertices[i]);
  }
  return total;
}

MidpointResult midpoint_along(const Polyline& line) {
  if (line.vertices.empty()) return {Point{}, true};
  if (line.vertices.size() == 1) return {line.vertices.front(), true};

  const double total = planar_length(line);
  if (total <= 0.0) return {line.vertices.front(), true};

  const double half = total / 2.0;
  double walked = 0.0;
  for (size_t i = 1; i < line.vertices.size(); ++i) {
    const Point& a = line.vertices[i - 1];
    const Point& b = line.vertices[i];
    const double len = seg_length(a, b);
    if (walked + len >= half && len > 0.0) {
      const double t = (half - walked) / len;
      return {Point{a.lon + (b.lon - a.lon) * t, a.lat + (b.lat - a.lat) * t}, false};
    }
    walked += len;
  }
  // Accumulated rounding pushed half past the end; clamp to the last vertex.
  return {line.vertices.back(), false};
}

static double distance_to_segment(const Point& p, const Point& a, const Point& b) {
  const double dx = b.lon - a.lon, dy = b.lat - a.lat;
  const double len2 = dx * dx + dy * dy;
  if (len2 == 0.0) return std::hypot(p.lon - a.lon, p.lat - a.lat);
  double t = ((p.lon - a.lon) * dx + (p.lat - a.lat) * dy) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.lon - (a.lon + t * dx), p.lat - (a.lat + t * dy));
}

double distance_to_polyline(const Point& p, const Polyline& line) {
  if (line.vertices.empty()) return std::numeric_limits<double>::infinity();
  if (line.vertices.size() == 1) {
    return std::hypot(p.lon - line.vertices[0].lon, p.lat - line.vertices[0].lat);
  }
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 1; i < line.vertices.size(); ++i) {
    best = std::min(best, distance_to_segment(p, line.vertices[i - 1], line.vertices[i]));
  }
  return best;
}

CoordVerdict validate_coords(const Point& p, const std::optional<BoundingBox>& bbox) {
  if (!coords_in_world(p)) return CoordVerdict::Invalid;
  if (bbox && !bbox->contains(p)) return CoordVerdict::Warn;
  return CoordVerdict::Ok;
}

namespace {

struct WktCursor {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool eat_keyword(std::string_view kw) {
    skip_ws();
    if (s.size() - pos < kw.size()) return false;
    for (size_t i = 0; i < kw.size(); ++i) {
      if (std::toupper(static_cast<unsigned char>(s[pos + i])) != kw[i]) return false;
    }
    pos += kw.size();
    return true;
  }
  bool parse_double(double& out) {
    skip_ws();
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), out);
    if (ec != std::errc{} || ptr == s.data() + pos) return false;
    pos = ptr - s.data();
    return std::isfinite(out);
  }
  bool at_end() {
    skip_ws();
    return pos == s.size();
  }
};

}  // namespace

std::optional<Polyline> parse_wkt(std::string_view wkt) {
  WktCursor cur{wkt};
  bool is_point = false;
  if (cur.eat_keyword("LINESTRING")) {
    is_point = false;
  } else if (cur.eat_keyword("POINT")) {
    is_point = true;
  } else {
    return std::nullopt;
  }
  if (!cur.eat('(')) return std::nullopt;

  Polyline line;
  do {
    Point p;
    if (!cur.parse_double(p.lon) || !cur.parse_double(p.lat)) return std::nullopt;
    line.vertices.push_back(p);
  } while (cur.eat(','));
  if (!cur.eat(')') || !cur.at_end()) return std::nullopt;

  if (is_point && line.vertices.size() != 1) return std::nullopt;
  if (!is_point && line.vertices.size() < 2) return std::nullopt;
  return line;
}

}  // namespace geojobs
