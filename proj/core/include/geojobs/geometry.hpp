#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace geojobs {

struct Point {
  double lon = 0.0;
  double lat = 0.0;

  bool operator==(const Point&) const = default;
};

/// Face geometry in WGS84 degrees. A polyline with >=2 vertices is the
/// normal case; a single vertex is the degenerate point form some sources
/// publish and is carried through flagged rather than rejected.
struct Polyline {
  std::vector<Point> vertices;

  bool is_point() const { return vertices.size() == 1; }
  bool empty() const { return vertices.empty(); }
};

bool coords_in_world(const Point& p);

/// Planar length in degree space. Faces are block-scale, so the latitude
/// anisotropy this ignores is far below the method's CEP-level uncertainty.
double planar_length(const Polyline& line);

struct MidpointResult {
  Point point;
  bool degenerate = false;  // single vertex or zero-length line
};

/// The representative point: half the cumulative length along the polyline,
/// interpolated on the containing segment. Degenerate geometry falls back to
/// the first vertex and is flagged for the run report.
MidpointResult midpoint_along(const Polyline& line);

/// Distance from a point to the nearest polyline segment, planar degrees.
double distance_to_polyline(const Point& p, const Polyline& line);

enum class CoordVerdict { Ok, Warn, Invalid };

struct BoundingBox {
  double min_lon, min_lat, max_lon, max_lat;
  bool contains(const Point& p) const {
    return p.lon >= min_lon && p.lon <= max_lon && p.lat >= min_lat && p.lat <= max_lat;
  }
};

/// Ok when finite and inside world bounds; Warn when outside the optional
/// municipality box (sanity signal, not an error).
CoordVerdict validate_coords(const Point& p, const std::optional<BoundingBox>& bbox = {});

/// Parses WKT LINESTRING(...) or POINT(...). Case-insensitive keyword,
/// anything else (other geometry types, bad numbers) is std::nullopt.
std::optional<Polyline> parse_wkt(std::string_view wkt);

}  // namespace geojobs
