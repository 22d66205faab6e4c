#pragma once

#include <string>

#include "geojobs/rational.hpp"

namespace geojobs {

/// Decimal rendering shared by the CSV and GeoJSON writers. Both formats
/// must emit the same bytes for the same value, so all of it lives here.

/// Coordinate: fixed notation, at most 6 decimal places, trailing zeros and
/// a bare trailing point stripped. -0 collapses to 0.
std::string format_coord(double value);

/// Job quantity: integers render bare; fractions are rounded half-even at
/// 6 decimal places, then trailing zeros stripped.
std::string format_jobs(const Rational& value);

/// Exact decimal scaling used by format_jobs: round(value * 10^places) with
/// ties to even. Exposed for the rounding tests.
BigInt scale_half_even(const Rational& value, int places);

}  // namespace geojobs
