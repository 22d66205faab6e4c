#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace geojobs {

/// Exact job quantities. Allocation splits like 10/3 must survive arbitrary
/// aggregation without drift, so amounts stay rational until export.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigInt rational_floor(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);
  // cpp_int division truncates toward zero; fix up negatives.
  if (q * denominator(r) > numerator(r)) --q;
  return q;
}

inline std::string rational_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace geojobs
