#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace geojobs {

enum class CepError {
  NonNumeric,  // residual non-digit after stripping one hyphen and whitespace
  TooLong,     // more than 8 digits
};

/// An 8-digit Brazilian postal code. Always stored as a fixed-width digit
/// string so leading zeros survive every round trip.
class Cep {
 public:
  Cep() = default;

  /// Precondition: `digits` is exactly 8 ASCII digits. Use normalize_cep()
  /// for anything coming from an input file.
  static Cep from_digits(std::string digits);

  const std::string& digits() const { return digits_; }
  bool empty() const { return digits_.empty(); }

  auto operator<=>(const Cep&) const = default;

 private:
  std::string digits_;
};

/// Normalizes a raw CEP field: trims whitespace, strips at most one hyphen,
/// left-pads with zeros to 8 digits. "77001-422" and "1422" are both fine;
/// anything else non-numeric or longer than 8 digits is a malformed row.
std::optional<Cep> normalize_cep(std::string_view raw, CepError* error = nullptr);

}  // namespace geojobs
