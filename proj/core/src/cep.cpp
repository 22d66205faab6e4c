#include "geojobs/cep.hpp"

#include <cassert>
#include <cctype>

namespace geojobs {

Cep Cep::from_digits(std::string digits) {
  assert(digits.size() == 8);
  Cep c;
  c.digits_ = std::move(digits);
  return c;
}

std::optional<Cep> normalize_cep(std::string_view raw, CepError* error) {
  auto fail = [&](CepError e) -> std::optional<Cep> {
    if (error) *error = e;
    return std::nullopt;
  };

  size_t begin = 0, end = raw.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(raw[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(raw[end - 1]))) --end;

  std::string digits;
  digits.reserve(8);
  bool hyphen_seen = false;
  for (size_t i = begin; i < end; ++i) {
    char c = raw[i];
    if (c == '-' && !hyphen_seen) {
      hyphen_seen = true;
      continue;
    }
    if (c < '0' || c > '9') return fail(CepError::NonNumeric);
    if (digits.size() == 8) return fail(CepError::TooLong);
    digits.push_back(c);
  }
  if (digits.empty()) return fail(CepError::NonNumeric);

  digits.insert(digits.begin(), 8 - digits.size(), '0');
  return Cep::from_digits(std::move(digits));
}

}  // namespace geojobs
