#include "geojobs/numfmt.hpp"

#include <cstdio>

namespace geojobs {

static void strip_decimal_tail(std::string& s) {
  if (s.find('.') == std::string::npos) return;
  size_t last = s.find_last_not_of('0');
  if (s[last] == '.') --last;
  s.erase(last + 1);
}

std::string format_coord(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  std::string s(buf);
  strip_decimal_tail(s);
  if (s == "-0") s = "0";
  return s;
}

BigInt scale_half_even(const Rational& value, int places) {
  BigInt pow10 = 1;
  for (int i = 0; i < places; ++i) pow10 *= 10;

  const BigInt num = numerator(value) * pow10;
  const BigInt den = denominator(value);  // always > 0 for cpp_rational
  BigInt q = num / den;                   // truncates toward zero
  BigInt r = num - q * den;
  if (r == 0) return q;

  const bool negative = r < 0;
  if (negative) r = -r;
  const BigInt twice = r * 2;
  bool bump = twice > den || (twice == den && (q % 2) != 0);
  if (bump) q += negative ? -1 : 1;
  return q;
}

std::string format_jobs(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();

  BigInt scaled = scale_half_even(value, 6);
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;

  std::string digits = scaled.str();
  if (digits.size() <= 6) digits.insert(0, 7 - digits.size(), '0');
  std::string s = digits.substr(0, digits.size() - 6) + "." + digits.substr(digits.size() - 6);
  strip_decimal_tail(s);
  if (negative && s != "0") s.insert(s.begin(), '-');
  return s;
}

}  // namespace geojobs
