#ifndef JPAST_RATIO_HPP
#define JPAST_RATIO_HPP

// Exact ratios and the fixed-precision renderings used in reports.

#include <boost/rational.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>

namespace jpast {

using Ratio = boost::rational<std::int64_t>;

/// Rendering of an undefined ratio (no errors, empty subgroup).
inline constexpr const char* kUndefined = "—";

// Compare a Ratio against Ratio(n), never a bare integer: under C++20
// rewritten comparisons Boost 1.74's mixed operator== recurses forever.

inline double to_double(const Ratio& r) { return boost::rational_cast<double>(r); }

/// r rounded half away from zero to `decimals` places, scaled by `scale`.
inline std::string render_fixed(const Ratio& r, int decimals, std::int64_t scale = 1) {
  std::int64_t pow10 = 1;
  for (int i = 0; i < decimals; ++i) pow10 *= 10;
  const Ratio scaled = r * scale * pow10;
  const bool negative = scaled < 0;
  const Ratio mag = negative ? -scaled : scaled;
  // floor(mag + 1/2)
  const Ratio shifted = mag + Ratio(1, 2);
  const std::int64_t rounded = shifted.numerator() / shifted.denominator();
  std::string digits = std::to_string(rounded);
  if (decimals > 0) {
    if (digits.size() <= static_cast<std::size_t>(decimals))
      digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(decimals), ".");
  }
  return (negative && rounded != 0 ? "-" : "") + digits;
}

/// Percent with two decimals: 0.9798 -> "97.98".
inline std::string render_percent(const Ratio& r, int decimals = 2) {
  return render_fixed(r, decimals, 100);
}

inline std::string render_percent(const std::optional<Ratio>& r, int decimals = 2) {
  return r ? render_percent(*r, decimals) : kUndefined;
}

inline std::string render_ratio(const std::optional<Ratio>& r, int decimals = 2) {
  return r ? render_fixed(*r, decimals) : kUndefined;
}

/// x rendered with `digits` significant digits in fixed notation.
inline std::string render_significant(double x, int digits) {
  if (x == 0.0) return "0";
  const int magnitude = static_cast<int>(std::floor(std::log10(std::fabs(x))));
  const int decimals = std::max(0, digits - 1 - magnitude);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

/// Nearest Ratio to a decimal literal such as 0.9798, exact to `places`.
inline Ratio ratio_from_decimal(double x, int places = 6) {
  std::int64_t pow10 = 1;
  for (int i = 0; i < places; ++i) pow10 *= 10;
  return Ratio(static_cast<std::int64_t>(std::llround(x * static_cast<double>(pow10))), pow10);
}

}  // namespace jpast

#endif  // JPAST_RATIO_HPP
