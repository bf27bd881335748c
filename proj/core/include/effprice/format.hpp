#pragma once

#include <string>

namespace effprice {

/// Shortest decimal that parses back to exactly `value`.
[[nodiscard]] std::string format_roundtrip(double value);

/// Fixed-point with `decimals` digits after the point; "-0.000" is printed as
/// "0.000".
[[nodiscard]] std::string format_fixed(double value, int decimals);

/// `value` rounded to `digits` significant decimal digits.
[[nodiscard]] double round_significant(double value, int digits);

}  // namespace effprice
