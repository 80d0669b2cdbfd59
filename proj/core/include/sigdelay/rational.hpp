#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace sigdelay {

/// Exact rational time. All endpoint comparisons in the library are exact;
/// no floating point is involved anywhere.
using Rat = boost::multiprecision::cpp_rational;

/// Parses "3", "-7/2", "1.25" into an exact rational.
/// Returns std::nullopt on malformed input.
std::optional<Rat> parse_rational(std::string_view text);

/// Prints "p" when the denominator is 1, "p/q" otherwise.
std::string format_rational(const Rat& r);

}  // namespace sigdelay
