#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace morselab {

using Rational = boost::rational<std::int64_t>;

// Accepts "p", "p/q" and "-p/q"; throws InvalidArgument otherwise.
Rational parse_rational(std::string_view text);
std::string format_rational(Rational const& q);
double to_double(Rational const& q) noexcept;

}  // namespace morselab
