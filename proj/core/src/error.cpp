#include "morselab/error.hpp"

#include <cstdlib>
#include <numeric>

#include "morselab/rational.hpp"

namespace morselab {

char const* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::parse:
      return "parse";
    case ErrorKind::invalid_argument:
      return "invalid_argument";
    case ErrorKind::not_verified:
      return "not_verified";
    case ErrorKind::uncertified:
      return "uncertified";
    case ErrorKind::budget:
      return "budget";
    case ErrorKind::structure:
      return "structure";
    case ErrorKind::io:
      return "io";
    case ErrorKind::internal:
      return "internal";
  }
  return "internal";
}

namespace {
  std::int64_t parse_integer(std::string_view text, std::string_view whole) {
    if (text.empty()) {
      throw InvalidArgument("malformed rational '" + std::string(whole) + "'");
    }
    std::size_t i   = 0;
    bool negative   = false;
    if (text[0] == '-' || text[0] == '+') {
      negative = text[0] == '-';
      i        = 1;
    }
    if (i == text.size()) {
      throw InvalidArgument("malformed rational '" + std::string(whole) + "'");
    }
    std::int64_t value = 0;
    for (; i < text.size(); ++i) {
      char c = text[i];
      if (c < '0' || c > '9') {
        throw InvalidArgument("malformed rational '" + std::string(whole)
                              + "'");
      }
      value = value * 10 + (c - '0');
      if (value > (std::int64_t{1} << 53)) {
        throw InvalidArgument("rational component too large in '"
                              + std::string(whole) + "'");
      }
    }
    return negative ? -value : value;
  }

  std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
      s.remove_prefix(1);
    }
    while (!s.empty()
           && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
      s.remove_suffix(1);
    }
    return s;
  }
}  // namespace

Rational parse_rational(std::string_view text) {
  auto t     = trim(text);
  auto slash = t.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(t, text));
  }
  auto num = parse_integer(trim(t.substr(0, slash)), text);
  auto den = parse_integer(trim(t.substr(slash + 1)), text);
  if (den == 0) {
    throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string format_rational(Rational const& q) {
  if (q.denominator() == 1) {
    return std::to_string(q.numerator());
  }
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

double to_double(Rational const& q) noexcept {
  return static_cast<double>(q.numerator())
         / static_cast<double>(q.denominator());
}

}  // namespace morselab
