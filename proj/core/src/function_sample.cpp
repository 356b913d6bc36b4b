#include "morselab/function_sample.hpp"

#include <algorithm>
#include <cctype>

#include "morselab/error.hpp"

namespace morselab {

FunctionSample::FunctionSample(std::vector<Rational> values, std::string note)
    : values_(std::move(values)), note_(std::move(note)) {}

FunctionSample FunctionSample::constant(std::size_t domain_max,
                                        Rational value) {
  return FunctionSample(std::vector<Rational>(domain_max, value));
}

FunctionSample FunctionSample::identity(std::size_t domain_max) {
  std::vector<Rational> v;
  v.reserve(domain_max);
  for (std::size_t t = 1; t <= domain_max; ++t) {
    v.emplace_back(static_cast<std::int64_t>(t));
  }
  return FunctionSample(std::move(v));
}

FunctionSample FunctionSample::parse_csv(std::string_view text) {
  std::vector<Rational> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) {
      eol = text.size();
    }
    auto line = text.substr(pos, eol - pos);
    pos       = eol + 1;
    if (auto h = line.find('#'); h != std::string_view::npos) {
      line = line.substr(0, h);
    }
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) {
      continue;
    }
    auto comma = line.find(',');
    if (comma == std::string_view::npos) {
      values.push_back(parse_rational(line));
      continue;
    }
    auto head = line.substr(0, comma);
    auto first = head.find_first_not_of(" \t");
    if (values.empty() && first != std::string_view::npos
        && std::isalpha(static_cast<unsigned char>(head[first]))) {
      continue;  // header row
    }
    auto t = parse_rational(head);
    if (t != Rational(static_cast<std::int64_t>(values.size() + 1))) {
      throw InvalidArgument("function samples must list t = 1, 2, ... in "
                            "order");
    }
    values.push_back(parse_rational(line.substr(comma + 1)));
  }
  return FunctionSample(std::move(values));
}

Rational const& FunctionSample::operator()(std::size_t t) const {
  if (!defined_at(t)) {
    throw InvalidArgument("function sample undefined at t = "
                          + std::to_string(t) + " (domain 1.."
                          + std::to_string(values_.size()) + ")");
  }
  return values_[t - 1];
}

bool FunctionSample::non_decreasing() const noexcept {
  return std::is_sorted(values_.begin(), values_.end());
}

bool FunctionSample::bounded_below_by(Rational const& c) const noexcept {
  return std::all_of(values_.begin(), values_.end(),
                     [&](Rational const& v) { return v >= c; });
}

std::string FunctionSample::to_csv() const {
  std::string out = "t,value\n";
  for (std::size_t t = 1; t <= values_.size(); ++t) {
    out += std::to_string(t) + "," + format_rational(values_[t - 1]) + "\n";
  }
  return out;
}

bool viable_on_samples(FunctionSample const& f) noexcept {
  return f.bounded_below_by(Rational(6)) && f.non_decreasing();
}

std::optional<std::size_t> sublinear_threshold(FunctionSample const& g,
                                               std::size_t N) {
  if (N == 0) {
    return std::nullopt;
  }
  // scan from the top of the domain for the longest tail with g(t) < t/N
  std::optional<std::size_t> T;
  for (std::size_t t = g.domain_max(); t >= 1; --t) {
    if (g(t) * Rational(static_cast<std::int64_t>(N))
        < Rational(static_cast<std::int64_t>(t))) {
      T = t;
    } else {
      break;
    }
  }
  return T;
}

}  // namespace morselab
