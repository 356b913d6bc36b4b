#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "morselab/rational.hpp"

namespace morselab {

// A function on {1, ..., domain_max} stored exactly. Asymptotic notions
// (viable, sublinear) are evaluated on the stored samples only.
class FunctionSample {
 public:
  FunctionSample() = default;
  explicit FunctionSample(std::vector<Rational> values, std::string note = {});

  static FunctionSample constant(std::size_t domain_max, Rational value);
  static FunctionSample identity(std::size_t domain_max);
  // One sample per line, either "value" (t counts from 1) or "t,value".
  // Blank lines and '#' comments are skipped; t must run 1..N in order.
  static FunctionSample parse_csv(std::string_view text);

  std::size_t domain_max() const noexcept {
    return values_.size();
  }
  bool defined_at(std::size_t t) const noexcept {
    return t >= 1 && t <= values_.size();
  }
  Rational const& operator()(std::size_t t) const;
  std::vector<Rational> const& values() const noexcept {
    return values_;
  }
  std::string const& note() const noexcept {
    return note_;
  }

  bool non_decreasing() const noexcept;
  bool bounded_below_by(Rational const& c) const noexcept;

  std::string to_csv() const;

  bool operator==(FunctionSample const&) const = default;

 private:
  std::vector<Rational> values_;
  std::string note_;
};

// f >= 6 and non-decreasing on the sampled domain.
bool viable_on_samples(FunctionSample const& f) noexcept;

// Smallest T such that g(t) < t/N for every sampled t >= T.
std::optional<std::size_t> sublinear_threshold(FunctionSample const& g,
                                               std::size_t N);

}  // namespace morselab
