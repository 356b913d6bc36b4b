#pragma once

#include <cstddef>
#include <vector>

#include "morselab/words.hpp"

namespace morselab {

struct CommonSubword {
  std::size_t length = 0;
  // Start of the match in the indexed text and in the probe.
  std::size_t text_pos  = 0;
  std::size_t probe_pos = 0;
};

// Suffix automaton over one word; answers longest-common-subword queries
// against probe words in time linear in the probe.
class SubwordIndex {
 public:
  SubwordIndex(WordView text, std::size_t letters);

  CommonSubword longest_common(WordView probe) const;
  // Entry j: length of the longest suffix of probe[0, j] occurring in text.
  std::vector<std::size_t> matching_lengths(WordView probe) const;
  bool contains(WordView w) const;
  std::size_t states() const noexcept {
    return link_.size();
  }

 private:
  std::size_t letters_;
  std::vector<int> next_;  // states x letters, -1 when absent
  std::vector<int> link_;
  std::vector<std::size_t> len_;
  std::vector<std::size_t> first_end_;  // end position of first occurrence
};

// Quadratic dynamic programme; ties broken by earliest text end, then
// earliest probe end.
CommonSubword longest_common_subword_dp(WordView text, WordView probe);

}  // namespace morselab
