#include "morselab/substring.hpp"

namespace morselab {

SubwordIndex::SubwordIndex(WordView text, std::size_t letters)
    : letters_(letters) {
  auto add_state = [&](std::size_t len, int link, std::size_t end) {
    next_.insert(next_.end(), letters_, -1);
    len_.push_back(len);
    link_.push_back(link);
    first_end_.push_back(end);
    return static_cast<int>(len_.size() - 1);
  };
  next_.reserve((2 * text.size() + 1) * letters_);
  int last = add_state(0, -1, 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    std::size_t c = text[i];
    int cur       = add_state(len_[last] + 1, 0, i);
    int p         = last;
    while (p != -1 && next_[p * letters_ + c] == -1) {
      next_[p * letters_ + c] = cur;
      p                       = link_[p];
    }
    if (p != -1) {
      int q = next_[p * letters_ + c];
      if (len_[p] + 1 == len_[q]) {
        link_[cur] = q;
      } else {
        int clone = add_state(len_[p] + 1, link_[q], first_end_[q]);
        for (std::size_t a = 0; a < letters_; ++a) {
          next_[clone * letters_ + a] = next_[q * letters_ + a];
        }
        while (p != -1 && next_[p * letters_ + c] == q) {
          next_[p * letters_ + c] = clone;
          p                       = link_[p];
        }
        link_[q]   = clone;
        link_[cur] = clone;
      }
    }
    last = cur;
  }
}

CommonSubword SubwordIndex::longest_common(WordView probe) const {
  CommonSubword best;
  int state       = 0;
  std::size_t cur = 0;
  for (std::size_t i = 0; i < probe.size(); ++i) {
    std::size_t c = probe[i];
    if (c >= letters_) {
      state = 0;
      cur   = 0;
      continue;
    }
    while (state != 0 && next_[state * letters_ + c] == -1) {
      state = link_[state];
      cur   = len_[state];
    }
    if (next_[state * letters_ + c] != -1) {
      state = next_[state * letters_ + c];
      ++cur;
    }
    if (cur > best.length) {
      best.length    = cur;
      best.probe_pos = i + 1 - cur;
      best.text_pos  = first_end_[state] + 1 - cur;
    }
  }
  return best;
}

std::vector<std::size_t> SubwordIndex::matching_lengths(WordView probe) const {
  std::vector<std::size_t> out(probe.size(), 0);
  int state       = 0;
  std::size_t cur = 0;
  for (std::size_t i = 0; i < probe.size(); ++i) {
    std::size_t c = probe[i];
    if (c >= letters_) {
      state = 0;
      cur   = 0;
      continue;
    }
    while (state != 0 && next_[state * letters_ + c] == -1) {
      state = link_[state];
      cur   = len_[state];
    }
    if (next_[state * letters_ + c] != -1) {
      state = next_[state * letters_ + c];
      ++cur;
    }
    out[i] = cur;
  }
  return out;
}

bool SubwordIndex::contains(WordView w) const {
  int state = 0;
  for (Letter x : w) {
    if (x >= letters_) {
      return false;
    }
    state = next_[state * letters_ + x];
    if (state == -1) {
      return false;
    }
  }
  return true;
}

CommonSubword longest_common_subword_dp(WordView text, WordView probe) {
  CommonSubword best;
  std::vector<std::size_t> prev(probe.size() + 1, 0), row(probe.size() + 1, 0);
  for (std::size_t i = 1; i <= text.size(); ++i) {
    for (std::size_t j = 1; j <= probe.size(); ++j) {
      row[j] = text[i - 1] == probe[j - 1] ? prev[j - 1] + 1 : 0;
      if (row[j] > best.length) {
        best.length    = row[j];
        best.text_pos  = i - row[j];
        best.probe_pos = j - row[j];
      }
    }
    std::swap(prev, row);
  }
  return best;
}

}  // namespace morselab
