#include "morselab/words.hpp"

#include <algorithm>
#include <cctype>

#include "morselab/error.hpp"

namespace morselab {

Alphabet::Alphabet(std::vector<char> names) : names_(std::move(names)) {
  if (names_.size() > 26) {
    throw InvalidArgument("at most 26 generators are supported");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    char c = names_[i];
    if (c < 'a' || c > 'z') {
      throw InvalidArgument(std::string("generator '") + c
                            + "' is not a lowercase letter");
    }
    if (std::find(names_.begin(), names_.begin() + i, c)
        != names_.begin() + i) {
      throw InvalidArgument(std::string("duplicate generator '") + c + "'");
    }
  }
}

Alphabet Alphabet::standard(std::size_t generators) {
  std::vector<char> names;
  for (std::size_t i = 0; i < generators; ++i) {
    names.push_back(static_cast<char>('a' + i));
  }
  return Alphabet(std::move(names));
}

char Alphabet::symbol(Letter x) const {
  if (!contains(x)) {
    throw InvalidArgument("letter index " + std::to_string(x)
                          + " outside the alphabet");
  }
  char c = names_[x / 2];
  return is_inverse_letter(x) ? static_cast<char>(c - 'a' + 'A') : c;
}

std::optional<Letter> Alphabet::letter(char c) const noexcept {
  bool upper = c >= 'A' && c <= 'Z';
  char lower = upper ? static_cast<char>(c - 'A' + 'a') : c;
  auto it    = std::find(names_.begin(), names_.end(), lower);
  if (it == names_.end()) {
    return std::nullopt;
  }
  auto i = static_cast<std::size_t>(it - names_.begin());
  return static_cast<Letter>(2 * i + (upper ? 1 : 0));
}

std::string Alphabet::format(WordView w) const {
  std::string out;
  out.reserve(w.size());
  for (Letter x : w) {
    out.push_back(symbol(x));
  }
  return out;
}

Word Alphabet::parse(std::string_view text) const {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      continue;
    }
    auto x = letter(c);
    if (!x) {
      throw InvalidArgument(std::string("unknown symbol '") + c + "'");
    }
    w.push_back(*x);
  }
  return w;
}

Word free_reduce(WordView w) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (!out.empty() && out.back() == inverse(x)) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

bool is_freely_reduced(WordView w) noexcept {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == inverse(w[i - 1])) {
      return false;
    }
  }
  return true;
}

bool is_cyclically_reduced(WordView w) noexcept {
  return is_freely_reduced(w)
         && (w.size() < 2 || w.front() != inverse(w.back()));
}

Word inverse(WordView w) {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[w.size() - 1 - i] = inverse(w[i]);
  }
  return out;
}

Word concat(WordView u, WordView v) {
  Word out(u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word cyclic_shift(WordView w, std::size_t k) {
  Word out;
  if (w.empty()) {
    return out;
  }
  k %= w.size();
  out.reserve(w.size());
  out.insert(out.end(), w.begin() + k, w.end());
  out.insert(out.end(), w.begin(), w.begin() + k);
  return out;
}

CyclicReduction cyclic_reduce(WordView w) {
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && w[lo] == inverse(w[hi - 1])) {
    ++lo;
    --hi;
  }
  return {Word(w.begin() + lo, w.begin() + hi), Word(w.begin(), w.begin() + lo)};
}

bool is_subword(WordView needle, WordView haystack) {
  return needle.empty()
         || std::search(haystack.begin(), haystack.end(), needle.begin(),
                        needle.end())
                != haystack.end();
}

}  // namespace morselab
