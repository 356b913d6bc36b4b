#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace morselab {

// Letters index the symmetrised alphabet: generator i is 2i, its inverse 2i+1.
// Letter order (a < A < b < B < ...) is the order used by shortlex.
using Letter = std::uint16_t;
using Word   = std::vector<Letter>;
using WordView = std::span<Letter const>;

constexpr Letter inverse(Letter x) noexcept {
  return static_cast<Letter>(x ^ 1u);
}

constexpr Letter generator_letter(std::size_t i) noexcept {
  return static_cast<Letter>(2 * i);
}

constexpr bool is_inverse_letter(Letter x) noexcept {
  return (x & 1u) != 0;
}

// Generators are single lowercase symbols; the uppercase symbol is the
// formal inverse. The text format caps alphabets at 26 generators.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<char> names);

  static Alphabet standard(std::size_t generators);

  std::size_t generators() const noexcept {
    return names_.size();
  }
  std::size_t letters() const noexcept {
    return 2 * names_.size();
  }
  std::vector<char> const& names() const noexcept {
    return names_;
  }

  char symbol(Letter x) const;
  std::optional<Letter> letter(char c) const noexcept;
  bool contains(Letter x) const noexcept {
    return x < letters();
  }

  std::string format(WordView w) const;
  // Whitespace inside the text is ignored. Throws InvalidArgument on
  // symbols outside the alphabet.
  Word parse(std::string_view text) const;

  bool operator==(Alphabet const&) const = default;

 private:
  std::vector<char> names_;
};

Word free_reduce(WordView w);
bool is_freely_reduced(WordView w) noexcept;
bool is_cyclically_reduced(WordView w) noexcept;

Word inverse(WordView w);
Word concat(WordView u, WordView v);
// Rotation moving letter k to the front.
Word cyclic_shift(WordView w, std::size_t k);

struct CyclicReduction {
  Word core;
  Word conjugator;
};

// Strips matching first/last letters while first == inverse(last), so that
// w = conjugator . core . conjugator^-1 in the free group.
CyclicReduction cyclic_reduce(WordView w);

bool is_subword(WordView needle, WordView haystack);

}  // namespace morselab
