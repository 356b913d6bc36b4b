#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "morselab/words.hpp"

namespace morselab {

class Presentation {
 public:
  Presentation() = default;
  // Relators are freely and cyclically reduced on the way in; a relator
  // that vanishes throws InvalidArgument.
  Presentation(Alphabet alphabet, std::vector<Word> relators);

  Alphabet const& alphabet() const noexcept {
    return alphabet_;
  }
  std::vector<Word> const& relators() const noexcept {
    return relators_;
  }
  std::size_t max_relator_length() const noexcept;

  bool operator==(Presentation const&) const = default;

 private:
  Alphabet alphabet_;
  std::vector<Word> relators_;
};

struct ParsedPresentation {
  Presentation presentation;
  std::vector<std::string> warnings;
};

// Line-oriented format:
//   gens: a b c
//   rel: abAB
// '#' starts a comment. Throws ParseError with line/column.
ParsedPresentation parse_presentation(std::string_view text);
ParsedPresentation read_presentation_file(std::string const& path);

std::string print_presentation(Presentation const& p);

}  // namespace morselab
