#include "morselab/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "morselab/error.hpp"

namespace morselab {

Presentation::Presentation(Alphabet alphabet, std::vector<Word> relators)
    : alphabet_(std::move(alphabet)) {
  relators_.reserve(relators.size());
  for (auto const& r : relators) {
    for (Letter x : r) {
      if (!alphabet_.contains(x)) {
        throw InvalidArgument("relator letter outside the alphabet");
      }
    }
    auto core = cyclic_reduce(free_reduce(r)).core;
    if (core.empty()) {
      throw InvalidArgument("relator " + alphabet_.format(r)
                            + " reduces to the empty word");
    }
    relators_.push_back(std::move(core));
  }
}

std::size_t Presentation::max_relator_length() const noexcept {
  std::size_t m = 0;
  for (auto const& r : relators_) {
    m = std::max(m, r.size());
  }
  return m;
}

namespace {
  bool is_blank(char c) {
    return c == ' ' || c == '\t' || c == '\r';
  }
}  // namespace

ParsedPresentation parse_presentation(std::string_view text) {
  std::optional<Alphabet> alphabet;
  std::vector<std::pair<std::string, std::size_t>> relator_texts;
  ParsedPresentation out;

  std::size_t line_no = 0;
  std::size_t pos     = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) {
      eol = text.size();
    }
    auto line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::size_t col = 0;
    while (col < line.size() && is_blank(line[col])) {
      ++col;
    }
    if (col == line.size()) {
      if (eol == text.size()) {
        break;
      }
      continue;
    }
    auto colon = line.find(':', col);
    if (colon == std::string_view::npos) {
      throw ParseError(line_no, col + 1, "expected 'gens:' or 'rel:'");
    }
    auto key = line.substr(col, colon - col);
    while (!key.empty() && is_blank(key.back())) {
      key.remove_suffix(1);
    }
    auto body       = line.substr(colon + 1);
    std::size_t off = colon + 1;

    if (key == "gens") {
      if (alphabet) {
        throw ParseError(line_no, col + 1, "duplicate 'gens:' line");
      }
      std::vector<char> names;
      for (std::size_t i = 0; i < body.size(); ++i) {
        char c = body[i];
        if (is_blank(c)) {
          continue;
        }
        if (c < 'a' || c > 'z') {
          throw ParseError(line_no, off + i + 1,
                           std::string("generator '") + c
                               + "' must be a lowercase letter");
        }
        if (i + 1 < body.size() && !is_blank(body[i + 1])) {
          throw ParseError(line_no, off + i + 2,
                           "generators are single letters separated by "
                           "whitespace");
        }
        if (std::find(names.begin(), names.end(), c) != names.end()) {
          throw ParseError(line_no, off + i + 1,
                           std::string("duplicate generator '") + c + "'");
        }
        names.push_back(c);
      }
      alphabet.emplace(std::move(names));
    } else if (key == "rel") {
      if (!alphabet) {
        throw ParseError(line_no, col + 1, "'rel:' before 'gens:'");
      }
      Word w;
      for (std::size_t i = 0; i < body.size(); ++i) {
        char c = body[i];
        if (is_blank(c)) {
          continue;
        }
        auto x = alphabet->letter(c);
        if (!x) {
          throw ParseError(line_no, off + i + 1,
                           std::string("unknown symbol '") + c + "'");
        }
        w.push_back(*x);
      }
      if (w.empty()) {
        throw ParseError(line_no, off + 1, "empty relator");
      }
      auto reduced = free_reduce(w);
      auto cyc     = cyclic_reduce(reduced);
      if (cyc.core.empty()) {
        throw ParseError(line_no, off + 1,
                         "relator " + alphabet->format(w)
                             + " reduces to the empty word");
      }
      if (cyc.core != w) {
        out.warnings.push_back("line " + std::to_string(line_no)
                               + ": relator " + alphabet->format(w)
                               + " normalised to "
                               + alphabet->format(cyc.core));
      }
      relator_texts.emplace_back(alphabet->format(cyc.core), line_no);
    } else {
      throw ParseError(line_no, col + 1,
                       "unknown key '" + std::string(key) + "'");
    }
    if (eol == text.size()) {
      break;
    }
  }
  if (!alphabet) {
    throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'gens:' line");
  }
  std::vector<Word> relators;
  for (auto const& [t, ln] : relator_texts) {
    relators.push_back(alphabet->parse(t));
  }
  out.presentation = Presentation(*alphabet, std::move(relators));
  return out;
}

ParsedPresentation read_presentation_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::io, "cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

std::string print_presentation(Presentation const& p) {
  std::string out = "gens:";
  for (char c : p.alphabet().names()) {
    out += ' ';
    out += c;
  }
  out += '\n';
  for (auto const& r : p.relators()) {
    out += "rel: " + p.alphabet().format(r) + "\n";
  }
  return out;
}

}  // namespace morselab
