#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "meyersig/errors.hpp"
#include "meyersig/types.hpp"

namespace meyersig::wordlang {

enum class LetterKind { Chain, Vector, Sep };

// One fully elaborated twist letter.
struct Letter {
  LetterKind kind = LetterKind::Chain;
  int index = 0;            // Chain: 1 .. 2h+1
  std::vector<Int> vec;     // Vector: primitive homology class, length 2h
  int side_genus = 0;       // Sep: 1 .. h-1
  bool inverse = false;     // only in flat-part words

  friend bool operator==(const Letter&, const Letter&) = default;
};

// Parse tree before elaboration.
struct WordNode {
  enum class Kind { Letter, Sequence, Power, Inverse, Commutator };

  Kind kind = Kind::Sequence;
  Letter letter;                   // Kind::Letter
  std::vector<WordNode> children;  // Sequence: items; Power/Inverse: 1; Commutator: 2
  long exponent = 1;               // Kind::Power, >= 1
};

// Vanishing-cycle words are positive (twists only); flat-part words also
// allow inverses (postfix ') and commutator blocks [W1, W2].
enum class WordPart { Positive, Flat };

struct WordAST {
  int genus = 1;
  WordPart part = WordPart::Positive;
  WordNode root;  // Kind::Sequence

  static constexpr std::size_t default_max_letters = std::size_t{1} << 20;

  // Expands powers, inverses and commutators ([W1,W2] -> W1 W2 W1' W2')
  // into a flat letter sequence. Throws Error if the expansion exceeds
  // max_letters.
  std::vector<Letter> elaborate(std::size_t max_letters = default_max_letters) const;
};

// Grammar: letters `c<i>`, `T[v1,...,v_{2h}]`, `S{k}`; juxtaposition is
// left-to-right composition; `(...)^n` with n >= 1 repeats; flat-part words
// additionally allow postfix `'` and `[W1, W2]`. Whitespace insensitive.
// All errors are ParseError with a byte offset.
WordAST parse_word(std::string_view text, int genus,
                   WordPart part = WordPart::Positive);

// Inverse of parse_word up to elaboration: parsing the printed form yields
// the same elaborated letter sequence.
std::string print_word(const WordAST& w);

// Parses "[W1, W2]" into a pair of flat-part words.
std::pair<WordAST, WordAST> parse_flat_pair(std::string_view text, int genus);

// Line-oriented fibration description:
//   fiber_genus = <int>
//   base_genus  = <int>
//   word        = <positive word>            (optional, default empty)
//   flat        = [W1, W2]                   (zero or more lines)
// '#' starts a comment. fiber_genus and base_genus are required.
struct FibrationFile {
  int fiber_genus = 1;
  int base_genus = 0;
  WordAST word;
  std::vector<std::pair<WordAST, WordAST>> flat_pairs;
};

FibrationFile parse_fibration_file(std::istream& in);
FibrationFile parse_fibration_file_text(const std::string& text);

}  // namespace meyersig::wordlang
