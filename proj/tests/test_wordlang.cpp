#include <random>
#include <sstream>

#include "doctest.h"
#include "meyersig/wordlang.hpp"
#include "testutil.hpp"

using namespace meyersig;
using namespace meyersig::wordlang;

namespace {

Letter chain(int i, bool inv = false) { return Letter{LetterKind::Chain, i, {}, 0, inv}; }
Letter sep(int k, bool inv = false) { return Letter{LetterKind::Sep, 0, {}, k, inv}; }

WordNode random_node(int genus, std::mt19937_64& rng, int depth, bool flat) {
  std::uniform_int_distribution<int> pick(0, flat ? 5 : 3);
  const int choice = depth <= 0 ? 0 : pick(rng);
  WordNode node;
  switch (choice) {
    case 0:
    case 1: {
      node.kind = WordNode::Kind::Letter;
      std::uniform_int_distribution<int> lk(0, genus >= 2 ? 2 : 1);
      switch (lk(rng)) {
        case 0: {
          std::uniform_int_distribution<int> idx(1, 2 * genus + 1);
          node.letter = chain(idx(rng));
          break;
        }
        case 1:
          node.letter =
              Letter{LetterKind::Vector, 0, testutil::random_primitive_vector(genus, rng), 0, false};
          break;
        default: {
          std::uniform_int_distribution<int> side(1, genus - 1);
          node.letter = sep(side(rng));
          break;
        }
      }
      return node;
    }
    case 2: {
      node.kind = WordNode::Kind::Sequence;
      std::uniform_int_distribution<int> len(0, 3);
      const int l = len(rng);
      for (int i = 0; i < l; ++i)
        node.children.push_back(random_node(genus, rng, depth - 1, flat));
      return node;
    }
    case 3: {
      node.kind = WordNode::Kind::Power;
      std::uniform_int_distribution<int> e(1, 3);
      node.exponent = e(rng);
      node.children.push_back(random_node(genus, rng, depth - 1, flat));
      return node;
    }
    case 4: {
      node.kind = WordNode::Kind::Inverse;
      node.children.push_back(random_node(genus, rng, depth - 1, flat));
      return node;
    }
    default: {
      node.kind = WordNode::Kind::Commutator;
      node.children.push_back(random_node(genus, rng, depth - 1, flat));
      node.children.push_back(random_node(genus, rng, depth - 1, flat));
      return node;
    }
  }
}

}  // namespace

TEST_SUITE("wordlang") {

TEST_CASE("power expansion") {
  auto w = parse_word("(c1 c2)^3", 1);
  auto letters = w.elaborate();
  REQUIRE(letters.size() == 6);
  for (std::size_t i = 0; i < letters.size(); ++i) {
    CHECK(letters[i].kind == LetterKind::Chain);
    CHECK(letters[i].index == (i % 2 == 0 ? 1 : 2));
    CHECK_FALSE(letters[i].inverse);
  }
}

TEST_CASE("separating powers and juxtaposition") {
  auto letters = parse_word("S{1}^2 c1", 2).elaborate();
  REQUIRE(letters.size() == 3);
  CHECK(letters[0] == sep(1));
  CHECK(letters[1] == sep(1));
  CHECK(letters[2] == chain(1));
}

TEST_CASE("vector twist literal") {
  auto letters = parse_word("T[0,1,1,0]", 2).elaborate();
  REQUIRE(letters.size() == 1);
  CHECK(letters[0].kind == LetterKind::Vector);
  CHECK(letters[0].vec == std::vector<Int>{0, 1, 1, 0});
}

TEST_CASE("whitespace insensitivity") {
  CHECK(parse_word("  ( c1   c2 ) ^ 3 ", 1).elaborate() ==
        parse_word("(c1 c2)^3", 1).elaborate());
  CHECK(parse_word("T[ 0 , 1 , 1 , 0 ]", 2).elaborate() ==
        parse_word("T[0,1,1,0]", 2).elaborate());
}

TEST_CASE("empty word") {
  CHECK(parse_word("", 3).elaborate().empty());
  CHECK(parse_word("   ", 3).elaborate().empty());
}

TEST_CASE("commutator elaboration") {
  auto letters = parse_word("[c1, c2]", 1, WordPart::Flat).elaborate();
  REQUIRE(letters.size() == 4);
  CHECK(letters[0] == chain(1));
  CHECK(letters[1] == chain(2));
  CHECK(letters[2] == chain(1, true));
  CHECK(letters[3] == chain(2, true));

  // [A,B]' = [B,A].
  auto inv = parse_word("[c1, c2]'", 1, WordPart::Flat).elaborate();
  REQUIRE(inv.size() == 4);
  CHECK(inv[0] == chain(2));
  CHECK(inv[1] == chain(1));
  CHECK(inv[2] == chain(2, true));
  CHECK(inv[3] == chain(1, true));
}

TEST_CASE("group inverse reverses the letter order") {
  auto letters = parse_word("(c1 c2)'", 1, WordPart::Flat).elaborate();
  REQUIRE(letters.size() == 2);
  CHECK(letters[0] == chain(2, true));
  CHECK(letters[1] == chain(1, true));
}

TEST_CASE("parse errors carry kinds and byte offsets") {
  auto expect = [](const char* text, int genus, WordPart part,
                   ParseError::Kind kind, std::size_t offset) {
    try {
      parse_word(text, genus, part);
      FAIL_CHECK("expected ParseError for ", text);
    } catch (const ParseError& e) {
      CHECK(e.kind() == kind);
      CHECK(e.offset() == offset);
    }
  };
  expect("c9", 1, WordPart::Positive, ParseError::Kind::IndexOutOfRange, 0);
  expect("c1 c7", 2, WordPart::Positive, ParseError::Kind::IndexOutOfRange, 3);
  expect("S{0}", 2, WordPart::Positive, ParseError::Kind::SideGenusOutOfRange, 0);
  expect("S{1}", 1, WordPart::Positive, ParseError::Kind::SideGenusOutOfRange, 0);
  expect("T[2,4]", 1, WordPart::Positive, ParseError::Kind::NonPrimitiveVector, 0);
  expect("T[0,0]", 1, WordPart::Positive, ParseError::Kind::NonPrimitiveVector, 0);
  expect("T[1,0,0]", 1, WordPart::Positive, ParseError::Kind::VectorLengthMismatch, 0);
  expect("c1'", 1, WordPart::Positive, ParseError::Kind::InverseInPositivePart, 2);
  expect("[c1, c2]", 1, WordPart::Positive, ParseError::Kind::InverseInPositivePart, 0);
  expect("(c1", 1, WordPart::Positive, ParseError::Kind::Syntax, 3);
  expect("c1)", 1, WordPart::Positive, ParseError::Kind::Syntax, 2);
  expect("(c1)^0", 1, WordPart::Positive, ParseError::Kind::Syntax, 4);
  expect("x1", 1, WordPart::Positive, ParseError::Kind::Syntax, 0);
}

TEST_CASE("printing fixed words") {
  CHECK(print_word(testutil::ast_from_letters(1, {chain(1), chain(2)})) == "c1 c2");
  CHECK(print_word(testutil::ast_from_letters(2, {sep(1)})) == "S{1}");
  auto w = parse_word("[c1, c2]", 1, WordPart::Flat);
  CHECK(print_word(w) == "[c1, c2]");
  CHECK(print_word(parse_word("(c1 c2)^3", 1)) == "(c1 c2)^3");
  CHECK(print_word(parse_word("T[0,-1,1,0]", 2)) == "T[0,-1,1,0]");
}

TEST_CASE("print/parse round trip on random trees") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> genus(1, 3);
  for (int iter = 0; iter < 200; ++iter) {
    const int h = genus(rng);
    const bool flat = iter % 2 == 0;
    WordAST ast;
    ast.genus = h;
    ast.part = flat ? WordPart::Flat : WordPart::Positive;
    ast.root.kind = WordNode::Kind::Sequence;
    std::uniform_int_distribution<int> len(0, 4);
    const int l = len(rng);
    for (int i = 0; i < l; ++i)
      ast.root.children.push_back(random_node(h, rng, 3, flat));

    std::string printed = print_word(ast);
    WordAST reparsed = parse_word(printed, h, ast.part);
    CHECK(reparsed.elaborate() == ast.elaborate());
  }
}

TEST_CASE("elaborated length of a power is multiplicative") {
  std::mt19937_64 rng(32);
  for (int iter = 0; iter < 50; ++iter) {
    std::uniform_int_distribution<int> len(0, 6);
    std::uniform_int_distribution<int> e(1, 5);
    auto letters = testutil::random_positive_letters(2, len(rng), rng);
    WordAST base = testutil::ast_from_letters(2, letters);
    WordAST powered;
    powered.genus = 2;
    powered.root.kind = WordNode::Kind::Sequence;
    WordNode p;
    p.kind = WordNode::Kind::Power;
    p.exponent = e(rng);
    p.children.push_back(base.root);
    powered.root.children.push_back(std::move(p));
    CHECK(powered.elaborate().size() == letters.size() * static_cast<std::size_t>(p.exponent));
  }
}

TEST_CASE("elaboration size cap") {
  auto w = parse_word("((c1)^2000)^600", 1);
  CHECK_THROWS_AS(w.elaborate(), Error);
  CHECK(w.elaborate(2000000).size() == 1200000);
}

TEST_CASE("flat pair parsing") {
  auto [a, b] = parse_flat_pair("[c1 c2', S{1}]", 2);
  auto la = a.elaborate();
  REQUIRE(la.size() == 2);
  CHECK(la[0] == chain(1));
  CHECK(la[1] == chain(2, true));
  auto lb = b.elaborate();
  REQUIRE(lb.size() == 1);
  CHECK(lb[0] == sep(1));
  CHECK_THROWS_AS(parse_flat_pair("c1, c2", 2), ParseError);
  CHECK_THROWS_AS(parse_flat_pair("[c1, c2] c3", 2), ParseError);
}

TEST_CASE("fibration file format") {
  const std::string text =
      "# an example file\n"
      "fiber_genus = 2\n"
      "base_genus = 1   # torus base\n"
      "word = c1 S{1}^2\n"
      "flat = [c1 c2, c3]\n";
  FibrationFile file = parse_fibration_file_text(text);
  CHECK(file.fiber_genus == 2);
  CHECK(file.base_genus == 1);
  CHECK(file.word.elaborate().size() == 3);
  REQUIRE(file.flat_pairs.size() == 1);
  CHECK(file.flat_pairs[0].first.elaborate().size() == 2);
  CHECK(file.flat_pairs[0].second.elaborate().size() == 1);

  // The word key is optional (empty word), and key order is free.
  FibrationFile bare = parse_fibration_file_text("base_genus = 0\nfiber_genus = 3\n");
  CHECK(bare.fiber_genus == 3);
  CHECK(bare.word.elaborate().empty());
  CHECK(bare.flat_pairs.empty());
}

TEST_CASE("fibration file errors") {
  auto kind_of = [](const std::string& text) {
    try {
      parse_fibration_file_text(text);
    } catch (const ParseError& e) {
      return e.kind();
    }
    throw std::logic_error("expected a ParseError");
  };
  CHECK(kind_of("base_genus = 0\n") == ParseError::Kind::FileFormat);
  CHECK(kind_of("fiber_genus = 1\n") == ParseError::Kind::FileFormat);
  CHECK(kind_of("fiber_genus = 1\nbase_genus = 0\nunknown = 3\n") ==
        ParseError::Kind::FileFormat);
  CHECK(kind_of("fiber_genus = 1\nfiber_genus = 1\nbase_genus = 0\n") ==
        ParseError::Kind::FileFormat);
  CHECK(kind_of("fiber_genus = one\nbase_genus = 0\n") ==
        ParseError::Kind::FileFormat);
  CHECK(kind_of("fiber_genus = 0\nbase_genus = 0\n") == ParseError::Kind::FileFormat);
  CHECK(kind_of("fiber_genus = 1\nbase_genus = 0\nword = c9\n") ==
        ParseError::Kind::IndexOutOfRange);
  CHECK(kind_of("fiber_genus = 1\nbase_genus = 0\nword = c1'\n") ==
        ParseError::Kind::InverseInPositivePart);
  CHECK(kind_of("fiber_genus = 1\nbase_genus = 1\nflat = c1\n") ==
        ParseError::Kind::Syntax);
}

}  // TEST_SUITE
