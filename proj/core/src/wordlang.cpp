#include "meyersig/wordlang.hpp"

#include <cctype>
#include <istream>
#include <sstream>
#include <string>
#include <utility>

namespace meyersig::wordlang {

namespace {

using Kind = WordNode::Kind;
using EKind = ParseError::Kind;

constexpr long kMaxCount = 1000000000L;

std::string make_message(EKind kind, std::size_t offset, const std::string& msg) {
  return "offset " + std::to_string(offset) + ": " +
         std::string(ParseError::kind_name(kind)) + ": " + msg;
}

class Parser {
 public:
  Parser(std::string_view text, int genus, WordPart part)
      : text_(text), genus_(genus), part_(part) {}

  WordNode parse_whole_word() {
    WordNode seq = parse_sequence();
    skip_ws();
    if (!at_end()) fail(EKind::Syntax, unexpected_here());
    return seq;
  }

  std::pair<WordNode, WordNode> parse_whole_pair() {
    skip_ws();
    expect('[');
    WordNode a = parse_sequence();
    expect(',');
    WordNode b = parse_sequence();
    expect(']');
    skip_ws();
    if (!at_end()) fail(EKind::Syntax, unexpected_here());
    return {std::move(a), std::move(b)};
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c)
      fail(EKind::Syntax, std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(EKind kind, const std::string& msg) const {
    fail_at(pos_, kind, msg);
  }

  [[noreturn]] void fail_at(std::size_t offset, EKind kind,
                            const std::string& msg) const {
    throw ParseError(kind, offset, make_message(kind, offset, msg));
  }

  std::string unexpected_here() const {
    if (at_end()) return "unexpected end of input";
    return std::string("unexpected character '") + peek() + "'";
  }

  // Non-negative decimal count (chain indices, side genera, exponents).
  long parse_count() {
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail(EKind::Syntax, "expected a number");
    long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > kMaxCount) fail(EKind::Syntax, "number too large");
      ++pos_;
    }
    return value;
  }

  // Signed integer vector entry, arbitrary precision.
  Int parse_integer() {
    skip_ws();
    std::string digits;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      digits.push_back(peek());
      ++pos_;
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail(EKind::Syntax, "expected an integer");
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(peek());
      ++pos_;
    }
    return Int(digits);
  }

  WordNode parse_sequence() {
    WordNode seq;
    seq.kind = Kind::Sequence;
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c == ')' || c == ']' || c == ',') break;
      seq.children.push_back(parse_item());
    }
    return seq;
  }

  WordNode parse_item() {
    WordNode node = parse_atom();
    for (;;) {
      skip_ws();
      if (!at_end() && peek() == '^') {
        std::size_t op = pos_;
        ++pos_;
        long n = parse_count();
        if (n < 1) fail_at(op, EKind::Syntax, "power exponent must be >= 1");
        WordNode p;
        p.kind = Kind::Power;
        p.exponent = n;
        p.children.push_back(std::move(node));
        node = std::move(p);
      } else if (!at_end() && peek() == '\'') {
        std::size_t op = pos_;
        ++pos_;
        if (part_ == WordPart::Positive)
          fail_at(op, EKind::InverseInPositivePart,
                  "inverse letters are allowed only in flat-part words");
        WordNode p;
        p.kind = Kind::Inverse;
        p.children.push_back(std::move(node));
        node = std::move(p);
      } else {
        break;
      }
    }
    return node;
  }

  WordNode parse_atom() {
    skip_ws();
    if (at_end()) fail(EKind::Syntax, "unexpected end of input");
    const std::size_t start = pos_;
    const char c = peek();

    if (c == '(') {
      ++pos_;
      WordNode seq = parse_sequence();
      expect(')');
      return seq;
    }

    if (c == '[') {
      if (part_ == WordPart::Positive)
        fail_at(start, EKind::InverseInPositivePart,
                "commutator blocks are allowed only in flat-part words");
      ++pos_;
      WordNode node;
      node.kind = Kind::Commutator;
      node.children.push_back(parse_sequence());
      expect(',');
      node.children.push_back(parse_sequence());
      expect(']');
      return node;
    }

    if (c == 'c') {
      ++pos_;
      long idx = parse_count();
      if (idx < 1 || idx > 2L * genus_ + 1)
        fail_at(start, EKind::IndexOutOfRange,
                "chain index c" + std::to_string(idx) + " out of range 1.." +
                    std::to_string(2 * genus_ + 1) + " at genus " +
                    std::to_string(genus_));
      return letter_node(Letter{LetterKind::Chain, static_cast<int>(idx), {}, 0, false});
    }

    if (c == 'S') {
      ++pos_;
      expect('{');
      long k = parse_count();
      expect('}');
      if (k < 1 || k > static_cast<long>(genus_) - 1)
        fail_at(start, EKind::SideGenusOutOfRange,
                "side genus " + std::to_string(k) + " out of range 1.." +
                    std::to_string(genus_ - 1) + " at genus " +
                    std::to_string(genus_));
      return letter_node(Letter{LetterKind::Sep, 0, {}, static_cast<int>(k), false});
    }

    if (c == 'T') {
      ++pos_;
      expect('[');
      std::vector<Int> entries;
      for (;;) {
        entries.push_back(parse_integer());
        skip_ws();
        if (!at_end() && peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
      expect(']');
      if (static_cast<int>(entries.size()) != 2 * genus_)
        fail_at(start, EKind::VectorLengthMismatch,
                "vector has " + std::to_string(entries.size()) +
                    " entries, expected " + std::to_string(2 * genus_));
      Int g = 0;
      for (const Int& x : entries)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g != 1)
        fail_at(start, EKind::NonPrimitiveVector,
                "vector entries must have gcd 1");
      return letter_node(Letter{LetterKind::Vector, 0, std::move(entries), 0, false});
    }

    fail(EKind::Syntax, unexpected_here());
  }

  static WordNode letter_node(Letter l) {
    WordNode node;
    node.kind = Kind::Letter;
    node.letter = std::move(l);
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int genus_;
  WordPart part_;
};

void elaborate_node(const WordNode& node, bool inv, std::size_t max_letters,
                    std::vector<Letter>& out) {
  switch (node.kind) {
    case Kind::Letter: {
      if (out.size() >= max_letters)
        throw Error("word elaboration exceeds " + std::to_string(max_letters) +
                    " letters");
      Letter l = node.letter;
      l.inverse = l.inverse != inv;
      out.push_back(std::move(l));
      return;
    }
    case Kind::Sequence:
      if (!inv) {
        for (const WordNode& child : node.children)
          elaborate_node(child, false, max_letters, out);
      } else {
        for (auto it = node.children.rbegin(); it != node.children.rend(); ++it)
          elaborate_node(*it, true, max_letters, out);
      }
      return;
    case Kind::Power:
      for (long i = 0; i < node.exponent; ++i)
        elaborate_node(node.children[0], inv, max_letters, out);
      return;
    case Kind::Inverse:
      elaborate_node(node.children[0], !inv, max_letters, out);
      return;
    case Kind::Commutator: {
      const WordNode& a = node.children[0];
      const WordNode& b = node.children[1];
      // [A,B] = A B A' B'; [A,B]' = [B,A].
      const WordNode& first = inv ? b : a;
      const WordNode& second = inv ? a : b;
      elaborate_node(first, false, max_letters, out);
      elaborate_node(second, false, max_letters, out);
      elaborate_node(first, true, max_letters, out);
      elaborate_node(second, true, max_letters, out);
      return;
    }
  }
}

bool needs_parens(const WordNode& node) { return node.kind == Kind::Sequence; }

void print_node(const WordNode& node, std::string& out) {
  switch (node.kind) {
    case Kind::Letter: {
      const Letter& l = node.letter;
      switch (l.kind) {
        case LetterKind::Chain:
          out += "c" + std::to_string(l.index);
          break;
        case LetterKind::Sep:
          out += "S{" + std::to_string(l.side_genus) + "}";
          break;
        case LetterKind::Vector: {
          out += "T[";
          for (std::size_t i = 0; i < l.vec.size(); ++i) {
            if (i) out += ",";
            out += l.vec[i].get_str();
          }
          out += "]";
          break;
        }
      }
      return;
    }
    case Kind::Sequence: {
      bool first = true;
      for (const WordNode& child : node.children) {
        if (!first) out += " ";
        first = false;
        print_node(child, out);
      }
      return;
    }
    case Kind::Power:
      if (needs_parens(node.children[0])) {
        out += "(";
        print_node(node.children[0], out);
        out += ")";
      } else {
        print_node(node.children[0], out);
      }
      out += "^" + std::to_string(node.exponent);
      return;
    case Kind::Inverse:
      if (needs_parens(node.children[0])) {
        out += "(";
        print_node(node.children[0], out);
        out += ")";
      } else {
        print_node(node.children[0], out);
      }
      out += "'";
      return;
    case Kind::Commutator:
      out += "[";
      print_node(node.children[0], out);
      out += ", ";
      print_node(node.children[1], out);
      out += "]";
      return;
  }
}

}  // namespace

std::vector<Letter> WordAST::elaborate(std::size_t max_letters) const {
  std::vector<Letter> out;
  elaborate_node(root, false, max_letters, out);
  return out;
}

WordAST parse_word(std::string_view text, int genus, WordPart part) {
  if (genus < 1) throw Error("parse_word: genus must be >= 1");
  Parser parser(text, genus, part);
  WordAST ast;
  ast.genus = genus;
  ast.part = part;
  ast.root = parser.parse_whole_word();
  return ast;
}

std::string print_word(const WordAST& w) {
  std::string out;
  print_node(w.root, out);
  return out;
}

std::pair<WordAST, WordAST> parse_flat_pair(std::string_view text, int genus) {
  if (genus < 1) throw Error("parse_flat_pair: genus must be >= 1");
  Parser parser(text, genus, WordPart::Flat);
  auto [a, b] = parser.parse_whole_pair();
  WordAST wa{genus, WordPart::Flat, std::move(a)};
  WordAST wb{genus, WordPart::Flat, std::move(b)};
  return {std::move(wa), std::move(wb)};
}

namespace {

[[noreturn]] void file_fail(int line_no, const std::string& msg) {
  throw ParseError(ParseError::Kind::FileFormat, 0,
                   "line " + std::to_string(line_no) + ": " + msg);
}

struct RawLine {
  int number;
  std::string key;
  std::string value;
};

long parse_file_int(const RawLine& line) {
  try {
    std::size_t used = 0;
    long v = std::stol(line.value, &used);
    while (used < line.value.size() &&
           std::isspace(static_cast<unsigned char>(line.value[used])))
      ++used;
    if (used != line.value.size())
      file_fail(line.number, "trailing characters after integer value");
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    file_fail(line.number, "expected an integer value for " + line.key);
  }
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

FibrationFile parse_fibration_file(std::istream& in) {
  std::vector<RawLine> lines;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (std::size_t hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    std::string stripped = trim(raw);
    if (stripped.empty()) continue;
    std::size_t eq = stripped.find('=');
    if (eq == std::string::npos)
      file_fail(line_no, "expected 'key = value'");
    RawLine l;
    l.number = line_no;
    l.key = trim(stripped.substr(0, eq));
    l.value = trim(stripped.substr(eq + 1));
    if (l.key.empty()) file_fail(line_no, "empty key");
    lines.push_back(std::move(l));
  }

  // Genus keys first so that the words can be parsed against them.
  bool have_h = false, have_g = false;
  long h = 0, g = 0;
  for (const RawLine& l : lines) {
    if (l.key == "fiber_genus") {
      if (have_h) file_fail(l.number, "duplicate fiber_genus");
      h = parse_file_int(l);
      have_h = true;
    } else if (l.key == "base_genus") {
      if (have_g) file_fail(l.number, "duplicate base_genus");
      g = parse_file_int(l);
      have_g = true;
    } else if (l.key != "word" && l.key != "flat") {
      file_fail(l.number, "unknown key '" + l.key + "'");
    }
  }
  if (!have_h) throw ParseError(ParseError::Kind::FileFormat, 0, "missing fiber_genus");
  if (!have_g) throw ParseError(ParseError::Kind::FileFormat, 0, "missing base_genus");
  if (h < 1) file_fail(0, "fiber_genus must be >= 1");
  if (g < 0) file_fail(0, "base_genus must be >= 0");

  FibrationFile file;
  file.fiber_genus = static_cast<int>(h);
  file.base_genus = static_cast<int>(g);
  file.word = parse_word("", file.fiber_genus, WordPart::Positive);

  bool have_word = false;
  for (const RawLine& l : lines) {
    try {
      if (l.key == "word") {
        if (have_word) file_fail(l.number, "duplicate word");
        file.word = parse_word(l.value, file.fiber_genus, WordPart::Positive);
        have_word = true;
      } else if (l.key == "flat") {
        file.flat_pairs.push_back(parse_flat_pair(l.value, file.fiber_genus));
      }
    } catch (const ParseError& e) {
      if (e.kind() == ParseError::Kind::FileFormat) throw;
      throw ParseError(e.kind(), e.offset(),
                       "line " + std::to_string(l.number) + ": " + e.what());
    }
  }
  return file;
}

FibrationFile parse_fibration_file_text(const std::string& text) {
  std::istringstream in(text);
  return parse_fibration_file(in);
}

}  // namespace meyersig::wordlang
