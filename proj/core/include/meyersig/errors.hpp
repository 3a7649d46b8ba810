#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace meyersig {

// Base class of all errors thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NonSymmetric : public Error {
 public:
  using Error::Error;
};

class NotSymplectic : public Error {
 public:
  using Error::Error;
};

class NonPrimitiveVector : public Error {
 public:
  using Error::Error;
};

class SideGenusOutOfRange : public Error {
 public:
  using Error::Error;
};

class GenusMismatch : public Error {
 public:
  using Error::Error;
};

class InverseInPositivePart : public Error {
 public:
  using Error::Error;
};

class FlatPairCountMismatch : public Error {
 public:
  using Error::Error;
};

class BaseGenusTooSmall : public Error {
 public:
  using Error::Error;
};

// Thrown by the bounds/scl layer when inputs fall outside the range
// where the inequalities say anything (fiber genus < 2 or base genus < 1).
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

// Any failure while reading the word DSL or a fibration file. Carries the
// byte offset of the offending input and a one-line message.
class ParseError : public Error {
 public:
  enum class Kind {
    Syntax,
    IndexOutOfRange,
    SideGenusOutOfRange,
    NonPrimitiveVector,
    VectorLengthMismatch,
    InverseInPositivePart,
    FileFormat,
  };

  ParseError(Kind kind, std::size_t offset, const std::string& message)
      : Error(message), kind_(kind), offset_(offset) {}

  Kind kind() const { return kind_; }
  std::size_t offset() const { return offset_; }

  static const char* kind_name(Kind kind) {
    switch (kind) {
      case Kind::Syntax: return "SyntaxError";
      case Kind::IndexOutOfRange: return "IndexOutOfRange";
      case Kind::SideGenusOutOfRange: return "SideGenusOutOfRange";
      case Kind::NonPrimitiveVector: return "NonPrimitiveVector";
      case Kind::VectorLengthMismatch: return "VectorLengthMismatch";
      case Kind::InverseInPositivePart: return "InverseInPositivePart";
      case Kind::FileFormat: return "FileFormatError";
    }
    return "ParseError";
  }

 private:
  Kind kind_;
  std::size_t offset_;
};

}  // namespace meyersig
