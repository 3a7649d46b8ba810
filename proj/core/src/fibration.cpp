#include "meyersig/fibration.hpp"

#include <string>
#include <utility>

namespace meyersig::fibration {

using symplectic::CurveClass;
using symplectic::SymplecticForm;
using symplectic::SymplecticMatrix;
using wordlang::Letter;
using wordlang::LetterKind;
using wordlang::WordAST;

int FibrationData::separating_count() const {
  int s = 0;
  for (const CurveClass& c : vanishing_cycles)
    if (c.is_separating()) ++s;
  return s;
}

int FibrationData::nonseparating_count() const {
  return static_cast<int>(vanishing_cycles.size()) - separating_count();
}

CurveClass curve_of_letter(const Letter& letter, int genus) {
  switch (letter.kind) {
    case LetterKind::Chain: {
      if (letter.index < 1 || letter.index > 2 * genus + 1)
        throw Error("chain index " + std::to_string(letter.index) +
                    " out of range at genus " + std::to_string(genus));
      return symplectic::chain_curves(genus)[static_cast<std::size_t>(letter.index - 1)];
    }
    case LetterKind::Vector:
      if (static_cast<int>(letter.vec.size()) != 2 * genus)
        throw DimensionMismatch("vector twist has wrong length for genus " +
                                std::to_string(genus));
      return CurveClass::nonseparating(letter.vec);
    case LetterKind::Sep: {
      CurveClass c = CurveClass::separating(letter.side_genus);
      if (c.side_genus() > genus - 1)
        throw SideGenusOutOfRange("side genus " + std::to_string(c.side_genus()) +
                                  " exceeds h-1 at genus " + std::to_string(genus));
      return c;
    }
  }
  throw Error("unknown letter kind");
}

FibrationData from_file(const wordlang::FibrationFile& file) {
  FibrationData data;
  data.fiber_genus = file.fiber_genus;
  data.base_genus = file.base_genus;
  for (const Letter& l : file.word.elaborate()) {
    if (l.inverse)
      throw InverseInPositivePart("vanishing-cycle word must be positive");
    data.vanishing_cycles.push_back(curve_of_letter(l, file.fiber_genus));
  }
  data.flat_pairs = file.flat_pairs;
  return data;
}

Int euler_characteristic(const FibrationData& data) {
  const Int g = data.base_genus;
  const Int h = data.fiber_genus;
  return 4 * (g - 1) * (h - 1) + data.separating_count() +
         data.nonseparating_count();
}

SymplecticMatrix monodromy_image(const WordAST& word) {
  const int h = word.genus;
  const SymplecticForm form(h);
  SymplecticMatrix m = SymplecticMatrix::identity(h);
  for (const Letter& l : word.elaborate()) {
    SymplecticMatrix t = transvection(form, curve_of_letter(l, h));
    if (l.inverse) t = t.inverse();
    m = m * t;
  }
  return m;
}

bool sp_consistency(const FibrationData& data) {
  if (static_cast<int>(data.flat_pairs.size()) != data.base_genus)
    throw FlatPairCountMismatch(
        "expected " + std::to_string(data.base_genus) + " flat pairs, found " +
        std::to_string(data.flat_pairs.size()));
  const int h = data.fiber_genus;
  const SymplecticForm form(h);

  SymplecticMatrix lhs = SymplecticMatrix::identity(h);
  for (const CurveClass& c : data.vanishing_cycles)
    lhs = lhs * transvection(form, c);

  SymplecticMatrix rhs = SymplecticMatrix::identity(h);
  for (const auto& [wa, wb] : data.flat_pairs) {
    if (wa.genus != h || wb.genus != h)
      throw GenusMismatch("flat-pair word genus differs from fiber genus");
    const SymplecticMatrix a = monodromy_image(wa);
    const SymplecticMatrix b = monodromy_image(wb);
    rhs = rhs * a * b * a.inverse() * b.inverse();
  }
  return lhs == rhs;
}

Int signature_over_disk(const WordAST& word) {
  const int h = word.genus;
  const SymplecticForm form(h);
  const std::vector<Letter> letters = word.elaborate();

  Int sigma = 0;
  SymplecticMatrix partial = SymplecticMatrix::identity(h);
  bool first = true;
  for (const Letter& l : letters) {
    if (l.inverse)
      throw InverseInPositivePart("signature_over_disk requires a positive word");
    const SymplecticMatrix t = transvection(form, curve_of_letter(l, h));
    if (!first) sigma -= meyer::meyer_cocycle(partial, t).value;
    partial = partial * t;
    first = false;
    if (l.kind == LetterKind::Sep) sigma -= 1;
  }
  return sigma;
}

Int signature_upper_closed(const FibrationData& data) {
  if (data.base_genus < 1)
    throw BaseGenusTooSmall("signature_upper_closed requires base genus >= 1");
  const Int g = data.base_genus;
  const Int h = data.fiber_genus;
  return 2 * h * (2 * g - 2) + data.nonseparating_count() -
         data.separating_count();
}

FibrationData build_separating_power(int fiber_genus, int power, int side_genus,
                                     int base_genus) {
  if (fiber_genus < 2)
    throw HypothesisViolation("build_separating_power requires fiber genus >= 2");
  if (power < 1)
    throw HypothesisViolation("build_separating_power requires power >= 1");
  if (base_genus < 0)
    throw HypothesisViolation("build_separating_power requires base genus >= 0");
  CurveClass cycle = CurveClass::separating(side_genus);
  if (side_genus > fiber_genus - 1)
    throw SideGenusOutOfRange("side genus " + std::to_string(side_genus) +
                              " exceeds h-1 = " + std::to_string(fiber_genus - 1));

  FibrationData data;
  data.fiber_genus = fiber_genus;
  data.base_genus = base_genus;
  data.vanishing_cycles.assign(static_cast<std::size_t>(power), cycle);
  const WordAST empty = wordlang::parse_word("", fiber_genus, wordlang::WordPart::Flat);
  data.flat_pairs.assign(static_cast<std::size_t>(base_genus), {empty, empty});
  return data;
}

}  // namespace meyersig::fibration
