#pragma once

#include <utility>
#include <vector>

#include "meyersig/meyer.hpp"
#include "meyersig/symplectic.hpp"
#include "meyersig/wordlang.hpp"

namespace meyersig::fibration {

// Monodromy data of a Lefschetz fibration: fiber genus h, base genus g,
// the ordered vanishing cycles of the singular fibers (all lying over a
// disk), and g commutator pairs describing the flat part.
struct FibrationData {
  int fiber_genus = 1;
  int base_genus = 0;
  std::vector<symplectic::CurveClass> vanishing_cycles;
  std::vector<std::pair<wordlang::WordAST, wordlang::WordAST>> flat_pairs;

  int separating_count() const;
  int nonseparating_count() const;
};

// Homology class of one elaborated letter.
symplectic::CurveClass curve_of_letter(const wordlang::Letter& letter, int genus);

FibrationData from_file(const wordlang::FibrationFile& file);

// chi(X) = 4(g-1)(h-1) + s + n.
Int euler_characteristic(const FibrationData& data);

// Left-to-right product of the twist images of the word's letters.
symplectic::SymplecticMatrix monodromy_image(const wordlang::WordAST& word);

// Necessary condition for the closed fibration to exist: the product of
// the vanishing-cycle transvections equals the product of the commutators
// of the flat-pair images in Sp(2h, Z). Throws FlatPairCountMismatch when
// the number of flat pairs differs from the base genus.
bool sp_consistency(const FibrationData& data);

// Signature of the piece over a disk containing all critical values,
//   sigma = - sum_{j=1}^{m-1} tau_h(P_j, T_{j+1}) - s,
// where P_j is the image of the first j letters, T_{j+1} the next
// transvection, and s the number of separating letters (each contributes a
// local -1). Requires a positive word.
Int signature_over_disk(const wordlang::WordAST& word);

// Upper bound 2h(2g-2) + n - s for the signature of the closed fibration;
// requires base genus >= 1 (throws BaseGenusTooSmall otherwise).
Int signature_upper_closed(const FibrationData& data);

// Fibration with k separating singular fibers (all with the same vanishing
// cycle, of side genus side_genus) over a base of genus base_genus, flat
// part filled with empty placeholder words. Sp-consistent by construction
// since separating twists act trivially on homology.
FibrationData build_separating_power(int fiber_genus, int power,
                                     int side_genus, int base_genus);

}  // namespace meyersig::fibration
