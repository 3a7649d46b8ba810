#pragma once

#include <string>
#include <vector>

#include "meyersig/fibration.hpp"
#include "meyersig/types.hpp"

namespace meyersig::bounds {

// Maximum number of separating singular fibers compatible with a
// relatively minimal fibration of fiber genus h >= 2 over a base of genus
// g >= 1 with n nonseparating singular fibers: 6(3h-1)(g-1) + 5n.
Int separating_bound(const Int& g, const Int& h, const Int& n);

// The sharper bound 6(h-1)(g-1) + 5n when the monodromy lies in the
// Torelli group.
Int torelli_separating_bound(const Int& g, const Int& h, const Int& n);

struct B2Bounds {
  Int b2_minus_lower;   // s + 1
  Rat b2_plus_lower;    // 1 + s/5
  bool vacuous = false; // s = 0: only the fiber class contributes
};

B2Bounds b2_bounds(const Int& s, const Int& g);

// The canonical-class chain: degree d = K.F = 2h-2 of the induced map
// Sigma -> B, the upper bound on g(Sigma)-1 from the adjunction formula,
// and the lower bound from Kneser's inequality.
struct CanonicalChain {
  Int k2_upper;           // 2 chi + 3 sigma_upper
  Int genus_sigma_upper;  // 2(10h-4)(g-1) + 5n - s, bound on g(Sigma)-1
  Int degree;             // 2h - 2
  Int kneser_lower;       // 2(h-1)(g-1), lower bound on g(Sigma)-1
};

CanonicalChain canonical_chain(const Int& g, const Int& h, const Int& s,
                               const Int& n);

enum class Verdict { Consistent, NoSuchFibration };

const char* to_string(Verdict v);

struct BoundEntry {
  std::string name;
  Int bound;
  bool satisfied;
};

struct BoundReport {
  Int g, h, s, n;
  bool torelli = false;

  Int chi;                 // 4(g-1)(h-1) + s + n
  Int sigma_upper_closed;  // 2h(2g-2) + n - s
  B2Bounds b2;
  CanonicalChain chain;

  std::vector<BoundEntry> entries;  // fixed order
  Verdict verdict = Verdict::Consistent;
  std::string failing;  // first failing entry name, empty when consistent
};

// Evaluates every inequality. Throws HypothesisViolation when h < 2,
// g < 1, or s/n < 0 (outside that range the bounds assert nothing).
BoundReport check(const Int& g, const Int& h, const Int& s, const Int& n,
                  bool torelli = false);
BoundReport check(const fibration::FibrationData& data, bool torelli = false);

}  // namespace meyersig::bounds
