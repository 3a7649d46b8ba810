#pragma once

#include "meyersig/errors.hpp"
#include "meyersig/types.hpp"

namespace meyersig::scl {

enum class Flavor {
  Full,            // mapping class group, product of `factors` separating twists
  Hyperelliptic,   // hyperelliptic mapping class group, element t_a^ord
  Torelli,         // Torelli group, element t_a^2, bound from the general estimate
  TorelliRefined,  // Torelli group, element t_a^2, bound from the Torelli estimate
};

struct SclQuery {
  Int genus;
  Flavor flavor = Flavor::Full;
  // Number of separating twist factors (equivalently the twist power) for
  // Flavor::Full; ignored by the other flavors, whose element is fixed.
  Int factors = 1;
};

// Smallest integer N with N >= 1 + k/(6(3h-1)): a product of N commutators
// equal to t_a^k needs at least this many factors.
Int commutator_count_lower(const Int& genus, const Int& power);

// Lower bound for the stable commutator length, as an exact reduced
// rational:
//   Full           s/(6(3h-1))
//   Hyperelliptic  ord/(6(3h-1)), ord = 4(2h+1) for odd h, 2(2h+1) for even h
//   Torelli        2/(6(3h-1))        (requires h >= 3)
//   TorelliRefined 2/(6(h-1))         (requires h >= 3)
Rat scl_lower(const SclQuery& query);

// Order of the abelianization of the hyperelliptic mapping class group:
// 4(2h+1) for odd h, 2(2h+1) for even h.
Int abelianization_order_hyperelliptic(const Int& genus);

}  // namespace meyersig::scl
