#pragma once

#include <gmpxx.h>

namespace meyersig {

// Exact scalars. Int is an arbitrary-precision integer; Rat an exact
// rational kept in lowest terms with positive denominator.
using Int = mpz_class;
using Rat = mpq_class;

// Canonical rational num/den. den must be nonzero.
inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace meyersig
