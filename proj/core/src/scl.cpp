#include "meyersig/scl.hpp"

namespace meyersig::scl {

Int commutator_count_lower(const Int& genus, const Int& power) {
  if (genus < 2)
    throw HypothesisViolation("commutator_count_lower requires genus >= 2");
  if (power < 1)
    throw HypothesisViolation("commutator_count_lower requires power >= 1");
  // Smallest N >= 1 + k/(6(3h-1)), i.e. 1 + ceil(k / (6(3h-1))).
  const Int d = 6 * (3 * genus - 1);
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), power.get_mpz_t(), d.get_mpz_t());
  return 1 + q;
}

Rat scl_lower(const SclQuery& query) {
  const Int& h = query.genus;
  if (h < 2) throw HypothesisViolation("scl bounds require genus >= 2");
  const Int d = 6 * (3 * h - 1);
  switch (query.flavor) {
    case Flavor::Full:
      if (query.factors < 1)
        throw HypothesisViolation("scl_lower requires >= 1 separating twist factors");
      return make_rat(query.factors, d);
    case Flavor::Hyperelliptic:
      return make_rat(abelianization_order_hyperelliptic(h), d);
    case Flavor::Torelli:
      if (h < 3)
        throw HypothesisViolation("Torelli scl bounds require genus >= 3");
      return make_rat(2, d);
    case Flavor::TorelliRefined:
      if (h < 3)
        throw HypothesisViolation("Torelli scl bounds require genus >= 3");
      return make_rat(2, 6 * (h - 1));
  }
  throw Error("unknown scl flavor");
}

Int abelianization_order_hyperelliptic(const Int& genus) {
  if (genus < 2)
    throw HypothesisViolation("hyperelliptic bounds require genus >= 2");
  return genus % 2 != 0 ? 4 * (2 * genus + 1) : 2 * (2 * genus + 1);
}

}  // namespace meyersig::scl
