#pragma once

#include <vector>

#include "meyersig/matrix.hpp"

namespace meyersig::symplectic {

// The standard symplectic form on H_1 of a closed genus-h surface, in the
// basis a1, b1, ..., ah, bh. J is block diagonal with h blocks
// [[0,1],[-1,0]] and the pairing is <x, y> = x^T J y, so <a_i, b_i> = 1.
class SymplecticForm {
 public:
  explicit SymplecticForm(int genus);

  int genus() const { return genus_; }
  const IntMatrix& J() const { return j_; }
  Int pairing(const std::vector<Int>& x, const std::vector<Int>& y) const;

 private:
  int genus_;
  IntMatrix j_;
};

// True iff m is 2h x 2h and m^T J m = J. Throws DimensionMismatch when the
// shape is wrong.
bool is_symplectic(const IntMatrix& m, int genus);

// Element of Sp(2h, Z). The defining relation M^T J M = J is checked at
// construction, so every instance is genuinely symplectic.
class SymplecticMatrix {
 public:
  SymplecticMatrix(int genus, IntMatrix m);

  static SymplecticMatrix identity(int genus);

  int genus() const { return genus_; }
  const IntMatrix& matrix() const { return m_; }
  bool is_identity() const { return m_.is_identity(); }

  // Exact inverse -J M^T J; no rational arithmetic needed.
  SymplecticMatrix inverse() const;

  friend SymplecticMatrix operator*(const SymplecticMatrix& a,
                                    const SymplecticMatrix& b);
  friend bool operator==(const SymplecticMatrix&, const SymplecticMatrix&) = default;

 private:
  int genus_;
  IntMatrix m_;
};

// Homology class of a vanishing cycle: a primitive vector for a
// nonseparating curve, or the side genus (the genus of one of the two
// pieces the curve cuts off) for a separating one.
class CurveClass {
 public:
  static CurveClass nonseparating(std::vector<Int> v);
  static CurveClass separating(int side_genus);

  bool is_separating() const { return separating_; }
  const std::vector<Int>& vec() const;
  int side_genus() const;

  friend bool operator==(const CurveClass&, const CurveClass&) = default;

 private:
  CurveClass() = default;

  bool separating_ = false;
  std::vector<Int> vec_;
  int side_genus_ = 0;
};

// Homology action of the right-handed Dehn twist along c:
// x -> x + <x, c> c for a nonseparating class, the identity for a
// separating one (those are null-homologous).
SymplecticMatrix transvection(const SymplecticForm& form, const CurveClass& c);

// The chain classes c1, ..., c_{2h+1}: consecutive classes pair to +-1,
// non-consecutive ones to 0. Concretely c_{2i-1} = a_i - a_{i-1} (a_0 = 0),
// c_{2i} = b_i, and c_{2h+1} = -a_h.
std::vector<CurveClass> chain_curves(int genus);

}  // namespace meyersig::symplectic
