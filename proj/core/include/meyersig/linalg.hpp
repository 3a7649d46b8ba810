#pragma once

#include <vector>

#include "meyersig/matrix.hpp"

namespace meyersig::linalg {

// Inertia of a symmetric bilinear form: counts of positive, zero and
// negative diagonal entries after congruence diagonalization.
struct SignatureTriple {
  int pos = 0;
  int zero = 0;
  int neg = 0;

  int dimension() const { return pos + zero + neg; }
  int signature() const { return pos - neg; }

  friend bool operator==(const SignatureTriple&, const SignatureTriple&) = default;
};

// Basis of the right kernel {v : M v = 0}, exact. The returned vectors are
// linearly independent and there are cols - rank(M) of them.
std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m);

int rank(const RatMatrix& m);

// Inertia of a symmetric matrix by exact congruence diagonalization
// (symmetric pivoting; hyperbolic row/column addition when the remaining
// diagonal is zero). Throws NonSymmetric if s is not symmetric.
SignatureTriple signature_of_symmetric(const RatMatrix& s);

}  // namespace meyersig::linalg
