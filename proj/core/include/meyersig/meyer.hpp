#pragma once

#include "meyersig/symplectic.hpp"

namespace meyersig::meyer {

// Value of the Meyer signature cocycle at a pair of symplectic matrices,
// together with the rank of the underlying bilinear form (the dimension of
// its nondegenerate part). Always |value| <= dim_v <= 2h.
struct MeyerValue {
  int value = 0;
  int dim_v = 0;

  friend bool operator==(const MeyerValue&, const MeyerValue&) = default;
};

// tau_h(A, B): the signature of the (symmetrized) Meyer form on
//   V_{A,B} = { (x, y) : (A^{-1} - I) x + (B - I) y = 0 },
//   <(x1,y1), (x2,y2)> = (x1 + y1)^T J (I - B) y2,
// computed exactly. The overall sign is fixed so that the twelve-letter
// torus word (c1 c2)^6 at h = 1 has disk signature -8.
MeyerValue meyer_cocycle(const symplectic::SymplecticMatrix& a,
                         const symplectic::SymplecticMatrix& b);

// Whether tau(A,B) + tau(AB,C) = tau(A,BC) + tau(B,C).
bool cocycle_identity_check(const symplectic::SymplecticMatrix& a,
                            const symplectic::SymplecticMatrix& b,
                            const symplectic::SymplecticMatrix& c);

}  // namespace meyersig::meyer
