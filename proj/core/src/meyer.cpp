#include "meyersig/meyer.hpp"

#include <cstdlib>
#include <stdexcept>

#include "meyersig/linalg.hpp"

namespace meyersig::meyer {

using symplectic::SymplecticForm;
using symplectic::SymplecticMatrix;

MeyerValue meyer_cocycle(const SymplecticMatrix& a, const SymplecticMatrix& b) {
  if (a.genus() != b.genus())
    throw GenusMismatch("meyer_cocycle: arguments have different genus");
  const int h = a.genus();
  const int n = 2 * h;

  // V_{A,B} = ker [A^{-1}-I | B-I].
  const IntMatrix ainv = a.inverse().matrix();
  const IntMatrix& bm = b.matrix();
  RatMatrix k(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      k(i, j) = Rat(ainv(i, j) - (i == j ? 1 : 0));
      k(i, n + j) = Rat(bm(i, j) - (i == j ? 1 : 0));
    }
  }
  const std::vector<std::vector<Rat>> basis = linalg::kernel_basis(k);
  const int d = static_cast<int>(basis.size());
  if (d == 0) return MeyerValue{0, 0};

  // C = J (I - B).
  const SymplecticForm form(h);
  const IntMatrix c = form.J() * (IntMatrix::identity(n) - bm);

  // Gram matrix of the form (x1+y1)^T C y2 on the kernel basis.
  RatMatrix gram(d, d);
  for (int i = 0; i < d; ++i) {
    std::vector<Rat> uc(static_cast<std::size_t>(n));
    for (int col = 0; col < n; ++col) {
      Rat acc = 0;
      for (int t = 0; t < n; ++t) {
        if (c(t, col) == 0) continue;
        acc += (basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] +
                basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + t)]) *
               c(t, col);
      }
      uc[static_cast<std::size_t>(col)] = acc;
    }
    for (int j = 0; j < d; ++j) {
      Rat acc = 0;
      for (int t = 0; t < n; ++t)
        acc += uc[static_cast<std::size_t>(t)] *
               basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(n + t)];
      gram(i, j) = acc;
    }
  }

  RatMatrix sym(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) sym(i, j) = (gram(i, j) + gram(j, i)) / 2;

  const linalg::SignatureTriple t = linalg::signature_of_symmetric(sym);
  // Overall sign pinned by the torus-word anchor: (c1 c2)^6 at h = 1 must
  // have disk signature -8.
  MeyerValue v{t.neg - t.pos, t.pos + t.neg};
  if (std::abs(v.value) > v.dim_v || v.dim_v > n)
    throw std::logic_error("meyer_cocycle: rank bound violated");
  return v;
}

bool cocycle_identity_check(const SymplecticMatrix& a, const SymplecticMatrix& b,
                            const SymplecticMatrix& c) {
  if (a.genus() != b.genus() || b.genus() != c.genus())
    throw GenusMismatch("cocycle_identity_check: arguments have different genus");
  const int lhs = meyer_cocycle(a, b).value + meyer_cocycle(a * b, c).value;
  const int rhs = meyer_cocycle(a, b * c).value + meyer_cocycle(b, c).value;
  return lhs == rhs;
}

}  // namespace meyersig::meyer
