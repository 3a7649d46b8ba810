#include "meyersig/symplectic.hpp"

#include <string>
#include <utility>

namespace meyersig::symplectic {

namespace {

IntMatrix standard_j(int genus) {
  IntMatrix j(2 * genus, 2 * genus);
  for (int i = 0; i < genus; ++i) {
    j(2 * i, 2 * i + 1) = 1;
    j(2 * i + 1, 2 * i) = -1;
  }
  return j;
}

}  // namespace

SymplecticForm::SymplecticForm(int genus) : genus_(genus), j_(standard_j(genus)) {
  if (genus < 1) throw DimensionMismatch("symplectic form requires genus >= 1");
}

Int SymplecticForm::pairing(const std::vector<Int>& x,
                            const std::vector<Int>& y) const {
  const int n = 2 * genus_;
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw DimensionMismatch("pairing: vector length must be 2h");
  Int acc = 0;
  for (int i = 0; i < genus_; ++i) {
    acc += x[2 * i] * y[2 * i + 1];
    acc -= x[2 * i + 1] * y[2 * i];
  }
  return acc;
}

bool is_symplectic(const IntMatrix& m, int genus) {
  if (m.rows() != 2 * genus || m.cols() != 2 * genus)
    throw DimensionMismatch("is_symplectic: matrix must be 2h x 2h");
  const IntMatrix j = standard_j(genus);
  return m.transposed() * j * m == j;
}

SymplecticMatrix::SymplecticMatrix(int genus, IntMatrix m)
    : genus_(genus), m_(std::move(m)) {
  if (!is_symplectic(m_, genus_))
    throw NotSymplectic("matrix does not preserve the symplectic form");
}

SymplecticMatrix SymplecticMatrix::identity(int genus) {
  return SymplecticMatrix(genus, IntMatrix::identity(2 * genus));
}

SymplecticMatrix SymplecticMatrix::inverse() const {
  const IntMatrix j = standard_j(genus_);
  return SymplecticMatrix(genus_, -(j * m_.transposed() * j));
}

SymplecticMatrix operator*(const SymplecticMatrix& a, const SymplecticMatrix& b) {
  if (a.genus_ != b.genus_)
    throw GenusMismatch("product of symplectic matrices of different genus");
  return SymplecticMatrix(a.genus_, a.m_ * b.m_);
}

CurveClass CurveClass::nonseparating(std::vector<Int> v) {
  Int g = 0;
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g != 1)
    throw NonPrimitiveVector("nonseparating class must be a primitive vector");
  CurveClass c;
  c.separating_ = false;
  c.vec_ = std::move(v);
  return c;
}

CurveClass CurveClass::separating(int side_genus) {
  if (side_genus < 1)
    throw SideGenusOutOfRange("side genus must be >= 1");
  CurveClass c;
  c.separating_ = true;
  c.side_genus_ = side_genus;
  return c;
}

const std::vector<Int>& CurveClass::vec() const {
  if (separating_)
    throw Error("vec() called on a separating curve class");
  return vec_;
}

int CurveClass::side_genus() const {
  if (!separating_)
    throw Error("side_genus() called on a nonseparating curve class");
  return side_genus_;
}

SymplecticMatrix transvection(const SymplecticForm& form, const CurveClass& c) {
  const int h = form.genus();
  const int n = 2 * h;
  if (c.is_separating()) {
    if (c.side_genus() > h - 1)
      throw SideGenusOutOfRange("side genus " + std::to_string(c.side_genus()) +
                                " exceeds h-1 = " + std::to_string(h - 1));
    return SymplecticMatrix::identity(h);
  }
  const std::vector<Int>& v = c.vec();
  if (static_cast<int>(v.size()) != n)
    throw DimensionMismatch("curve class vector length must be 2h");
  // T = I + v (Jv)^T, i.e. x -> x + <x,v> v.
  const std::vector<Int> jv = form.J().apply(v);
  IntMatrix t = IntMatrix::identity(n);
  for (int i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < n; ++j) t(i, j) += v[i] * jv[j];
  }
  return SymplecticMatrix(h, std::move(t));
}

std::vector<CurveClass> chain_curves(int genus) {
  if (genus < 1) throw DimensionMismatch("chain_curves requires genus >= 1");
  const int n = 2 * genus;
  std::vector<CurveClass> chain;
  chain.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= genus; ++i) {
    std::vector<Int> v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(2 * (i - 1))] = 1;
    if (i >= 2) v[static_cast<std::size_t>(2 * (i - 2))] = -1;
    chain.push_back(CurveClass::nonseparating(std::move(v)));
    std::vector<Int> w(static_cast<std::size_t>(n));
    w[static_cast<std::size_t>(2 * (i - 1) + 1)] = 1;
    chain.push_back(CurveClass::nonseparating(std::move(w)));
  }
  std::vector<Int> last(static_cast<std::size_t>(n));
  last[static_cast<std::size_t>(2 * (genus - 1))] = -1;
  chain.push_back(CurveClass::nonseparating(std::move(last)));
  return chain;
}

}  // namespace meyersig::symplectic
