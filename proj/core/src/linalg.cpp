#include "meyersig/linalg.hpp"

#include <utility>

namespace meyersig::linalg {

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(RatMatrix& a) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = -1;
    for (int i = r; i < a.rows(); ++i) {
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Rat pivot = a(r, c);
    for (int j = c; j < a.cols(); ++j) a(r, j) /= pivot;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rat f = a(i, c);
      for (int j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m) {
  RatMatrix a = m;
  std::vector<int> pivots = rref(a);

  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<std::vector<Rat>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Rat> v(static_cast<std::size_t>(m.cols()));
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[static_cast<std::size_t>(pivots[i])] = -a(static_cast<int>(i), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(const RatMatrix& m) {
  RatMatrix a = m;
  return static_cast<int>(rref(a).size());
}

SignatureTriple signature_of_symmetric(const RatMatrix& s) {
  if (s.rows() != s.cols())
    throw NonSymmetric("signature_of_symmetric: matrix is not square");
  const int n = s.rows();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (s(i, j) != s(j, i))
        throw NonSymmetric("signature_of_symmetric: matrix is not symmetric");

  RatMatrix w = s;
  SignatureTriple t;

  auto swap_sym = [&](int a, int b) {
    for (int k = 0; k < n; ++k) std::swap(w(a, k), w(b, k));
    for (int k = 0; k < n; ++k) std::swap(w(k, a), w(k, b));
  };

  for (int i = 0; i < n; ++i) {
    if (w(i, i) == 0) {
      // Symmetric pivoting: bring a nonzero diagonal entry to position i.
      int d = -1;
      for (int j = i + 1; j < n; ++j) {
        if (w(j, j) != 0) {
          d = j;
          break;
        }
      }
      if (d >= 0) {
        swap_sym(i, d);
      } else {
        // The remaining diagonal is zero. Find an off-diagonal entry and
        // add its row/column pair to create 2*w(j,k) on the diagonal.
        int pj = -1, pk = -1;
        for (int j = i; j < n && pj < 0; ++j) {
          for (int k = j + 1; k < n; ++k) {
            if (w(j, k) != 0) {
              pj = j;
              pk = k;
              break;
            }
          }
        }
        if (pj < 0) {
          t.zero += n - i;
          return t;
        }
        for (int k = 0; k < n; ++k) w(pj, k) += w(pk, k);
        for (int k = 0; k < n; ++k) w(k, pj) += w(k, pk);
        if (pj != i) swap_sym(i, pj);
      }
    }

    const Rat d = w(i, i);
    if (d > 0)
      ++t.pos;
    else
      ++t.neg;

    // Schur complement on the trailing block; it stays symmetric.
    for (int j = i + 1; j < n; ++j) {
      if (w(j, i) == 0) continue;
      Rat f = w(j, i) / d;
      for (int k = i + 1; k < n; ++k) w(j, k) -= f * w(i, k);
    }
    for (int k = i + 1; k < n; ++k) w(i, k) = 0;
    for (int j = i + 1; j < n; ++j) w(j, i) = 0;
  }
  return t;
}

}  // namespace meyersig::linalg
