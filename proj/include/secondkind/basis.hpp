#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "secondkind/scalar.hpp"
#include "secondkind/sym_matrix.hpp"

namespace secondkind {

inline int traceless_dim(int n) { return (n - 1) * (n + 2) / 2; }
inline int wedge_dim(int n) { return n * (n - 1) / 2; }

/// Orthogonal basis of the traceless symmetric 2-tensors on R^n.
///
/// Elements are stored unnormalized as `raw` together with `norm2 = |raw|^2`
/// (Frobenius); the orthonormal element is raw/sqrt(norm2). In the float
/// backend raw is already normalized (norm2 == 1). The exact backend keeps
/// integer entries: sqrt(2) and friends are not rational, so exact
/// computations divide by norm2 instead of normalizing, which keeps every
/// exact check (Gram, trace, action-norm sums) radical-free.
///
/// Order: off-diagonal pairs (e_i (x) e_j + e_j (x) e_i), (i,j) lexicographic
/// with i<j, then the n-1 diagonal traceless elements
/// diag(1,...,1,-m,0,...,0)/sqrt(m(m+1)) for m = 1..n-1.
template <class T>
struct TracelessBasis {
  int n = 0;
  int N = 0;
  std::vector<SymMatrix<T>> raw;
  std::vector<T> norm2;
  /// All nonzero positions (both (i,j) and (j,i) for off-diagonal entries).
  std::vector<std::vector<std::pair<int, int>>> nonzeros;
};

template <class T>
TracelessBasis<T> build_traceless_basis(int n) {
  if (n < 2) throw std::invalid_argument("build_traceless_basis: dimension must be >= 2");
  TracelessBasis<T> basis;
  basis.n = n;
  basis.N = traceless_dim(n);

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      SymMatrix<T> m(n);
      if constexpr (is_exact_v<T>) {
        m.set(i, j, T(1));
        basis.norm2.push_back(T(2));
      } else {
        m.set(i, j, 1.0 / std::sqrt(2.0));
        basis.norm2.push_back(1.0);
      }
      basis.raw.push_back(std::move(m));
      basis.nonzeros.push_back({{i, j}, {j, i}});
    }
  }
  for (int m = 1; m < n; ++m) {
    SymMatrix<T> d(n);
    std::vector<std::pair<int, int>> nz;
    T scale(1);
    if constexpr (!is_exact_v<T>) scale = 1.0 / std::sqrt(double(m) * (m + 1));
    for (int i = 0; i < m; ++i) {
      d.set(i, i, scale);
      nz.push_back({i, i});
    }
    d.set(m, m, T(-m) * scale);
    nz.push_back({m, m});
    basis.raw.push_back(std::move(d));
    basis.norm2.push_back(is_exact_v<T> ? T(m) * T(m + 1) : T(1));
    basis.nonzeros.push_back(std::move(nz));
  }
  return basis;
}

}  // namespace secondkind
