#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "secondkind/basis.hpp"
#include "secondkind/curvature.hpp"
#include "secondkind/rng.hpp"
#include "secondkind/scalar.hpp"
#include "secondkind/sym_matrix.hpp"
#include "secondkind/tensor4.hpp"

namespace secondkind {

/// Raw 4-index array with entries uniform in [-1, 1].
inline Tensor4<double> random_tensor4(int n, Rng& rng) {
  Tensor4<double> t(n);
  for (auto& v : t.data()) v = rng.uniform(-1.0, 1.0);
  return t;
}

/// Seeded random Weyl tensor: raw array pushed through the projector, so the
/// output is exactly in the Weyl space rather than rejection sampled.
inline Tensor4<double> random_weyl(int n, Rng& rng) {
  return project_to_weyl(random_tensor4(n, rng));
}

/// Exact backend variant with small rational raw entries (k/8, |k| <= 8).
inline Tensor4<Rational> random_weyl_exact(int n, Rng& rng) {
  Tensor4<Rational> t(n);
  for (auto& v : t.data()) v = frac<Rational>(rng.uniform_int(-8, 8), 8);
  return project_to_weyl(t);
}

template <class T>
EinsteinData<T> random_einstein_data(int n, const T& s, Rng& rng) {
  EinsteinData<T> data;
  data.n = n;
  data.s = s;
  if constexpr (is_exact_v<T>)
    data.weyl = random_weyl_exact(n, rng);
  else
    data.weyl = random_weyl(n, rng);
  return data;
}

/// Random orthonormal basis of R^N from QR (modified Gram-Schmidt) of a
/// Gaussian matrix; rows are the coefficient vectors.
inline std::vector<std::vector<double>> random_orthogonal(int N, Rng& rng) {
  std::vector<std::vector<double>> q(N, std::vector<double>(N));
  for (auto& row : q)
    for (auto& v : row) v = rng.normal();
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < i; ++j) {
      double dot = 0.0;
      for (int k = 0; k < N; ++k) dot += q[i][k] * q[j][k];
      for (int k = 0; k < N; ++k) q[i][k] -= dot * q[j][k];
    }
    double norm = 0.0;
    for (int k = 0; k < N; ++k) norm += q[i][k] * q[i][k];
    norm = std::sqrt(norm);
    for (int k = 0; k < N; ++k) q[i][k] /= norm;
  }
  return q;
}

/// Randomly rotated orthonormal basis of S_0^2 built on top of the
/// deterministic one.
inline std::vector<SymMatrix<double>> random_rotated_basis(const TracelessBasis<double>& basis,
                                                           Rng& rng) {
  auto q = random_orthogonal(basis.N, rng);
  std::vector<SymMatrix<double>> out;
  out.reserve(basis.N);
  for (int a = 0; a < basis.N; ++a) {
    SymMatrix<double> s(basis.n);
    for (int b = 0; b < basis.N; ++b) {
      for (int i = 0; i < basis.n; ++i)
        for (int j = i; j < basis.n; ++j)
          if (basis.raw[b](i, j) != 0.0) s.add(i, j, q[a][b] * basis.raw[b](i, j));
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace secondkind
