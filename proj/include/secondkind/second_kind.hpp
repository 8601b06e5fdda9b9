#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "secondkind/basis.hpp"
#include "secondkind/curvature.hpp"
#include "secondkind/scalar.hpp"
#include "secondkind/sym_matrix.hpp"
#include "secondkind/tensor4.hpp"

namespace secondkind {

/// The bilinear form R(A,B) = sum_ijkl R_ijkl A_jk B_il.
/// Iterates the nonzeros of A and B, so sparse basis elements are cheap.
template <class T>
T second_kind_form(const Tensor4<T>& R, const std::vector<std::pair<int, int>>& nzA,
                   const SymMatrix<T>& A, const std::vector<std::pair<int, int>>& nzB,
                   const SymMatrix<T>& B) {
  T acc(0);
  for (const auto& [j, k] : nzA)
    for (const auto& [i, l] : nzB) acc += R(i, j, k, l) * A(j, k) * B(i, l);
  return acc;
}

template <class T>
T second_kind_form(const Tensor4<T>& R, const SymMatrix<T>& A, const SymMatrix<T>& B) {
  const int n = R.dim();
  if (A.dim() != n || B.dim() != n) throw std::invalid_argument("second_kind_form: dimension mismatch");
  T acc(0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (A(j, k) == T(0)) continue;
        for (int l = 0; l < n; ++l) acc += R(i, j, k, l) * A(j, k) * B(i, l);
      }
  return acc;
}

/// N x N matrix of the second-kind operator in the orthonormal basis.
/// Float backend (the basis normalization is irrational; exact callers use
/// second_kind_trace or second_kind_form on raw elements).
inline SymMatrix<double> second_kind_matrix(const Tensor4<double>& R,
                                            const TracelessBasis<double>& basis) {
  if (basis.n != R.dim()) throw std::invalid_argument("second_kind_matrix: dimension mismatch");
  SymMatrix<double> m(basis.N);
  for (int a = 0; a < basis.N; ++a)
    for (int b = a; b < basis.N; ++b)
      m.set(a, b,
            second_kind_form(R, basis.nonzeros[a], basis.raw[a], basis.nonzeros[b], basis.raw[b]));
  return m;
}

/// Same matrix over an arbitrary (dense, orthonormal) basis of S_0^2.
inline SymMatrix<double> second_kind_matrix(const Tensor4<double>& R,
                                            const std::vector<SymMatrix<double>>& onb) {
  const int N = static_cast<int>(onb.size());
  SymMatrix<double> m(N);
  for (int a = 0; a < N; ++a)
    for (int b = a; b < N; ++b) m.set(a, b, second_kind_form(R, onb[a], onb[b]));
  return m;
}

/// trace of the second-kind operator; exact in the rational backend
/// (the normalizers appear squared, so no radicals survive).
template <class T>
T second_kind_trace(const Tensor4<T>& R, const TracelessBasis<T>& basis) {
  if (basis.n != R.dim()) throw std::invalid_argument("second_kind_trace: dimension mismatch");
  T acc(0);
  for (int a = 0; a < basis.N; ++a)
    acc += second_kind_form(R, basis.nonzeros[a], basis.raw[a], basis.nonzeros[a], basis.raw[a]) /
           basis.norm2[a];
  return acc;
}

/// Matrix of the first-kind operator on the lexicographic wedge basis
/// {e_i ^ e_j}_{i<j}: entry((k,l),(i,j)) = R_ijkl. The wedge basis is used
/// as-is (no tensor normalization), so the unit sphere maps to the identity.
template <class T>
SymMatrix<T> first_kind_matrix(const Tensor4<T>& R) {
  const int n = R.dim();
  const int m = wedge_dim(n);
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(m);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  SymMatrix<T> out(m);
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      auto [i, j] = pairs[a];
      auto [k, l] = pairs[b];
      out.set(a, b, R(i, j, k, l));
    }
  return out;
}

/// sum_i |S^i T|^2 over the basis, with |.| the full-contraction norm.
/// Basis-independent; equals (2(n^2+n-8)/n)|W|^2 on Weyl tensors.
template <class T>
T s02_action_norm_sum(const Tensor4<T>& t, const TracelessBasis<T>& basis) {
  if (basis.n != t.dim()) throw std::invalid_argument("s02_action_norm_sum: dimension mismatch");
  T acc(0);
  for (int a = 0; a < basis.N; ++a) acc += act(basis.raw[a], t).norm2() / basis.norm2[a];
  return acc;
}

/// Same sum over an arbitrary orthonormal basis (float; used to confirm
/// basis independence).
inline double s02_action_norm_sum(const Tensor4<double>& t,
                                  const std::vector<SymMatrix<double>>& onb) {
  double acc = 0.0;
  for (const auto& s : onb) acc += act(s, t).norm2();
  return acc;
}

/// Largest |S T|^2 found over random unit traceless S, each polished by
/// ascent on the unit sphere of S_0^2. Never exceeds the true maximum:
/// every iterate is a genuine unit element. A sanity probe against the
/// (8n-16)/n |W|^2 bound, not an exact maximizer.
double max_unit_action_norm(const Tensor4<double>& t, const TracelessBasis<double>& basis,
                            int trials, std::uint64_t seed);

/// Gram matrix B_ab = <S^a T, S^b T> of the action in the given basis;
/// |S T|^2 = c' B c for S = sum c_a S^a. PSD by construction.
SymMatrix<double> action_gram(const Tensor4<double>& t, const TracelessBasis<double>& basis);

}  // namespace secondkind
