#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

#include "secondkind/scalar.hpp"
#include "secondkind/sym_matrix.hpp"
#include "secondkind/tensor4.hpp"

namespace secondkind {

/// Raised when a 4-index array fails a curvature identity; the message names
/// the violated identity and the first offending index.
class invalid_curvature : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {
template <class T>
double default_tensor_tol(const Tensor4<T>& t) {
  if constexpr (is_exact_v<T>) {
    (void)t;
    return 0.0;
  } else {
    return 1e-12 * (1.0 + t.max_abs());
  }
}

template <class T>
bool nonzero(const T& v, double tol) {
  if constexpr (is_exact_v<T>)
    return !(v == T(0));
  else
    return std::abs(v) > tol;
}

template <class T>
[[noreturn]] void violation(const char* identity, int i, int j, int k, int l, const T& v) {
  std::ostringstream os;
  os << "curvature invariant violated: " << identity << " at index (" << i << "," << j << "," << k
     << "," << l << "), residual " << format_scalar(v);
  throw invalid_curvature(os.str());
}
}  // namespace detail

/// Ricci contraction Ric_jl = sum_i R_ijil.
template <class T>
SymMatrix<T> ricci(const Tensor4<T>& R) {
  const int n = R.dim();
  SymMatrix<T> ric(n);
  for (int j = 0; j < n; ++j)
    for (int l = j; l < n; ++l) {
      T acc(0);
      for (int i = 0; i < n; ++i) acc += R(i, j, i, l);
      ric.set(j, l, acc);
    }
  return ric;
}

template <class T>
T scalar_curvature(const Tensor4<T>& R) {
  return ricci(R).trace();
}

/// Checks antisymmetry in both pairs, pair-exchange symmetry, and the first
/// Bianchi identity. Throws invalid_curvature naming the first violation.
/// Exact backend: identities must hold exactly; float: within tol
/// (default 1e-12 * (1 + max|entry|)).
template <class T>
void validate_curvature_symmetries(const Tensor4<T>& R, double tol = -1.0) {
  if (tol < 0) tol = detail::default_tensor_tol(R);
  const int n = R.dim();
  // structural symmetries first, so a malformed array is reported as such
  // rather than as a downstream Bianchi artifact
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          T anti1 = R(i, j, k, l) + R(j, i, k, l);
          if (detail::nonzero(anti1, tol)) detail::violation("antisymmetry in (i,j)", i, j, k, l, anti1);
          T anti2 = R(i, j, k, l) + R(i, j, l, k);
          if (detail::nonzero(anti2, tol)) detail::violation("antisymmetry in (k,l)", i, j, k, l, anti2);
          T pair = R(i, j, k, l) - R(k, l, i, j);
          if (detail::nonzero(pair, tol)) detail::violation("pair-exchange symmetry", i, j, k, l, pair);
        }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          T bianchi = R(i, j, k, l) + R(i, k, l, j) + R(i, l, j, k);
          if (detail::nonzero(bianchi, tol)) detail::violation("first Bianchi identity", i, j, k, l, bianchi);
        }
}

/// A Weyl tensor additionally has all single traces zero.
template <class T>
void validate_weyl(const Tensor4<T>& W, double tol = -1.0) {
  if (tol < 0) tol = detail::default_tensor_tol(W);
  validate_curvature_symmetries(W, tol);
  const int n = W.dim();
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l) {
      T acc(0);
      for (int i = 0; i < n; ++i) acc += W(i, j, i, l);
      if (detail::nonzero(acc, tol)) detail::violation("trace-free (sum_i W_ijil = 0)", 0, j, 0, l, acc);
    }
}

/// T_ijkl = d_ik d_jl - d_il d_jk. The curvature tensor of the unit sphere:
/// sectional curvatures +1, Ricci = (n-1) id, scalar curvature n(n-1).
template <class T>
Tensor4<T> kulkarni_nomizu_gg(int n) {
  if (n < 2) throw std::invalid_argument("kulkarni_nomizu_gg: dimension must be >= 2");
  Tensor4<T> t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      t(i, j, i, j) += T(1);
      t(i, j, j, i) -= T(1);
    }
  return t;
}

/// Kulkarni-Nomizu product of a symmetric tensor with the metric:
/// (h ^ g)_ijkl = h_ik d_jl + h_jl d_ik - h_il d_jk - h_jk d_il.
template <class T>
Tensor4<T> kulkarni_nomizu_hg(const SymMatrix<T>& h) {
  const int n = h.dim();
  Tensor4<T> t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          T v(0);
          if (j == l) v += h(i, k);
          if (i == k) v += h(j, l);
          if (j == k) v -= h(i, l);
          if (i == l) v -= h(j, k);
          t(i, j, k, l) = v;
        }
  return t;
}

/// Scalar curvature s plus a Weyl part; assembles
/// R = W + s/(n(n-1)) * (d_ik d_jl - d_il d_jk).
template <class T>
struct EinsteinData {
  int n = 0;
  T s{};
  Tensor4<T> weyl;
};

template <class T>
Tensor4<T> assemble_einstein(const EinsteinData<T>& data) {
  if (data.weyl.dim() != data.n) throw std::invalid_argument("assemble_einstein: dimension mismatch");
  if (data.n < 2) throw std::invalid_argument("assemble_einstein: dimension must be >= 2");
  validate_weyl(data.weyl);
  Tensor4<T> r = kulkarni_nomizu_gg<T>(data.n);
  r *= data.s / (T(data.n) * T(data.n - 1));
  r += data.weyl;
  return r;
}

/// Orthogonal projection of an arbitrary 4-index array onto the Weyl tensors:
/// antisymmetrize both pairs, symmetrize pair exchange, remove the Lambda^4
/// part with the Bianchi projector b(T) = (T_ijkl + T_iklj + T_iljk)/3, then
/// subtract the Ricci and scalar Kulkarni-Nomizu parts so all traces vanish.
template <class T>
Tensor4<T> project_to_weyl(const Tensor4<T>& raw) {
  const int n = raw.dim();
  Tensor4<T> b(n);
  const T quarter = frac<T>(1, 4);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          b(i, j, k, l) =
              quarter * (raw(i, j, k, l) - raw(j, i, k, l) - raw(i, j, l, k) + raw(j, i, l, k));

  Tensor4<T> c(n);
  const T half = frac<T>(1, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) c(i, j, k, l) = half * (b(i, j, k, l) + b(k, l, i, j));

  Tensor4<T> curv(n);
  const T third = frac<T>(1, 3);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          curv(i, j, k, l) =
              c(i, j, k, l) - third * (c(i, j, k, l) + c(i, k, l, j) + c(i, l, j, k));

  if (n == 2) return Tensor4<T>(n);  // no Weyl part in dimension 2

  SymMatrix<T> ric = ricci(curv);
  T s = ric.trace();
  SymMatrix<T> ric0 = ric;
  const T mean = s / T(n);
  for (int i = 0; i < n; ++i) ric0.add(i, i, -mean);

  Tensor4<T> ric_part = kulkarni_nomizu_hg(ric0);
  ric_part *= T(1) / T(n - 2);
  Tensor4<T> scal_part = kulkarni_nomizu_gg<T>(n);
  scal_part *= s / (T(n) * T(n - 1));

  curv -= ric_part;
  curv -= scal_part;
  return curv;
}

}  // namespace secondkind
