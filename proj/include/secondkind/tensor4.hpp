#pragma once

#include <stdexcept>
#include <vector>

#include "secondkind/scalar.hpp"
#include "secondkind/sym_matrix.hpp"

namespace secondkind {

/// Dense 4-index array over an n-dimensional space. Plain storage; curvature
/// symmetries are validated where required, not enforced per write.
template <class T>
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(int n)
      : n_(n), c_(static_cast<size_t>(n) * n * n * n, T(0)) {
    if (n < 1) throw std::invalid_argument("Tensor4: dimension must be positive");
  }

  int dim() const { return n_; }
  size_t size() const { return c_.size(); }

  T& operator()(int i, int j, int k, int l) { return c_[idx(i, j, k, l)]; }
  const T& operator()(int i, int j, int k, int l) const { return c_[idx(i, j, k, l)]; }

  const std::vector<T>& data() const { return c_; }
  std::vector<T>& data() { return c_; }

  Tensor4& operator+=(const Tensor4& o) {
    check_same(o);
    for (size_t p = 0; p < c_.size(); ++p) c_[p] += o.c_[p];
    return *this;
  }

  Tensor4& operator-=(const Tensor4& o) {
    check_same(o);
    for (size_t p = 0; p < c_.size(); ++p) c_[p] -= o.c_[p];
    return *this;
  }

  Tensor4& operator*=(const T& s) {
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend Tensor4 operator+(Tensor4 a, const Tensor4& b) { return a += b; }
  friend Tensor4 operator-(Tensor4 a, const Tensor4& b) { return a -= b; }
  friend Tensor4 operator*(const T& s, Tensor4 a) { return a *= s; }

  /// Full-contraction squared norm sum_ijkl T_ijkl^2.
  T norm2() const {
    T t(0);
    for (const auto& v : c_) t += v * v;
    return t;
  }

  T inner(const Tensor4& o) const {
    check_same(o);
    T t(0);
    for (size_t p = 0; p < c_.size(); ++p) t += c_[p] * o.c_[p];
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : c_) {
      double a = std::abs(to_double(v));
      if (a > m) m = a;
    }
    return m;
  }

 private:
  size_t idx(int i, int j, int k, int l) const {
    return ((static_cast<size_t>(i) * n_ + j) * n_ + k) * n_ + l;
  }
  void check_same(const Tensor4& o) const {
    if (o.n_ != n_) throw std::invalid_argument("Tensor4: dimension mismatch");
  }

  int n_ = 0;
  std::vector<T> c_;
};

/// Action of a symmetric 2-tensor on a dense rank-`rank` array:
/// (S T)(X1,...,Xr) = sum_s T(X1,...,S X_s,...,Xr).
/// Row sparsity of S is exploited, so basis elements act in O(r * n^r).
template <class T>
std::vector<T> act_on_rank(const SymMatrix<T>& S, const std::vector<T>& t, int rank, int n) {
  if (S.dim() != n) throw std::invalid_argument("act_on_rank: dimension mismatch");
  size_t total = 1;
  for (int r = 0; r < rank; ++r) total *= static_cast<size_t>(n);
  if (t.size() != total) throw std::invalid_argument("act_on_rank: size does not match rank");

  // compressed rows of S
  std::vector<std::vector<std::pair<int, T>>> rows(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(S(i, j) == T(0))) rows[i].push_back({j, S(i, j)});

  std::vector<size_t> stride(rank);
  stride[rank - 1] = 1;
  for (int r = rank - 2; r >= 0; --r) stride[r] = stride[r + 1] * n;

  std::vector<T> out(total, T(0));
  std::vector<int> ix(rank, 0);
  for (size_t p = 0; p < total; ++p) {
    T acc(0);
    for (int s = 0; s < rank; ++s) {
      const int a = ix[s];
      const size_t base = p - static_cast<size_t>(a) * stride[s];
      for (const auto& [m, smv] : rows[a]) acc += smv * t[base + static_cast<size_t>(m) * stride[s]];
    }
    out[p] = acc;
    for (int r = rank - 1; r >= 0; --r) {
      if (++ix[r] < n) break;
      ix[r] = 0;
    }
  }
  return out;
}

/// (S T) for 4-index arrays, one slot contraction per index, summed.
template <class T>
Tensor4<T> act(const SymMatrix<T>& S, const Tensor4<T>& t) {
  Tensor4<T> out(t.dim());
  out.data() = act_on_rank(S, t.data(), 4, t.dim());
  return out;
}

}  // namespace secondkind
