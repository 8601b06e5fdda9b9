#pragma once

#include <stdexcept>
#include <vector>

#include "secondkind/scalar.hpp"

namespace secondkind {

/// Dense symmetric n x n matrix. Writes go through set()/add() which keep
/// both triangles in step, so entries(i,j) == entries(j,i) by construction.
template <class T>
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, T(0)) {
    if (n < 0) throw std::invalid_argument("SymMatrix: negative dimension");
  }

  int dim() const { return n_; }

  const T& operator()(int i, int j) const { return a_[idx(i, j)]; }

  void set(int i, int j, const T& v) {
    a_[idx(i, j)] = v;
    a_[idx(j, i)] = v;
  }

  void add(int i, int j, const T& v) {
    a_[idx(i, j)] += v;
    if (i != j) a_[idx(j, i)] += v;
  }

  T trace() const {
    T t(0);
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  /// Frobenius inner product sum_ij A_ij B_ij.
  T inner(const SymMatrix& other) const {
    if (other.n_ != n_) throw std::invalid_argument("SymMatrix::inner: dimension mismatch");
    T t(0);
    for (size_t p = 0; p < a_.size(); ++p) t += a_[p] * other.a_[p];
    return t;
  }

  T norm2() const { return inner(*this); }

  SymMatrix& operator*=(const T& c) {
    for (auto& v : a_) v *= c;
    return *this;
  }

  SymMatrix& operator+=(const SymMatrix& other) {
    if (other.n_ != n_) throw std::invalid_argument("SymMatrix::+=: dimension mismatch");
    for (size_t p = 0; p < a_.size(); ++p) a_[p] += other.a_[p];
    return *this;
  }

 private:
  size_t idx(int i, int j) const { return static_cast<size_t>(i) * n_ + j; }
  int n_ = 0;
  std::vector<T> a_;
};

}  // namespace secondkind
