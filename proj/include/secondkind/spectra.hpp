#pragma once

#include <sstream>
#include <stdexcept>
#include <vector>

#include "secondkind/scalar.hpp"
#include "secondkind/sym_matrix.hpp"

namespace secondkind {

/// Sorted eigenvalues with their mean.
struct Spectrum {
  std::vector<double> values;  // nondecreasing
  double mean = 0.0;

  int size() const { return static_cast<int>(values.size()); }
};

/// Eigendecomposition of a symmetric matrix. Column `idx` of `vectors` is the
/// eigenvector of values[idx]; signs are not canonical.
struct EigenSym {
  Spectrum spectrum;
  int n = 0;
  std::vector<double> vectors;  // row-major n x n, columns are eigenvectors

  double vector(int idx, int comp) const { return vectors[static_cast<size_t>(comp) * n + idx]; }
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm is
/// <= 1e-13 * |A|. Throws on asymmetric input (> 1e-12 * |A|).
EigenSym eigen_sym(const SymMatrix<double>& a);

/// Cone condition C(k, theta): mean of the k smallest eigenvalues >= -theta * mean.
template <class T>
struct ConeResult {
  bool holds = false;
  T slack{};  // (lambda_1 + ... + lambda_k)/k + theta * mean
};

/// `values` must be sorted ascending with arithmetic mean `mean`.
template <class T>
ConeResult<T> cone_check(const std::vector<T>& values, const T& mean, int k, const T& theta) {
  const int N = static_cast<int>(values.size());
  if (k < 1 || k > N) throw std::invalid_argument("cone_check: k out of range");
  T partial(0);
  for (int i = 0; i < k; ++i) partial += values[i];
  T slack = partial / T(k) + theta * mean;
  return {!(slack < T(0)), slack};
}

inline ConeResult<double> cone_check(const Spectrum& spec, int k, double theta) {
  return cone_check<double>(spec.values, spec.mean, k, theta);
}

/// D = ((N-1) k theta + N (k-1)) / (N-k): every sorted sequence with mean
/// lbar > 0 under the cone condition C(k, theta) has lambda_1 >= -D * lbar.
template <class T>
T lambda1_bound(int N, int k, const T& theta) {
  if (k < 1 || k >= N) throw std::invalid_argument("lambda1_bound: need 1 <= k < N");
  return (T(N - 1) * T(k) * theta + T(N) * T(k - 1)) / T(N - k);
}

template <class T>
struct WeightedSumResult {
  T sum{};          // sum_i lambda_i w_i
  T bound{};        // -S theta lbar with S = sum w_i
  T chain_value{};  // (S - kM) lambda_{k+1} + M sum_{i<=k} lambda_i
  bool holds = false;
};

/// Weighted-sum estimate: under the cone condition C(k, theta) and weights
/// 0 <= w_i <= M with k <= floor(S/M), sum_i lambda_i w_i >= -S theta lbar.
/// Violated preconditions are reported individually.
template <class T>
WeightedSumResult<T> weighted_sum_bound(const std::vector<T>& values, const T& mean,
                                        const std::vector<T>& weights, const T& m_bound, int k,
                                        const T& theta) {
  const int N = static_cast<int>(values.size());
  std::ostringstream bad;
  if (weights.size() != values.size()) bad << "weights/values size mismatch; ";
  for (size_t i = 0; i + 1 < values.size(); ++i)
    if (values[i + 1] < values[i]) {
      bad << "values not sorted ascending; ";
      break;
    }
  for (const auto& w : weights)
    if (w < T(0) || m_bound < w) {
      bad << "weight outside [0, M]; ";
      break;
    }
  T s_total(0);
  for (const auto& w : weights) s_total += w;
  if (k < 1 || k >= N) bad << "k out of range [1, N); ";
  if (!(m_bound > T(0)))
    bad << "M must be positive; ";
  else if (T(k) * m_bound > s_total)
    bad << "k exceeds floor(S/M); ";
  if (theta > T(0) && mean < T(0)) bad << "mean negative with theta > 0 (infeasible); ";
  if (!bad.str().empty()) throw std::invalid_argument("weighted_sum_bound: " + bad.str());
  {
    auto cone = cone_check(values, mean, k, theta);
    if (!cone.holds)
      throw std::invalid_argument("weighted_sum_bound: cone condition fails, slack " +
                                  format_scalar(cone.slack));
  }

  WeightedSumResult<T> out;
  for (int i = 0; i < N; ++i) out.sum += values[i] * weights[i];
  out.bound = -s_total * theta * mean;
  T head(0);
  for (int i = 0; i < k; ++i) head += values[i];
  out.chain_value = (s_total - T(k) * m_bound) * values[k] + m_bound * head;
  out.holds = !(out.sum < out.bound);
  return out;
}

}  // namespace secondkind
