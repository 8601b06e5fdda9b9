#include "secondkind/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace secondkind {

namespace {

double frobenius(const SymMatrix<double>& a) {
  double acc = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) acc += a(i, j) * a(i, j);
  return std::sqrt(acc);
}

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) acc += a[size_t(i) * n + j] * a[size_t(i) * n + j];
  return std::sqrt(acc);
}

}  // namespace

EigenSym eigen_sym(const SymMatrix<double>& input) {
  const int n = input.dim();
  const double scale = frobenius(input);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(input(i, j) - input(j, i)) > 1e-12 * (scale > 0 ? scale : 1.0))
        throw std::invalid_argument("eigen_sym: input not symmetric");

  std::vector<double> a(size_t(n) * n), v(size_t(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    v[size_t(i) * n + i] = 1.0;
    for (int j = 0; j < n; ++j) a[size_t(i) * n + j] = input(i, j);
  }
  auto at = [&](std::vector<double>& m, int i, int j) -> double& { return m[size_t(i) * n + j]; };

  const double tol = 1e-13 * scale;
  const int max_sweeps = 100;
  int sweep = 0;
  while (scale > 0.0 && off_diagonal_norm(a, n) > tol) {
    if (++sweep > max_sweeps) throw std::runtime_error("eigen_sym: Jacobi did not converge");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(a, p, q);
        if (apq == 0.0) continue;
        const double tau = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (int i = 0; i < n; ++i) {
          const double aip = at(a, i, p), aiq = at(a, i, q);
          at(a, i, p) = c * aip - s * aiq;
          at(a, i, q) = s * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          const double api = at(a, p, i), aqi = at(a, q, i);
          at(a, p, i) = c * api - s * aqi;
          at(a, q, i) = s * api + c * aqi;
        }
        for (int i = 0; i < n; ++i) {
          const double vip = at(v, i, p), viq = at(v, i, q);
          at(v, i, p) = c * vip - s * viq;
          at(v, i, q) = s * vip + c * viq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return at(a, x, x) < at(a, y, y); });

  EigenSym out;
  out.n = n;
  out.spectrum.values.resize(n);
  out.vectors.resize(size_t(n) * n);
  double sum = 0.0;
  for (int idx = 0; idx < n; ++idx) {
    out.spectrum.values[idx] = at(a, order[idx], order[idx]);
    sum += out.spectrum.values[idx];
    for (int comp = 0; comp < n; ++comp)
      out.vectors[size_t(comp) * n + idx] = at(v, comp, order[idx]);
  }
  out.spectrum.mean = n > 0 ? sum / n : 0.0;
  return out;
}

}  // namespace secondkind
