#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "secondkind/scalar.hpp"

namespace secondkind {

/// F(lambda) = sum lambda_i^3 - sum lambda_i^2, the objective of the
/// constrained minimization on {lambda >= 0, sum lambda = C}.
template <class T>
T simplex_cubic_value(const std::vector<T>& point) {
  T acc(0);
  for (const auto& x : point) acc += x * x * x - x * x;
  return acc;
}

template <class T>
struct CriticalPoint {
  enum class Kind { Interior, Boundary };
  Kind kind = Kind::Interior;
  int k = 0;  // interior: count of the smaller value a; boundary: count of zeros
  std::vector<T> point;
  T value{};
  T mu{};               // Lagrange multiplier (interior family only)
  bool feasible = true;  // interior points need a >= 0
};

/// Closed form for the interior critical value:
/// (C/9 - N/27) ((3C-N)/(N-2k))^2 - C/3 + N/27.
template <class T>
T interior_value_closed_form(int N, const T& C, int k) {
  T t = (T(3) * C - T(N)) / T(N - 2 * k);
  return (C / T(9) - T(N) / T(27)) * t * t - C / T(3) + T(N) / T(27);
}

/// Critical points Q_k = (a,...,a,b,...,b) of F restricted to the open
/// simplex, k copies of a, for 0 <= k < N/2. Requires C > N/3 (the critical
/// equations have no real solution family otherwise). Exact in the rational
/// backend: sqrt(1-3mu) = (3C-N)/(N-2k) is rational.
template <class T>
std::vector<CriticalPoint<T>> interior_critical_points(int N, const T& C) {
  if (N < 2) throw std::invalid_argument("interior_critical_points: N must be >= 2");
  if (!(T(3) * C > T(N)))
    throw std::domain_error(
        "interior_critical_points: C <= N/3 is outside the regime of the critical-point family");
  std::vector<CriticalPoint<T>> out;
  for (int k = 0; 2 * k < N; ++k) {
    T root = (T(3) * C - T(N)) / T(N - 2 * k);  // sqrt(1 - 3 mu)
    CriticalPoint<T> cp;
    cp.kind = CriticalPoint<T>::Kind::Interior;
    cp.k = k;
    cp.mu = (T(1) - root * root) / T(3);
    T a = (T(1) - root) / T(3);
    T b = (T(1) + root) / T(3);
    cp.point.assign(static_cast<size_t>(k), a);
    cp.point.insert(cp.point.end(), static_cast<size_t>(N - k), b);
    cp.value = simplex_cubic_value(cp.point);
    cp.feasible = !(a < T(0));
    T closed = interior_value_closed_form(N, C, k);
    if constexpr (is_exact_v<T>) {
      if (!(cp.value == closed))
        throw std::logic_error("interior_critical_points: closed form disagrees with evaluation");
    }
    out.push_back(std::move(cp));
  }
  return out;
}

/// Minimum of F over the boundary family (k zeros, N-k equal entries):
/// minimizes C^3/(N-k)^2 - C^2/(N-k) over 1 <= k < N, ties to smaller k.
template <class T>
CriticalPoint<T> boundary_minimum(int N, const T& C) {
  if (N < 2) throw std::invalid_argument("boundary_minimum: N must be >= 2");
  if (!(C > T(0))) throw std::invalid_argument("boundary_minimum: C must be positive");
  int best_k = 1;
  T best = C * C * C / (T(N - 1) * T(N - 1)) - C * C / T(N - 1);
  for (int k = 2; k < N; ++k) {
    T v = C * C * C / (T(N - k) * T(N - k)) - C * C / T(N - k);
    if (v < best) {
      best = v;
      best_k = k;
    }
  }
  CriticalPoint<T> cp;
  cp.kind = CriticalPoint<T>::Kind::Boundary;
  cp.k = best_k;
  cp.point.assign(static_cast<size_t>(best_k), T(0));
  cp.point.insert(cp.point.end(), static_cast<size_t>(N - best_k), C / T(N - best_k));
  cp.value = best;
  return cp;
}

/// Euclidean projection onto {x >= 0, sum x = C}.
std::vector<double> project_to_simplex(std::vector<double> x, double C);

struct SimplexMinResult {
  double value = 0.0;
  /// Distinct minimizers found at the best value (coordinates sorted
  /// ascending), clustered at L-infinity distance `cluster_tol`.
  std::vector<std::vector<double>> argmins;
  int restarts = 0;
};

/// Multistart projected gradient descent with backtracking on the simplex
/// {x >= 0, sum x = C}. Start 0 is the barycenter; the rest are Dirichlet
/// samples. Clusters every converged point within `value_tol` of the best.
SimplexMinResult minimize_on_simplex(const std::function<double(const std::vector<double>&)>& f,
                                     const std::function<void(const std::vector<double>&, std::vector<double>&)>& grad,
                                     int N, double C, int restarts, std::uint64_t seed,
                                     double value_tol = 1e-6, double cluster_tol = 1e-5);

/// Single projected-gradient descent from x0 (projected onto the simplex).
std::vector<double> descend_on_simplex(const std::function<double(const std::vector<double>&)>& f,
                                       const std::function<void(const std::vector<double>&, std::vector<double>&)>& grad,
                                       std::vector<double> x0, double C);

/// Independent numeric oracle for the minimization lemma.
SimplexMinResult brute_force_min(int N, double C, int restarts, std::uint64_t seed,
                                 double value_tol = 1e-6);

struct LemmaReport {
  int N = 0;
  Rational C;           // N(N-1)/(2N-1)
  Rational tie_value;   // C^3/N^2 - C^2/N, shared by both minimizers
  std::vector<Rational> interior_point;
  std::vector<Rational> boundary_point;
  bool tie_exact = false;
  bool oracle_value_ok = false;   // oracle min within [-1e-8, +1e-6] of tie
  bool both_argmins_found = false;
  double oracle_value = 0.0;
  int oracle_clusters = 0;
  std::string detail;  // witness on failure; oracle-confirmed note on success
};

/// Runs the full lemma check at C = N(N-1)/(2N-1): exact tie between the
/// all-equal and one-zero minimizers, oracle agreement, both argmin shapes.
LemmaReport lemma_verify(int N, int restarts = 64, std::uint64_t seed = 20240901);

}  // namespace secondkind
