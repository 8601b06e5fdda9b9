#include "secondkind/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "secondkind/rng.hpp"

namespace secondkind {

std::vector<double> project_to_simplex(std::vector<double> x, double C) {
  // Held-style threshold projection
  std::vector<double> u = x;
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cum = 0.0, tau = 0.0;
  int rho = 0;
  for (size_t j = 0; j < u.size(); ++j) {
    cum += u[j];
    double t = (cum - C) / static_cast<double>(j + 1);
    if (u[j] - t > 0) {
      rho = static_cast<int>(j + 1);
      tau = t;
    }
  }
  for (auto& v : x) v = std::max(v - tau, 0.0);
  return x;
}

namespace {

std::vector<double> dirichlet_point(int N, double C, Rng& rng) {
  std::vector<double> x(N);
  double sum = 0.0;
  for (auto& v : x) {
    v = rng.exp1();
    sum += v;
  }
  for (auto& v : x) v *= C / sum;
  return x;
}

/// Projected gradient descent with Armijo backtracking; returns the final point.
std::vector<double> descend(const std::function<double(const std::vector<double>&)>& f,
                            const std::function<void(const std::vector<double>&, std::vector<double>&)>& grad,
                            std::vector<double> x, double C) {
  const int N = static_cast<int>(x.size());
  std::vector<double> g(N), trial(N);
  double fx = f(x);
  double step = 0.25 * C / N + 1e-3;
  for (int iter = 0; iter < 5000; ++iter) {
    grad(x, g);
    bool moved = false;
    for (int bt = 0; bt < 60; ++bt) {
      for (int i = 0; i < N; ++i) trial[i] = x[i] - step * g[i];
      trial = project_to_simplex(trial, C);
      double decrease = 0.0;
      for (int i = 0; i < N; ++i) decrease += g[i] * (x[i] - trial[i]);
      double ft = f(trial);
      if (ft <= fx - 1e-4 * decrease) {
        double delta = 0.0;
        for (int i = 0; i < N; ++i) delta = std::max(delta, std::abs(trial[i] - x[i]));
        x.swap(trial);
        double improvement = fx - ft;
        fx = ft;
        moved = true;
        step *= 1.6;
        if (delta < 1e-13 * (1.0 + C) && improvement < 1e-15 * (1.0 + std::abs(fx))) return x;
        break;
      }
      step *= 0.5;
      if (step < 1e-18) return x;
    }
    if (!moved) return x;
  }
  return x;
}

}  // namespace

std::vector<double> descend_on_simplex(const std::function<double(const std::vector<double>&)>& f,
                                       const std::function<void(const std::vector<double>&, std::vector<double>&)>& grad,
                                       std::vector<double> x0, double C) {
  return descend(f, grad, project_to_simplex(std::move(x0), C), C);
}

SimplexMinResult minimize_on_simplex(const std::function<double(const std::vector<double>&)>& f,
                                     const std::function<void(const std::vector<double>&, std::vector<double>&)>& grad,
                                     int N, double C, int restarts, std::uint64_t seed,
                                     double value_tol, double cluster_tol) {
  SimplexMinResult result;
  result.restarts = restarts;
  std::vector<std::pair<double, std::vector<double>>> found;
  for (int r = 0; r < restarts; ++r) {
    Rng rng = Rng::derive(seed, static_cast<std::uint64_t>(r));
    std::vector<double> x0;
    if (r == 0)
      x0.assign(static_cast<size_t>(N), C / N);
    else
      x0 = dirichlet_point(N, C, rng);
    auto x = descend(f, grad, std::move(x0), C);
    double fx = f(x);
    std::sort(x.begin(), x.end());
    found.push_back({fx, std::move(x)});
  }
  double best = found.front().first;
  for (const auto& [v, p] : found) best = std::min(best, v);
  result.value = best;
  for (auto& [v, p] : found) {
    if (v > best + value_tol) continue;
    bool merged = false;
    for (const auto& rep : result.argmins) {
      double dist = 0.0;
      for (int i = 0; i < N; ++i) dist = std::max(dist, std::abs(rep[i] - p[i]));
      if (dist <= cluster_tol) {
        merged = true;
        break;
      }
    }
    if (!merged) result.argmins.push_back(p);
  }
  return result;
}

SimplexMinResult brute_force_min(int N, double C, int restarts, std::uint64_t seed,
                                 double value_tol) {
  if (restarts < 1) throw std::invalid_argument("brute_force_min: restarts must be >= 1");
  auto f = [](const std::vector<double>& x) {
    double acc = 0.0;
    for (double v : x) acc += v * v * (v - 1.0);
    return acc;
  };
  auto grad = [](const std::vector<double>& x, std::vector<double>& g) {
    for (size_t i = 0; i < x.size(); ++i) g[i] = x[i] * (3.0 * x[i] - 2.0);
  };
  return minimize_on_simplex(f, grad, N, C, restarts, seed, value_tol);
}

LemmaReport lemma_verify(int N, int restarts, std::uint64_t seed) {
  if (N < 3) throw std::invalid_argument("lemma_verify: N must be >= 3");
  LemmaReport rep;
  rep.N = N;
  rep.C = Rational(BigInt(N) * (N - 1), BigInt(2 * N - 1));
  const Rational C = rep.C;

  rep.interior_point.assign(static_cast<size_t>(N), C / N);
  rep.boundary_point.assign(1, Rational(0));
  rep.boundary_point.insert(rep.boundary_point.end(), static_cast<size_t>(N - 1), C / (N - 1));

  Rational interior_value = simplex_cubic_value(rep.interior_point);
  Rational boundary_value = simplex_cubic_value(rep.boundary_point);
  rep.tie_value = C * C * C / (N * N) - C * C / N;
  rep.tie_exact = (interior_value == rep.tie_value) && (boundary_value == rep.tie_value);

  auto interior = interior_critical_points(N, C);
  auto boundary = boundary_minimum(N, C);
  std::ostringstream detail;
  if (interior.front().value != rep.tie_value) {
    rep.tie_exact = false;
    detail << "Q_0 value mismatch; ";
  }
  if (boundary.k != 1 || boundary.value != rep.tie_value) {
    rep.tie_exact = false;
    detail << "boundary minimum not at k=1; ";
  }

  auto oracle = brute_force_min(N, to_double(C), restarts, seed);
  rep.oracle_value = oracle.value;
  rep.oracle_clusters = static_cast<int>(oracle.argmins.size());
  double tie = to_double(rep.tie_value);
  rep.oracle_value_ok = oracle.value >= tie - 1e-8 && oracle.value <= tie + 1e-6;
  if (!rep.oracle_value_ok) detail << "oracle value " << oracle.value << " vs analytic " << tie << "; ";

  auto matches = [&](const std::vector<Rational>& expect) {
    for (const auto& cluster : oracle.argmins) {
      double dist = 0.0;
      for (int i = 0; i < N; ++i)
        dist = std::max(dist, std::abs(cluster[i] - to_double(expect[i])));
      if (dist <= 1e-5) return true;
    }
    return false;
  };
  std::vector<Rational> interior_sorted = rep.interior_point;
  std::vector<Rational> boundary_sorted = rep.boundary_point;  // already ascending
  rep.both_argmins_found = matches(interior_sorted) && matches(boundary_sorted);
  if (!rep.both_argmins_found) {
    detail << "argmin clusters (" << oracle.argmins.size() << ") missing a predicted shape; ";
    for (const auto& cl : oracle.argmins) {
      detail << "[";
      for (double v : cl) detail << " " << v;
      detail << " ] ";
    }
  }
  rep.detail = detail.str().empty() ? "oracle-confirmed (not a proof of global optimality)"
                                    : detail.str();
  return rep;
}

}  // namespace secondkind
