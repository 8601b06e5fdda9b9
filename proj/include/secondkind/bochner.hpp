#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "secondkind/basis.hpp"
#include "secondkind/scalar.hpp"
#include "secondkind/spectra.hpp"

namespace secondkind {

/// Homogeneous cubic a sum(l_i^3) + b lbar sum(l_i^2) + c lbar^3 in the
/// eigenvalues of the second-kind operator.
template <class T>
struct BochnerCubic {
  int n = 0;
  int N = 0;
  T a{}, b{}, c{};

  T eval(const std::vector<T>& lambdas, const T& lambda_bar) const {
    T s3(0), s2(0);
    for (const auto& l : lambdas) {
      s2 += l * l;
      s3 += l * l * l;
    }
    return a * s3 + b * lambda_bar * s2 + c * lambda_bar * lambda_bar * lambda_bar;
  }
};

/// Lower-bound cubic for 3<Lap R, R> on Einstein spaces under the cone
/// condition C(k, theta):
/// a = 16, b = (16/3n)(2N - 12n + 6 - (N-3)theta),
/// c = -(16N/3n)(2N - 9n + 6 - (N-3)theta).
/// Vanishes identically on the constant-curvature spectrum for every theta.
template <class T>
BochnerCubic<T> df_estimate_cubic(int n, const T& theta) {
  if (n < 4) throw std::invalid_argument("df_estimate_cubic: dimension must be >= 4");
  BochnerCubic<T> cubic;
  cubic.n = n;
  cubic.N = traceless_dim(n);
  const T N(cubic.N);
  cubic.a = T(16);
  cubic.b = frac<T>(16, 3) / T(n) * (T(2) * N - T(12 * n) + T(6) - (N - T(3)) * theta);
  cubic.c = -frac<T>(16, 3) * N / T(n) * (T(2) * N - T(9 * n) + T(6) - (N - T(3)) * theta);
  return cubic;
}

/// The purely spectral side of the Einstein Bochner identity,
/// 16 sum(l^3) + (16(2N-12n+6)/3n) lbar sum(l^2) - (16N(2N-9n+6)/3n) lbar^3,
/// with lbar the mean of the input.
template <class T>
T sum_lambda_w_identity_rhs(int n, const std::vector<T>& lambdas) {
  auto cubic = df_estimate_cubic(n, T(0));
  if (static_cast<int>(lambdas.size()) != cubic.N)
    throw std::invalid_argument("sum_lambda_w_identity_rhs: spectrum size must be (n-1)(n+2)/2");
  T mean(0);
  for (const auto& l : lambdas) mean += l;
  mean /= T(cubic.N);
  return cubic.eval(lambdas, mean);
}

/// The dimension-4/5 cubic equal to <Lap R, R> on Einstein spaces:
/// (a, b, c) = (8, 8(n-4)/3, -4(n+2)(n-1)^2/3).
template <class T>
BochnerCubic<T> jp_cubic(int n) {
  if (n != 4 && n != 5) throw std::invalid_argument("jp_cubic: only dimensions 4 and 5");
  BochnerCubic<T> cubic;
  cubic.n = n;
  cubic.N = traceless_dim(n);
  cubic.a = T(8);
  cubic.b = frac<T>(8, 3) * T(n - 4);
  cubic.c = -frac<T>(4, 3) * T(n + 2) * T(n - 1) * T(n - 1);
  return cubic;
}

/// The cubic rewritten in beta_i = lambda_i + D lbar under the constraint
/// sum beta = N(1+D) lbar:
///   a sum(b^3) + (b - 3aD) lbar sum(b^2) + G lbar^3,
/// with the remainder computed in closed form:
///   G = a N D^2 (3 + 2D) - b N D (D + 2) + c.
template <class T>
struct BetaForm {
  int n = 0;
  int N = 0;
  T a{}, b_beta{}, G{}, D{};

  T eval(const std::vector<T>& betas, const T& lambda_bar) const {
    T s3(0), s2(0);
    for (const auto& b : betas) {
      s2 += b * b;
      s3 += b * b * b;
    }
    return a * s3 + b_beta * lambda_bar * s2 + G * lambda_bar * lambda_bar * lambda_bar;
  }
};

template <class T>
BetaForm<T> beta_substitute(const BochnerCubic<T>& cubic, const T& D) {
  BetaForm<T> form;
  form.n = cubic.n;
  form.N = cubic.N;
  form.D = D;
  form.a = cubic.a;
  form.b_beta = cubic.b - T(3) * cubic.a * D;
  const T N(cubic.N);
  form.G = cubic.a * N * D * D * (T(3) + T(2) * D) - cubic.b * N * D * (D + T(2)) + cubic.c;
  return form;
}

/// Exact certificate for a rigidity constant theta(n, k): the matched cone
/// constant, the shift D, both minimizers of the matched cubic (as multiples
/// of lbar), and the residues proving the minimum is 0.
struct ThetaCertificate {
  enum class Source { DF, JP };

  int n = 0, k = 0, N = 0;
  Source source = Source::DF;
  Rational theta;
  Rational D;
  std::vector<Rational> point1;  // (1, ..., 1)
  std::vector<Rational> point2;  // (-D, (N+D)/(N-1), ...)
  Rational residue_matching;     // b/a - 3D + (2N-1)/(N-1)(1+D), must be 0
  Rational residue_point1;       // cubic at point1, must be 0
  Rational residue_point2;       // cubic at point2, must be 0
  bool theta_nonneg = false;
  bool below_li_threshold = false;  // theta < 2(n-1)/(n+2)
  bool k_within_quarter = false;    // k <= floor((n+2)/4)

  bool residues_zero() const {
    return residue_matching == 0 && residue_point1 == 0 && residue_point2 == 0;
  }
  Rational sum_form() const { return Rational(k) * theta; }
  BochnerCubic<Rational> cubic() const;
};

/// Solves the coefficient-matching equation for the Einstein estimate cubic:
/// theta = ((N-k)(2N-9n+6) - 3nN(k-2)) / ((N-3)(N-k) + 3kn(N-2)).
ThetaCertificate solve_theta_df(int n, int k);

/// Dimension 4/5 route: the cubic has no theta term, so the matching fixes
/// D = (3(2N-1) + (n-4)(N-1)) / (3(N-2)) first and theta follows from
/// D = ((N-1)k theta + N(k-1))/(N-k).
ThetaCertificate solve_theta_jp(int n, int k);

/// Samples feasible spectra (beta >= 0 on the shifted simplex, mapped back to
/// lambda) and polishes with projected gradient descent; returns the smallest
/// value of the matched cubic found, at lbar = 1. For a valid certificate the
/// analytic minimum is 0, so the probe must stay >= -1e-8 N.
double estimate_min_probe(const ThetaCertificate& cert, int trials, std::uint64_t seed);

}  // namespace secondkind
