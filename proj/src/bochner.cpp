#include "secondkind/bochner.hpp"

#include <algorithm>
#include <cmath>

#include "secondkind/optimize.hpp"
#include "secondkind/rng.hpp"

namespace secondkind {

namespace {

void fill_certificate(ThetaCertificate& cert, const BochnerCubic<Rational>& cubic) {
  const int N = cert.N;
  cert.D = lambda1_bound(N, cert.k, cert.theta);
  cert.residue_matching = cubic.b / cubic.a - 3 * cert.D +
                          Rational(2 * N - 1, N - 1) * (1 + cert.D);
  cert.point1.assign(static_cast<size_t>(N), Rational(1));
  cert.point2.assign(1, -cert.D);
  cert.point2.insert(cert.point2.end(), static_cast<size_t>(N - 1),
                     (Rational(N) + cert.D) / (N - 1));
  cert.residue_point1 = cubic.eval(cert.point1, Rational(1));
  cert.residue_point2 = cubic.eval(cert.point2, Rational(1));
  cert.theta_nonneg = cert.theta >= 0;
  cert.below_li_threshold = cert.theta < Rational(2 * (cert.n - 1), cert.n + 2);
  cert.k_within_quarter = 4 * cert.k <= cert.n + 2;
}

}  // namespace

BochnerCubic<Rational> ThetaCertificate::cubic() const {
  return source == Source::DF ? df_estimate_cubic<Rational>(n, theta) : jp_cubic<Rational>(n);
}

ThetaCertificate solve_theta_df(int n, int k) {
  if (n < 4) throw std::invalid_argument("solve_theta_df: dimension must be >= 4");
  const int N = traceless_dim(n);
  if (k < 1 || k >= N) throw std::invalid_argument("solve_theta_df: need 1 <= k < N");

  ThetaCertificate cert;
  cert.n = n;
  cert.k = k;
  cert.N = N;
  cert.source = ThetaCertificate::Source::DF;

  const BigInt num = BigInt(N - k) * (2 * N - 9 * n + 6) - BigInt(3) * n * N * (k - 2);
  const BigInt den = BigInt(N - 3) * (N - k) + BigInt(3) * k * n * (N - 2);
  if (den == 0)
    throw std::domain_error("solve_theta_df: degenerate (n, k), matching equation has no solution");
  cert.theta = Rational(num, den);

  fill_certificate(cert, df_estimate_cubic<Rational>(n, cert.theta));
  return cert;
}

ThetaCertificate solve_theta_jp(int n, int k) {
  if (n != 4 && n != 5) throw std::invalid_argument("solve_theta_jp: only dimensions 4 and 5");
  if (k < 1 || k > 3) throw std::invalid_argument("solve_theta_jp: need 1 <= k <= 3");

  ThetaCertificate cert;
  cert.n = n;
  cert.k = k;
  cert.N = traceless_dim(n);
  cert.source = ThetaCertificate::Source::JP;

  const int N = cert.N;
  const Rational D(BigInt(3) * (2 * N - 1) + BigInt(n - 4) * (N - 1), BigInt(3) * (N - 2));
  // invert D = ((N-1)k theta + N(k-1))/(N-k)
  cert.theta = (D * (N - k) - Rational(N) * (k - 1)) / (Rational(N - 1) * k);

  fill_certificate(cert, jp_cubic<Rational>(n));
  if (cert.D != D) throw std::logic_error("solve_theta_jp: D inversion inconsistent");
  return cert;
}

double estimate_min_probe(const ThetaCertificate& cert, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("estimate_min_probe: trials must be >= 1");
  const int N = cert.N;
  auto form = beta_substitute(cert.cubic(), cert.D);

  const double a = to_double(form.a);
  const double b = to_double(form.b_beta);
  const double g = to_double(form.G);
  const double total = to_double(Rational(N) * (1 + cert.D));  // sum of beta at lbar = 1

  auto f = [&](const std::vector<double>& beta) {
    double s3 = 0.0, s2 = 0.0;
    for (double v : beta) {
      s2 += v * v;
      s3 += v * v * v;
    }
    return a * s3 + b * s2 + g;
  };
  auto grad = [&](const std::vector<double>& beta, std::vector<double>& out) {
    for (size_t i = 0; i < beta.size(); ++i) out[i] = 3.0 * a * beta[i] * beta[i] + 2.0 * b * beta[i];
  };

  auto sample = [&](std::uint64_t index) {
    Rng rng = Rng::derive(seed, index);
    std::vector<double> beta(N);
    double sum = 0.0;
    for (auto& v : beta) {
      v = rng.exp1();
      sum += v;
    }
    for (auto& v : beta) v *= total / sum;
    return beta;
  };

  // Sampling pass over the feasible simplex; the lowest samples and both
  // certified minimizers seed descents.
  double best = f(std::vector<double>(static_cast<size_t>(N), total / N));
  std::vector<std::pair<double, std::uint64_t>> ranked;
  for (int t = 0; t < trials; ++t) {
    double value = f(sample(static_cast<std::uint64_t>(t)));
    best = std::min(best, value);
    ranked.push_back({value, static_cast<std::uint64_t>(t)});
  }
  std::sort(ranked.begin(), ranked.end());
  const int descents = std::min<int>(std::max(8, trials / 200), static_cast<int>(ranked.size()));
  for (int d = 0; d < descents; ++d) {
    auto x = descend_on_simplex(f, grad, sample(ranked[static_cast<size_t>(d)].second), total);
    best = std::min(best, f(x));
  }
  std::vector<double> near_point2(static_cast<size_t>(N), total / (N - 1));
  near_point2[0] = 0.0;
  best = std::min(best, f(descend_on_simplex(f, grad, std::move(near_point2), total)));
  return best;
}

}  // namespace secondkind
