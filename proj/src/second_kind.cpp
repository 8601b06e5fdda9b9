#include "secondkind/second_kind.hpp"

#include <cmath>
#include <stdexcept>

#include "secondkind/rng.hpp"

namespace secondkind {

SymMatrix<double> action_gram(const Tensor4<double>& t, const TracelessBasis<double>& basis) {
  if (basis.n != t.dim()) throw std::invalid_argument("action_gram: dimension mismatch");
  std::vector<Tensor4<double>> acted;
  acted.reserve(basis.N);
  for (int a = 0; a < basis.N; ++a) acted.push_back(act(basis.raw[a], t));
  SymMatrix<double> gram(basis.N);
  for (int a = 0; a < basis.N; ++a)
    for (int b = a; b < basis.N; ++b) gram.set(a, b, acted[a].inner(acted[b]));
  return gram;
}

double max_unit_action_norm(const Tensor4<double>& t, const TracelessBasis<double>& basis,
                            int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("max_unit_action_norm: trials must be >= 1");
  const int N = basis.N;
  SymMatrix<double> gram = action_gram(t, basis);

  double best = 0.0;
  std::vector<double> c(N), bc(N);
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = Rng::derive(seed, static_cast<std::uint64_t>(trial));
    double norm = 0.0;
    for (int i = 0; i < N; ++i) {
      c[i] = rng.normal();
      norm += c[i] * c[i];
    }
    norm = std::sqrt(norm);
    if (norm == 0.0) continue;
    for (int i = 0; i < N; ++i) c[i] /= norm;

    // power-iteration ascent; the Rayleigh quotient of the PSD Gram matrix is
    // monotone along iterates and always <= the true maximum
    double prev = -1.0;
    for (int iter = 0; iter < 200; ++iter) {
      double value = 0.0, bnorm = 0.0;
      for (int i = 0; i < N; ++i) {
        double acc = 0.0;
        for (int j = 0; j < N; ++j) acc += gram(i, j) * c[j];
        bc[i] = acc;
        value += acc * c[i];
        bnorm += acc * acc;
      }
      if (value > best) best = value;
      if (bnorm <= 0.0) break;
      bnorm = std::sqrt(bnorm);
      for (int i = 0; i < N; ++i) c[i] = bc[i] / bnorm;
      if (value <= prev * (1.0 + 1e-14)) break;
      prev = value;
    }
  }
  return best;
}

}  // namespace secondkind
