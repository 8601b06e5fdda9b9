#pragma once

#include <vector>

#include "secondkind/sym_matrix.hpp"

namespace secondkind::oracles {

/// Independent verification routes. Nothing here shares code with the
/// implementations it checks: the eigensolver oracle goes through the
/// characteristic polynomial, the bound oracles through a dense-tableau
/// simplex method, the minimization oracle through grid enumeration.

struct LpConstraint {
  std::vector<double> coeff;
  double rhs = 0.0;
  int relation = 0;  // -1: <=, 0: ==, +1: >=
};

struct LpResult {
  bool feasible = false;
  bool bounded = true;
  double value = 0.0;
  std::vector<double> x;
};

/// Minimize c.x over free variables subject to the constraints
/// (two-phase tableau simplex, Bland's rule).
LpResult lp_minimize(const std::vector<double>& c, const std::vector<LpConstraint>& constraints);

/// Minimal lambda_1 over {lambda sorted ascending, sum = N lbar,
/// (lambda_1+...+lambda_k)/k >= -theta lbar}.
double lp_min_lambda1(int N, int k, double theta, double lambda_bar);

/// Eigenvalues via the characteristic polynomial: Faddeev-LeVerrier
/// coefficients, then Sturm-sequence bisection. Sizes <= 8.
std::vector<double> charpoly_eigenvalues(const SymMatrix<double>& a);

/// Dense grid search for min of sum(x^3) - sum(x^2) on {x >= 0, sum x = C}
/// at N = 3. Returns the minimal value found over a (steps+1)^2 grid.
double grid_min_simplex3(double C, int steps);

}  // namespace secondkind::oracles
