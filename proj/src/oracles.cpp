#include "secondkind/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace secondkind::oracles {

namespace {

constexpr double kPivotTol = 1e-11;

/// Tableau simplex on min c.x, A x = b, x >= 0, b >= 0, starting from the
/// given basic set. Bland's rule. Columns >= allowed never enter. Returns
/// false if unbounded. tab is (rows+1) x (cols+1); the last row holds the
/// reduced costs and minus the current objective value.
bool simplex_core(std::vector<std::vector<double>>& tab, std::vector<int>& basis, int rows,
                  int cols, int allowed) {
  for (;;) {
    int enter = -1;
    for (int j = 0; j < allowed; ++j)
      if (tab[rows][j] < -kPivotTol) {
        enter = j;
        break;  // Bland: smallest index
      }
    if (enter < 0) return true;
    int leave = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < rows; ++i) {
      if (tab[i][enter] > kPivotTol) {
        double ratio = tab[i][cols] / tab[i][enter];
        if (leave < 0 || ratio < best_ratio - 1e-15 ||
            (std::abs(ratio - best_ratio) <= 1e-15 && basis[i] < basis[leave]))
          leave = i, best_ratio = ratio;
      }
    }
    if (leave < 0) return false;  // unbounded
    const double piv = tab[leave][enter];
    for (int j = 0; j <= cols; ++j) tab[leave][j] /= piv;
    for (int i = 0; i <= rows; ++i) {
      if (i == leave) continue;
      const double factor = tab[i][enter];
      if (factor == 0.0) continue;
      for (int j = 0; j <= cols; ++j) tab[i][j] -= factor * tab[leave][j];
    }
    basis[leave] = enter;
  }
}

}  // namespace

LpResult lp_minimize(const std::vector<double>& c, const std::vector<LpConstraint>& constraints) {
  const int nfree = static_cast<int>(c.size());
  const int rows = static_cast<int>(constraints.size());
  // free x -> u - v with u, v >= 0; slack/surplus per inequality; artificials everywhere
  const int nsplit = 2 * nfree;
  int nslack = 0;
  for (const auto& con : constraints)
    if (con.relation != 0) ++nslack;
  const int cols = nsplit + nslack + rows;  // artificials last

  std::vector<std::vector<double>> tab(static_cast<size_t>(rows) + 1,
                                       std::vector<double>(static_cast<size_t>(cols) + 1, 0.0));
  std::vector<int> basis(rows);

  int slack_at = nsplit;
  for (int i = 0; i < rows; ++i) {
    const auto& con = constraints[i];
    if (static_cast<int>(con.coeff.size()) != nfree)
      throw std::invalid_argument("lp_minimize: constraint size mismatch");
    double sign = con.rhs < 0 ? -1.0 : 1.0;
    for (int j = 0; j < nfree; ++j) {
      tab[i][2 * j] = sign * con.coeff[j];
      tab[i][2 * j + 1] = -sign * con.coeff[j];
    }
    int rel = con.relation * (sign < 0 ? -1 : 1);
    if (con.relation != 0) {
      tab[i][slack_at] = (rel < 0) ? 1.0 : -1.0;
      ++slack_at;
    }
    tab[i][nsplit + nslack + i] = 1.0;  // artificial
    tab[i][cols] = sign * con.rhs;
    basis[i] = nsplit + nslack + i;
  }

  // phase 1: minimize sum of artificials
  for (int j = nsplit + nslack; j < cols; ++j) tab[rows][j] = 1.0;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j <= cols; ++j) tab[rows][j] -= tab[i][j];
  if (!simplex_core(tab, basis, rows, cols, cols)) return {};
  double phase1 = -tab[static_cast<size_t>(rows)][static_cast<size_t>(cols)];
  LpResult result;
  if (phase1 > 1e-7) {
    result.feasible = false;
    return result;
  }
  // drive leftover artificials out of the basis; rows that cannot pivot are
  // redundant and get dropped
  int live_rows = rows;
  for (int i = 0; i < live_rows;) {
    if (basis[static_cast<size_t>(i)] < nsplit + nslack) {
      ++i;
      continue;
    }
    int enter = -1;
    for (int j = 0; j < nsplit + nslack; ++j)
      if (std::abs(tab[static_cast<size_t>(i)][static_cast<size_t>(j)]) > kPivotTol) {
        enter = j;
        break;
      }
    if (enter < 0) {  // redundant constraint
      tab.erase(tab.begin() + i);
      basis.erase(basis.begin() + i);
      --live_rows;
      continue;
    }
    const double piv = tab[static_cast<size_t>(i)][static_cast<size_t>(enter)];
    for (int j = 0; j <= cols; ++j) tab[static_cast<size_t>(i)][static_cast<size_t>(j)] /= piv;
    for (int r = 0; r <= live_rows; ++r) {
      if (r == i) continue;
      const double factor = tab[static_cast<size_t>(r)][static_cast<size_t>(enter)];
      if (factor == 0.0) continue;
      for (int j = 0; j <= cols; ++j)
        tab[static_cast<size_t>(r)][static_cast<size_t>(j)] -= factor * tab[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    basis[static_cast<size_t>(i)] = enter;
    ++i;
  }

  // phase 2: original objective; artificial columns can no longer enter
  auto& zrow = tab[static_cast<size_t>(live_rows)];
  for (int j = 0; j <= cols; ++j) zrow[static_cast<size_t>(j)] = 0.0;
  for (int j = 0; j < nfree; ++j) {
    zrow[static_cast<size_t>(2 * j)] = c[static_cast<size_t>(j)];
    zrow[static_cast<size_t>(2 * j + 1)] = -c[static_cast<size_t>(j)];
  }
  for (int i = 0; i < live_rows; ++i) {
    const double factor = zrow[static_cast<size_t>(basis[static_cast<size_t>(i)])];
    if (factor == 0.0) continue;
    for (int j = 0; j <= cols; ++j)
      zrow[static_cast<size_t>(j)] -= factor * tab[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  if (!simplex_core(tab, basis, live_rows, cols, nsplit + nslack)) {
    result.feasible = true;
    result.bounded = false;
    return result;
  }

  result.feasible = true;
  std::vector<double> split(static_cast<size_t>(cols), 0.0);
  for (int i = 0; i < live_rows; ++i)
    split[static_cast<size_t>(basis[static_cast<size_t>(i)])] = tab[static_cast<size_t>(i)][static_cast<size_t>(cols)];
  result.x.resize(static_cast<size_t>(nfree));
  for (int j = 0; j < nfree; ++j) result.x[static_cast<size_t>(j)] = split[2 * j] - split[2 * j + 1];
  result.value = 0.0;
  for (int j = 0; j < nfree; ++j) result.value += c[static_cast<size_t>(j)] * result.x[static_cast<size_t>(j)];
  return result;
}

double lp_min_lambda1(int N, int k, double theta, double lambda_bar) {
  if (k < 1 || k >= N) throw std::invalid_argument("lp_min_lambda1: need 1 <= k < N");
  std::vector<double> c(static_cast<size_t>(N), 0.0);
  c[0] = 1.0;
  std::vector<LpConstraint> cons;
  for (int i = 0; i + 1 < N; ++i) {
    LpConstraint ord;
    ord.coeff.assign(static_cast<size_t>(N), 0.0);
    ord.coeff[static_cast<size_t>(i)] = 1.0;
    ord.coeff[static_cast<size_t>(i + 1)] = -1.0;
    ord.relation = -1;
    ord.rhs = 0.0;
    cons.push_back(std::move(ord));
  }
  LpConstraint total;
  total.coeff.assign(static_cast<size_t>(N), 1.0);
  total.relation = 0;
  total.rhs = N * lambda_bar;
  cons.push_back(std::move(total));
  LpConstraint cone;
  cone.coeff.assign(static_cast<size_t>(N), 0.0);
  for (int i = 0; i < k; ++i) cone.coeff[static_cast<size_t>(i)] = 1.0;
  cone.relation = 1;
  cone.rhs = -k * theta * lambda_bar;
  cons.push_back(std::move(cone));

  auto result = lp_minimize(c, cons);
  if (!result.feasible || !result.bounded)
    throw std::runtime_error("lp_min_lambda1: oracle LP failed");
  return result.value;
}

namespace {

/// Polynomial as coefficient vector, highest degree first.
std::vector<double> derivative(const std::vector<double>& p) {
  const int deg = static_cast<int>(p.size()) - 1;
  std::vector<double> d;
  for (int i = 0; i < deg; ++i) d.push_back(p[static_cast<size_t>(i)] * (deg - i));
  return d;
}

double eval_poly(const std::vector<double>& p, double x) {
  double acc = 0.0;
  for (double coeff : p) acc = acc * x + coeff;
  return acc;
}

/// Remainder of a by b (both highest-first), negated for the Sturm chain.
std::vector<double> neg_remainder(std::vector<double> a, const std::vector<double>& b) {
  while (a.size() >= b.size()) {
    const double factor = a[0] / b[0];
    const size_t offset = 0;
    for (size_t i = 0; i < b.size(); ++i) a[offset + i] -= factor * b[i];
    a.erase(a.begin());
  }
  while (!a.empty() && std::abs(a[0]) < 1e-300) a.erase(a.begin());
  for (auto& v : a) v = -v;
  return a;
}

int sign_changes(const std::vector<std::vector<double>>& chain, double x) {
  int changes = 0, prev = 0;
  for (const auto& p : chain) {
    double v = eval_poly(p, x);
    int s = (v > 0) - (v < 0);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

std::vector<double> charpoly_eigenvalues(const SymMatrix<double>& a) {
  const int n = a.dim();
  if (n > 8) throw std::invalid_argument("charpoly_eigenvalues: oracle limited to n <= 8");

  // Faddeev-LeVerrier: p(x) = x^n + c1 x^{n-1} + ... + cn
  std::vector<double> m(static_cast<size_t>(n) * n, 0.0), next(m);
  auto at = [&](std::vector<double>& v, int i, int j) -> double& { return v[static_cast<size_t>(i) * n + j]; };
  std::vector<double> poly{1.0};
  for (int i = 0; i < n; ++i)
    at(m, i, i) = 1.0;  // M_0 = I
  double ck = 1.0;
  std::vector<double> coeffs;
  for (int step = 1; step <= n; ++step) {
    // M_k = A * (M_{k-1} + c_{k-1} I), with the c from the previous step folded in
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double acc = 0.0;
        for (int l = 0; l < n; ++l) acc += a(i, l) * at(m, l, j);
        at(next, i, j) = acc;
      }
    double trace = 0.0;
    for (int i = 0; i < n; ++i) trace += at(next, i, i);
    ck = -trace / step;
    coeffs.push_back(ck);
    m = next;
    for (int i = 0; i < n; ++i) at(m, i, i) += ck;
  }
  for (double c : coeffs) poly.push_back(c);

  // Sturm chain
  std::vector<std::vector<double>> chain{poly, derivative(poly)};
  while (chain.back().size() > 1) {
    auto rem = neg_remainder(chain[chain.size() - 2], chain.back());
    if (rem.empty()) break;
    chain.push_back(std::move(rem));
  }

  // Gershgorin bounds
  double lo = 0.0, hi = 0.0;
  for (int i = 0; i < n; ++i) {
    double radius = 0.0;
    for (int j = 0; j < n; ++j)
      if (j != i) radius += std::abs(a(i, j));
    lo = std::min(lo, a(i, i) - radius);
    hi = std::max(hi, a(i, i) + radius);
  }
  lo -= 1.0;
  hi += 1.0;

  // roots of p in (x, y]: sign_changes(x) - sign_changes(y)
  std::vector<double> out;
  std::vector<std::pair<double, double>> stack{{lo, hi}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    int roots = sign_changes(chain, x) - sign_changes(chain, y);
    if (roots <= 0) continue;
    if (roots == 1 || y - x < 1e-13 * (1.0 + std::abs(x) + std::abs(y))) {
      // refine a single (or merged) root by bisection on the count
      double a0 = x, b0 = y;
      for (int iter = 0; iter < 200 && b0 - a0 > 1e-14 * (1.0 + std::abs(a0) + std::abs(b0));
           ++iter) {
        double mid = 0.5 * (a0 + b0);
        if (sign_changes(chain, a0) - sign_changes(chain, mid) >= 1)
          b0 = mid;
        else
          a0 = mid;
      }
      for (int r = 0; r < roots; ++r) out.push_back(0.5 * (a0 + b0));
      continue;
    }
    double mid = 0.5 * (x + y);
    stack.push_back({x, mid});
    stack.push_back({mid, y});
  }
  std::sort(out.begin(), out.end());
  if (static_cast<int>(out.size()) != n)
    throw std::runtime_error("charpoly_eigenvalues: root count mismatch");
  return out;
}

double grid_min_simplex3(double C, int steps) {
  double best = 1e300;
  for (int i = 0; i <= steps; ++i) {
    for (int j = 0; i + j <= steps; ++j) {
      double x = C * i / steps;
      double y = C * j / steps;
      double z = C - x - y;
      double value = x * x * (x - 1) + y * y * (y - 1) + z * z * (z - 1);
      best = std::min(best, value);
    }
  }
  return best;
}

}  // namespace secondkind::oracles
