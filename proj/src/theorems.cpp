#include "secondkind/theorems.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace secondkind {

Rational k_admissibility_bound(int n) {
  if (n < 4) throw std::invalid_argument("k_admissibility_bound: dimension must be >= 4");
  const BigInt N = BigInt(n - 1) * (n + 2) / 2;
  return Rational(2 * N * (N + 3) - 3 * n * N, 3 * n * (N - 3) + 2 * N + 6);
}

char theorem_letter(int n) {
  if (n == 4 || n == 5) return 'B';
  if (n == 6 || n == 7 || n == 10) return 'C';
  return 'A';
}

std::vector<ClassificationRow> build_table(int n_lo, int n_hi) {
  if (n_lo < 4) throw std::invalid_argument("build_table: dimensions start at 4");
  if (n_hi < n_lo) throw std::invalid_argument("build_table: empty range");
  std::vector<ClassificationRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    const bool jp = (n == 4 || n == 5);
    const int k_max = jp ? 3 : (n + 2) / 4;
    const Rational bound = k_admissibility_bound(n);
    for (int k = 1; k <= k_max; ++k) {
      ClassificationRow row;
      row.n = n;
      row.k = k;
      row.cert = jp ? solve_theta_jp(n, k) : solve_theta_df(n, k);
      row.theta = row.cert.theta;
      row.sum_form = row.cert.sum_form();
      row.k_bound = bound;
      row.li_applicable = row.cert.below_li_threshold;
      row.theorem = theorem_letter(n);
      row.admissible = row.cert.theta_nonneg;
      if (!row.admissible) {
        std::ostringstream os;
        os << "negative theta (" << format_scalar(row.theta) << "); no cone condition for k=" << k;
        row.inadmissible_reason = os.str();
      }
      if (row.admissible && !row.li_applicable)
        row.note = "theta exceeds 2(n-1)/(n+2); covered by the eigenvalue-pinching route";
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

VerdictReport verdict(const std::vector<double>& sorted_values, double mean, int n) {
  VerdictReport rep;
  rep.n = n;
  rep.lambda_bar = mean;
  const int N = traceless_dim(n);
  if (static_cast<int>(sorted_values.size()) != N)
    throw std::invalid_argument("verdict: spectrum size must be (n-1)(n+2)/2");

  double scale = 0.0;
  for (double v : sorted_values) scale = std::max(scale, std::abs(v));
  if (std::abs(mean) <= 1e-12 * (scale > 0 ? scale : 1.0)) {
    rep.flat_branch = true;
    rep.verdict = "flat branch: mean eigenvalue is zero";
    return rep;
  }

  bool any = false;
  for (const auto& row : build_table(n, n)) {
    if (!row.admissible) continue;
    VerdictRow vr;
    vr.k = row.k;
    vr.theta = row.theta;
    auto cone = cone_check(sorted_values, mean, row.k, to_double(row.theta));
    vr.slack = cone.slack;
    vr.holds = cone.slack >= -1e-10 * std::abs(mean);
    any = any || vr.holds;
    rep.rows.push_back(vr);
  }
  std::ostringstream os;
  if (any)
    os << "hypotheses of Theorem " << theorem_letter(n)
       << " satisfied ⇒ flat or spherical space form";
  else
    os << "no theorem applies";
  rep.verdict = os.str();
  return rep;
}

std::vector<ExactVerdictRow> verdict_exact(const std::vector<Rational>& sorted_values,
                                           const Rational& mean, int n) {
  const int N = traceless_dim(n);
  if (static_cast<int>(sorted_values.size()) != N)
    throw std::invalid_argument("verdict_exact: spectrum size must be (n-1)(n+2)/2");
  std::vector<ExactVerdictRow> out;
  for (const auto& row : build_table(n, n)) {
    if (!row.admissible) continue;
    ExactVerdictRow vr;
    vr.k = row.k;
    vr.theta = row.theta;
    auto cone = cone_check(sorted_values, mean, row.k, row.theta);
    vr.slack = cone.slack;
    vr.holds = cone.holds;
    out.push_back(std::move(vr));
  }
  return out;
}

}  // namespace secondkind
