#pragma once

#include <string>
#include <vector>

#include "secondkind/bochner.hpp"
#include "secondkind/scalar.hpp"
#include "secondkind/spectra.hpp"

namespace secondkind {

/// One (n, k) entry of the rigidity table.
struct ClassificationRow {
  int n = 0, k = 0;
  ThetaCertificate cert;
  bool admissible = false;
  std::string inadmissible_reason;  // empty when admissible
  Rational theta;                   // meaningful even when inadmissible (sign recorded)
  Rational sum_form;                // k * theta
  Rational k_bound;                 // admissibility bound on k
  bool li_applicable = false;       // theta < 2(n-1)/(n+2)
  char theorem = 'A';               // A: n >= 8 (n != 10); B: n = 4, 5; C: n = 6, 7, 10
  std::string note;
};

/// Largest k with a nonnegative matched theta:
/// (2N(N+3) - 3nN) / (3n(N-3) + 2N + 6), exact.
Rational k_admissibility_bound(int n);

/// Theorem letter attached to dimension n.
char theorem_letter(int n);

/// Rows for n in [n_lo, n_hi]. Dimensions 4 and 5 use the dimension-4/5
/// cubic with k = 1..3; n >= 6 uses the Einstein estimate cubic with
/// k = 1..floor((n+2)/4). Rows with negative theta stay in the table,
/// flagged inadmissible with the reason recorded.
std::vector<ClassificationRow> build_table(int n_lo, int n_hi);

struct VerdictRow {
  int k = 0;
  Rational theta;
  bool holds = false;
  double slack = 0.0;
};

struct VerdictReport {
  int n = 0;
  double lambda_bar = 0.0;
  bool flat_branch = false;
  std::vector<VerdictRow> rows;  // one per admissible table row
  std::string verdict;
};

/// Hypothesis checker: tests the cone condition of every admissible row
/// against the given sorted spectrum. No topology is computed; the verdict
/// string only reports whether some theorem's hypotheses hold.
VerdictReport verdict(const std::vector<double>& sorted_values, double mean, int n);

/// Exact variant for rational spectra (slacks compared exactly).
struct ExactVerdictRow {
  int k = 0;
  Rational theta;
  bool holds = false;
  Rational slack;
};
std::vector<ExactVerdictRow> verdict_exact(const std::vector<Rational>& sorted_values,
                                           const Rational& mean, int n);

}  // namespace secondkind
