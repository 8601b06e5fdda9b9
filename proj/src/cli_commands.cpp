#include "secondkind/cli_commands.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "secondkind/curvature_file.hpp"
#include "secondkind/oracles.hpp"
#include "secondkind/optimize.hpp"
#include "secondkind/report.hpp"
#include "secondkind/second_kind.hpp"
#include "secondkind/spectra.hpp"
#include "secondkind/theorems.hpp"
#include "secondkind/verify.hpp"

namespace secondkind {

namespace {

int input_error(std::ostream& err, const std::string& what) {
  err << "error: " << what << "\n";
  return kExitInputError;
}

std::string bool01(bool b) { return b ? "1" : "0"; }

}  // namespace

int cmd_spectrum(const SpectrumOptions& opt, std::ostream& out, std::ostream& err) {
  CurvatureFile file;
  Tensor4<double> tensor;
  Rational s_exact;
  double s = 0.0;
  bool exact_trace_zero_residue = true;
  bool have_exact = false;
  try {
    file = load_curvature_file(opt.input_path);
    if (opt.exact) {
      const auto exact_tensor = curvature_file_to_tensor<Rational>(file);
      s_exact = curvature_file_scalar(file, exact_tensor);
      const auto basis = build_traceless_basis<Rational>(file.n);
      const Rational trace = second_kind_trace(exact_tensor, basis);
      exact_trace_zero_residue = trace * (2 * file.n) == Rational(file.n + 2) * s_exact;
      have_exact = true;
      tensor = Tensor4<double>(file.n);
      for (size_t i = 0; i < tensor.size(); ++i) tensor.data()[i] = to_double(exact_tensor.data()[i]);
      s = to_double(s_exact);
    } else {
      tensor = curvature_file_to_tensor<double>(file);
      s = curvature_file_scalar(file, tensor);
    }
  } catch (const std::exception& ex) {
    return input_error(err, ex.what());
  }

  const int n = file.n;
  const auto basis = build_traceless_basis<double>(n);
  const int N = basis.N;
  const auto matrix = second_kind_matrix(tensor, basis);
  const auto eig = eigen_sym(matrix);
  const double lbar = eig.spectrum.mean;

  // Einstein deviation: |Ric - (s/n) id|, relative
  const auto ric = ricci(tensor);
  double einstein_dev = 0.0, ric_scale = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double target = i == j ? s / n : 0.0;
      einstein_dev = std::max(einstein_dev, std::abs(ric(i, j) - target));
      ric_scale = std::max(ric_scale, std::abs(ric(i, j)));
    }
  const bool einstein = einstein_dev <= 1e-9 * (1.0 + ric_scale);

  const double trace = matrix.trace();
  const double trace_expected = (n + 2) * s / (2.0 * n);
  const double trace_resid = std::abs(trace - trace_expected) / std::max(1.0, std::abs(trace_expected));

  // Weyl norm identity |W|^2 = 4/3 sum(l^2) - 4N/3 lbar^2 (Einstein only)
  const auto weyl = project_to_weyl(tensor);
  const double w2 = weyl.norm2();
  double sum_sq = 0.0;
  for (double v : eig.spectrum.values) sum_sq += v * v;
  const double w2_from_spec = 4.0 / 3.0 * sum_sq - 4.0 * N / 3.0 * lbar * lbar;
  const double w2_resid = std::abs(w2 - w2_from_spec) / std::max(w2, 1e-12);

  Report rep("spectrum", 0, opt.exact ? "exact" : "float");
  {
    std::ostringstream os;
    os << "spectrum of the second-kind operator, n = " << n << ", N = " << N;
    rep.human(os.str());
  }
  {
    std::ostringstream os;
    os << "  eigenvalues:";
    for (double v : eig.spectrum.values) os << " " << format_scalar(v);
    rep.human(os.str());
  }
  rep.human("  mean lambda-bar = " + format_scalar(lbar));
  rep.human("  scalar curvature s = " + (have_exact ? format_scalar(s_exact) : format_scalar(s)));
  rep.human(std::string("  einstein: ") + (einstein ? "yes" : "no"));
  rep.human("  trace check |tr - (n+2)s/2n| (rel) = " + format_scalar(trace_resid) +
            (opt.exact ? (exact_trace_zero_residue ? " (exact: 0)" : " (exact: NONZERO)") : ""));
  if (einstein)
    rep.human("  Weyl norm identity residual (rel) = " + format_scalar(w2_resid));
  else
    rep.human("  Weyl norm identity skipped (input is not Einstein)");

  {
    auto rec = rep.record("spectrum");
    rec.kv("n", n).kv("N", N).kv("s", have_exact ? format_scalar(s_exact) : format_scalar(s));
    rec.kv("lambda_bar", format_scalar(lbar));
    rec.kv("einstein", bool01(einstein));
  }
  for (int i = 0; i < N; ++i)
    rep.record("eigenvalue").kv("index", i + 1).kv("value", format_scalar(eig.spectrum.values[i]));
  rep.record("trace_check")
      .kv("trace", format_scalar(trace))
      .kv("expected", format_scalar(trace_expected))
      .kv("rel_residual", format_scalar(trace_resid))
      .kv("exact_zero", opt.exact ? bool01(exact_trace_zero_residue) : "n/a");
  rep.record("weyl_norm_check")
      .kv("applicable", bool01(einstein))
      .kv("w2", format_scalar(w2))
      .kv("w2_from_spectrum", format_scalar(w2_from_spec))
      .kv("rel_residual", format_scalar(w2_resid));

  bool pass = trace_resid <= 1e-10 && (!einstein || w2_resid <= 1e-9) &&
              (!opt.exact || exact_trace_zero_residue);
  rep.record("result").kv("pass", bool01(pass));
  rep.print(out);
  return pass ? kExitOk : kExitCheckFailed;
}

int cmd_theta(const ThetaOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.n_lo < 4) return input_error(err, "theta: n range starts at 4");
  if (opt.n_hi < opt.n_lo) return input_error(err, "theta: empty n range");

  std::vector<ClassificationRow> rows;
  try {
    rows = build_table(opt.n_lo, opt.n_hi);
  } catch (const std::exception& ex) {
    return input_error(err, ex.what());
  }

  Report rep("theta", 0, "exact");
  rep.human("rigidity constants theta(n, k); sum form: l_1+...+l_k >= -(k theta) lambda-bar");
  {
    std::ostringstream os;
    os << std::left << std::setw(4) << "n" << std::setw(4) << "k" << std::setw(4) << "thm"
       << std::setw(14) << "theta" << std::setw(14) << "k*theta" << std::setw(16) << "D"
       << std::setw(12) << "admissible" << "li-route";
    rep.human(os.str());
  }
  bool all_zero_residue = true;
  for (const auto& row : rows) {
    std::ostringstream os;
    os << std::left << std::setw(4) << row.n << std::setw(4) << row.k << std::setw(4)
       << row.theorem << std::setw(14) << format_scalar(row.theta) << std::setw(14)
       << format_scalar(row.sum_form) << std::setw(16) << format_scalar(row.cert.D)
       << std::setw(12) << (row.admissible ? "yes" : "no")
       << (row.li_applicable ? "yes" : "no");
    if (!row.admissible) os << "  [" << row.inadmissible_reason << "]";
    if (!row.note.empty()) os << "  [" << row.note << "]";
    rep.human(os.str());

    all_zero_residue = all_zero_residue && row.cert.residues_zero();
    rep.record("row")
        .kv("n", row.n)
        .kv("k", row.k)
        .kv("theorem", row.theorem)
        .kv("source", row.cert.source == ThetaCertificate::Source::JP ? "jp" : "df")
        .kv("theta", format_scalar(row.theta))
        .kv("sum_form", format_scalar(row.sum_form))
        .kv("D", format_scalar(row.cert.D))
        .kv("admissible", bool01(row.admissible))
        .kv("li_applicable", bool01(row.li_applicable))
        .kv("k_bound", format_scalar(row.k_bound))
        .kv("residue_matching", format_scalar(row.cert.residue_matching))
        .kv("residue_point1", format_scalar(row.cert.residue_point1))
        .kv("residue_point2", format_scalar(row.cert.residue_point2));
  }
  rep.record("result").kv("pass", bool01(all_zero_residue)).kv("rows", rows.size());
  rep.print(out);
  return all_zero_residue ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const VerifyCmdOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.trials < 1) return input_error(err, "verify: trials must be >= 1");
  if (opt.n_lo < 4 || opt.n_hi < opt.n_lo) return input_error(err, "verify: bad dimension range");

  std::vector<SuiteResult> suites;
  try {
    VerifyOptions vopt{opt.trials, opt.seed, opt.n_lo, opt.n_hi};
    suites = run_suites(opt.suite, vopt);
  } catch (const std::exception& ex) {
    return input_error(err, ex.what());
  }

  Report rep("verify", opt.seed, "float+exact");
  bool all = true;
  for (const auto& suite : suites) {
    rep.human("suite " + suite.suite + (suite.all_pass() ? ": pass" : ": FAIL"));
    for (const auto& check : suite.checks) {
      rep.human(std::string("  [") + (check.pass ? "ok" : "FAIL") + "] " + check.name +
                (check.detail.empty() ? "" : "  (" + check.detail + ")"));
      rep.record("check")
          .kv("suite", suite.suite)
          .kv("pass", bool01(check.pass))
          .kv("name", "\"" + check.name + "\"")
          .kv("detail", "\"" + check.detail + "\"");
      all = all && check.pass;
    }
  }
  rep.record("result").kv("pass", bool01(all));
  rep.print(out);
  return all ? kExitOk : kExitCheckFailed;
}

int cmd_minimize(const MinimizeOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.N < 3) return input_error(err, "minimize: N must be >= 3");
  if (opt.restarts < 1) return input_error(err, "minimize: restarts must be >= 1");
  Rational C;
  try {
    C = opt.C.empty() ? Rational(BigInt(opt.N) * (opt.N - 1), BigInt(2 * opt.N - 1))
                      : parse_rational(opt.C);
  } catch (const std::exception& ex) {
    return input_error(err, ex.what());
  }
  if (C <= 0) return input_error(err, "minimize: C must be positive");

  Report rep("minimize", opt.seed, "exact+float");
  const int N = opt.N;
  rep.human("simplex cubic minimization: N = " + std::to_string(N) + ", C = " + format_scalar(C));

  bool interior_ok = true;
  Rational interior_best;
  std::string interior_note;
  try {
    auto points = interior_critical_points(N, C);
    interior_best = points.front().value;
    for (const auto& cp : points) {
      std::ostringstream os;
      os << "  interior Q_" << cp.k << ": value " << format_scalar(cp.value) << ", mu "
         << format_scalar(cp.mu) << (cp.feasible ? "" : "  (outside the simplex)");
      rep.human(os.str());
      rep.record("interior")
          .kv("k", cp.k)
          .kv("value", format_scalar(cp.value))
          .kv("mu", format_scalar(cp.mu))
          .kv("feasible", bool01(cp.feasible));
      if (cp.value < interior_best) interior_best = cp.value;
    }
  } catch (const std::domain_error& ex) {
    interior_ok = false;
    interior_note = ex.what();
    rep.human(std::string("  interior analysis unavailable: ") + ex.what());
    rep.record("interior").kv("error", "\"C <= N/3\"");
  }

  auto boundary = boundary_minimum(N, C);
  rep.human("  boundary minimum: k = " + std::to_string(boundary.k) + " zeros, value " +
            format_scalar(boundary.value));
  rep.record("boundary").kv("k", boundary.k).kv("value", format_scalar(boundary.value));

  Rational analytic = boundary.value;
  if (interior_ok && interior_best < analytic) analytic = interior_best;

  auto oracle = brute_force_min(N, to_double(C), opt.restarts, opt.seed);
  rep.human("  descent oracle: value " + format_scalar(oracle.value) + ", " +
            std::to_string(oracle.argmins.size()) + " argmin cluster(s)");
  for (const auto& cluster : oracle.argmins) {
    std::ostringstream os;
    os << "    argmin:";
    for (double v : cluster) os << " " << format_scalar(v);
    rep.human(os.str());
  }
  const double analytic_d = to_double(analytic);
  const bool agree = oracle.value >= analytic_d - 1e-8 && oracle.value <= analytic_d + 1e-6;
  rep.human(std::string("  agreement: ") + (agree ? "oracle matches the analytic minimum" : "MISMATCH"));
  rep.record("oracle")
      .kv("value", format_scalar(oracle.value))
      .kv("clusters", oracle.argmins.size())
      .kv("analytic", format_scalar(analytic))
      .kv("agree", bool01(agree));
  rep.record("result").kv("pass", bool01(agree));
  rep.print(out);
  return agree ? kExitOk : kExitCheckFailed;
}

int cmd_classify(const ClassifyOptions& opt, std::ostream& out, std::ostream& err) {
  CurvatureFile file;
  Tensor4<double> tensor;
  try {
    file = load_curvature_file(opt.input_path);
    if (opt.exact) {
      const auto exact_tensor = curvature_file_to_tensor<Rational>(file);
      tensor = Tensor4<double>(file.n);
      for (size_t i = 0; i < tensor.size(); ++i) tensor.data()[i] = to_double(exact_tensor.data()[i]);
    } else {
      tensor = curvature_file_to_tensor<double>(file);
    }
    if (file.n < 4) return input_error(err, "classify: needs n >= 4");
  } catch (const std::exception& ex) {
    return input_error(err, ex.what());
  }

  const auto basis = build_traceless_basis<double>(file.n);
  const auto eig = eigen_sym(second_kind_matrix(tensor, basis));
  const auto rep_verdict = verdict(eig.spectrum.values, eig.spectrum.mean, file.n);

  Report rep("classify", 0, opt.exact ? "exact" : "float");
  rep.human("classification for n = " + std::to_string(file.n));
  rep.human("  lambda-bar = " + format_scalar(rep_verdict.lambda_bar));
  for (const auto& row : rep_verdict.rows) {
    std::ostringstream os;
    os << "  cone condition k = " << row.k << ", theta = " << format_scalar(row.theta) << ": "
       << (row.holds ? "holds" : "fails") << " (slack " << format_scalar(row.slack) << ")";
    rep.human(os.str());
    rep.record("cone")
        .kv("k", row.k)
        .kv("theta", format_scalar(row.theta))
        .kv("holds", bool01(row.holds))
        .kv("slack", format_scalar(row.slack));
  }
  rep.human("verdict: " + rep_verdict.verdict);
  rep.record("verdict")
      .kv("flat_branch", bool01(rep_verdict.flat_branch))
      .kv("text", "\"" + rep_verdict.verdict + "\"");
  rep.print(out);
  return kExitOk;
}

}  // namespace secondkind
