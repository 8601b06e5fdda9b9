// Acceptance suite: every release criterion with its tolerance pinned in
// code, one pass/fail line each. Exits nonzero if any criterion fails.

#include <unistd.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "secondkind/bochner.hpp"
#include "secondkind/oracles.hpp"
#include "secondkind/optimize.hpp"
#include "secondkind/random_tensors.hpp"
#include "secondkind/rng.hpp"
#include "secondkind/second_kind.hpp"
#include "secondkind/spectra.hpp"
#include "secondkind/theorems.hpp"
#include "secondkind/verify.hpp"

using namespace secondkind;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << name;
  if (!detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << std::endl;
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string run_cli(const std::string& args, int& exit_code) {
  const auto out_path = fs::temp_directory_path() /
                        ("secondkind_acceptance_" + std::to_string(::getpid()) + ".out");
  const std::string cmd = std::string(SECONDKIND_CLI_PATH) + " " + args + " > " +
                          out_path.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  fs::remove(out_path);
  return buffer.str();
}

/// Picks "key=value" tokens out of the machine rows of a theta run.
std::map<std::string, std::string> parse_row(const std::string& line) {
  std::map<std::string, std::string> kv;
  std::istringstream is(line);
  std::string token;
  while (is >> token) {
    const auto eq = token.find('=');
    if (eq != std::string::npos) kv[token.substr(0, eq)] = token.substr(eq + 1);
  }
  return kv;
}

void criterion1_constants() {
  const auto start = std::chrono::steady_clock::now();
  int exit_code = -1;
  const std::string out = run_cli("theta --n-range 4..10", exit_code);
  const double elapsed = seconds_since(start);

  // (n, k) -> expected exact sum form k*theta
  const std::vector<std::tuple<int, int, std::string>> expected = {
      {4, 1, "17/7"}, {4, 2, "1"},      {5, 1, "47/18"},    {5, 2, "4/3"},     {5, 3, "1/18"},
      {6, 1, "208/647"}, {7, 1, "163/383"}, {10, 1, "964/1421"}, {10, 2, "16/37"},
  };
  std::map<std::pair<int, int>, std::string> seen;
  std::istringstream lines(out);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind("row ", 0) != 0) continue;
    auto kv = parse_row(line);
    seen[{std::stoi(kv["n"]), std::stoi(kv["k"])}] = kv["sum_form"];
  }
  bool ok = exit_code == 0;
  std::string missing;
  for (const auto& [n, k, value] : expected) {
    auto it = seen.find({n, k});
    if (it == seen.end() || it->second != value) {
      ok = false;
      missing += " (" + std::to_string(n) + "," + std::to_string(k) + ")";
    }
  }
  ok = ok && elapsed < 1.0;
  std::ostringstream detail;
  detail << "exact sum forms from the CLI table, " << elapsed << " s";
  if (!missing.empty()) detail << "; mismatch at" << missing;
  report(1, "constant regression via `theta --n-range 4..10`", ok, detail.str());
}

void criterion2_certificates() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string witness;
  int admissible = 0;
  for (const auto& row : build_table(4, 20)) {
    if (!row.admissible) continue;
    ++admissible;
    if (!(row.cert.residue_matching == 0 && row.cert.residue_point2 == 0 &&
          row.cert.residue_point1 == 0)) {
      ok = false;
      witness = "(n=" + std::to_string(row.n) + ",k=" + std::to_string(row.k) + ")";
      break;
    }
  }
  const double elapsed = seconds_since(start);
  ok = ok && elapsed < 5.0;
  report(2, "certificate residues exactly zero for admissible (n,k), 4 <= n <= 20", ok,
         witness.empty() ? std::to_string(admissible) + " certificates, " +
                               std::to_string(elapsed) + " s"
                         : witness);
}

void criterion3_exclusions() {
  bool ok = true;
  std::string detail;
  const auto rows = build_table(4, 20);
  auto find = [&](int n, int k) -> const ClassificationRow* {
    for (const auto& row : rows)
      if (row.n == n && row.k == k) return &row;
    return nullptr;
  };
  for (auto [n, k] : {std::pair{6, 2}, std::pair{7, 2}, std::pair{10, 3}}) {
    const auto* row = find(n, k);
    if (!row || row->admissible || !(row->theta < 0) ||
        row->inadmissible_reason.find("negative theta") == std::string::npos) {
      ok = false;
      detail += " (" + std::to_string(n) + "," + std::to_string(k) + ") not excluded;";
    }
  }
  for (int k = 1; k <= 4; ++k) {
    const auto* row = find(14, k);
    if (!row || !row->admissible) {
      ok = false;
      detail += " (14," + std::to_string(k) + ") not admissible;";
    }
  }
  report(3, "exclusion regression: (6,2), (7,2), (10,3) out; (14,k<=4) in", ok, detail);
}

void criterion4_identities() {
  const auto start = std::chrono::steady_clock::now();
  VerifyOptions opt;
  opt.trials = 100;
  opt.seed = 12345;
  opt.n_lo = 4;
  opt.n_hi = 8;
  const auto suite = run_identities_suite(opt);
  const double elapsed = seconds_since(start);
  bool ok = elapsed < 60.0;
  std::string witness;
  for (const auto& check : suite.checks)
    if (!check.pass) {
      ok = false;
      witness += " [" + check.name + ": " + check.detail + "]";
    }
  report(4, "identity suite on 100 seeded tensors per n in 4..8", ok,
         witness.empty() ? std::to_string(elapsed) + " s" : witness);
}

void criterion5_model_spectra() {
  const auto dir = fs::temp_directory_path();
  const auto sphere_path = dir / ("secondkind_sphere_" + std::to_string(::getpid()) + ".txt");
  const auto flat_path = dir / ("secondkind_flat_" + std::to_string(::getpid()) + ".txt");
  {
    std::ofstream f(sphere_path);
    f << "n = 4\nkind = model\nmodel = sphere\ncurvature = 2.5\n";
  }
  {
    std::ofstream f(flat_path);
    f << "n = 5\nkind = model\nmodel = flat\n";
  }

  auto eigenvalues_of = [](const std::string& out) {
    std::vector<double> values;
    std::istringstream lines(out);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.rfind("eigenvalue index=", 0) != 0) continue;
      values.push_back(std::stod(line.substr(line.find("value=") + 6)));
    }
    return values;
  };

  int code_sphere = -1, code_flat = -1;
  const auto sphere_out = run_cli("spectrum --input " + sphere_path.string(), code_sphere);
  const auto flat_out = run_cli("spectrum --input " + flat_path.string(), code_flat);
  fs::remove(sphere_path);
  fs::remove(flat_path);

  const auto sphere_vals = eigenvalues_of(sphere_out);
  const auto flat_vals = eigenvalues_of(flat_out);
  bool ok = code_sphere == 0 && code_flat == 0 && sphere_vals.size() == 9 && flat_vals.size() == 14;
  for (double v : sphere_vals) ok = ok && std::abs(v - 2.5) <= 1e-10;
  for (double v : flat_vals) ok = ok && std::abs(v) <= 1e-12;
  report(5, "sphere spectrum all equal to c; flat spectrum all zero", ok,
         "constant 2.5 at n=4; zeros at n=5");
}

void criterion6_minimization() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (int N : {3, 9, 14}) {
    const Rational C(BigInt(N) * (N - 1), BigInt(2 * N - 1));
    const Rational tie = C * C * C / (N * N) - C * C / N;
    const auto res = brute_force_min(N, to_double(C), 64, 424242);
    if (std::abs(res.value - to_double(tie)) > 1e-6) {
      ok = false;
      detail += " N=" + std::to_string(N) + " value off;";
    }
    bool interior = false, boundary = false;
    for (const auto& cluster : res.argmins) {
      bool is_interior = true, is_boundary = std::abs(cluster.front()) <= 1e-5;
      for (double v : cluster) is_interior = is_interior && std::abs(v - to_double(C) / N) <= 1e-5;
      for (size_t i = 1; i < cluster.size(); ++i)
        is_boundary = is_boundary && std::abs(cluster[i] - to_double(C) / (N - 1)) <= 1e-5;
      interior = interior || is_interior;
      boundary = boundary || is_boundary;
    }
    if (!(interior && boundary)) {
      ok = false;
      detail += " N=" + std::to_string(N) + " missing an argmin shape;";
    }

    const auto above = brute_force_min(N, 1.1 * to_double(C), 64, 424243);
    bool unique_interior = above.argmins.size() == 1;
    if (unique_interior)
      for (double v : above.argmins[0])
        unique_interior = unique_interior && std::abs(v - 1.1 * to_double(C) / N) <= 1e-5;
    if (!unique_interior) {
      ok = false;
      detail += " N=" + std::to_string(N) + " above-threshold argmin not unique;";
    }
  }
  const double elapsed = seconds_since(start);
  ok = ok && elapsed < 120.0;
  report(6, "minimization lemma oracle at C = N(N-1)/(2N-1) and 1.1x", ok,
         detail.empty() ? std::to_string(elapsed) + " s, 64 restarts" : detail);
}

void criterion7_lambda1_lp() {
  bool ok = true;
  double worst = 0.0;
  for (int N : {9, 14, 20}) {
    for (int t = 0; t < 20; ++t) {
      Rng rng = Rng::derive(987654, 1000ull * N + t);
      const int k = 1 + static_cast<int>(rng.raw() % static_cast<unsigned>(N - 1));
      const double theta = rng.uniform(0.0, 3.0);
      const double lp = oracles::lp_min_lambda1(N, k, theta, 1.0);
      const double expect = -to_double(lambda1_bound<double>(N, k, theta));
      worst = std::max(worst, std::abs(lp - expect));
    }
  }
  ok = worst <= 1e-10;
  report(7, "LP oracle attains -D lambda-bar for N in {9,14,20}, 20 pairs each", ok,
         "max deviation " + std::to_string(worst));
}

void criterion8_proposition() {
  int done = 0, attempts = 0;
  bool ok = true;
  while (done < 10000 && attempts < 500000) {
    ++attempts;
    Rng rng = Rng::derive(555666, attempts);
    const int N = std::array<int, 3>{9, 14, 20}[rng.raw() % 3];
    std::vector<double> vals(static_cast<size_t>(N));
    double mean = 0.0;
    for (auto& v : vals) {
      v = 1.0 + rng.uniform(-1.5, 1.5);
      mean += v;
    }
    mean /= N;
    for (auto& v : vals) v += 1.0 - mean;
    std::sort(vals.begin(), vals.end());
    const int k = 1 + static_cast<int>(rng.raw() % 3);
    const double theta = rng.uniform(0.0, 2.0);
    if (!cone_check(vals, 1.0, k, theta).holds) continue;
    const double m_bound = rng.uniform(0.5, 2.0);
    std::vector<double> w(static_cast<size_t>(N));
    double s_total = 0.0;
    for (auto& v : w) {
      v = rng.uniform(0.0, m_bound);
      s_total += v;
    }
    if (s_total < k * m_bound) continue;
    ++done;
    const auto res = weighted_sum_bound(vals, 1.0, w, m_bound, k, theta);
    if (!res.holds) {
      ok = false;
      break;
    }
  }
  ok = ok && done == 10000;

  // equality case, exact
  const Rational theta = frac<Rational>(1, 3), m = frac<Rational>(5, 7);
  std::vector<Rational> lam{-theta, -theta, Rational(3) + 2 * theta};
  std::vector<Rational> wts{m, m, Rational(0)};
  const auto eq = weighted_sum_bound<Rational>(lam, Rational(1), wts, m, 1, theta);
  ok = ok && eq.sum == eq.bound && eq.holds;
  report(8, "weighted-sum estimate over 10000 feasible trials; equality case exact", ok,
         std::to_string(done) + " trials");
}

void criterion9_probe() {
  bool ok = true;
  std::string detail;
  double worst = 0.0;
  for (const auto& row : build_table(4, 12)) {
    if (!row.admissible) continue;
    const double found = estimate_min_probe(row.cert, 5000, 31337);
    worst = std::min(worst, found);
    if (found < -1e-8 * row.cert.N) {
      ok = false;
      detail += " (n=" + std::to_string(row.n) + ",k=" + std::to_string(row.k) + ") min " +
                std::to_string(found) + ";";
    }
  }
  report(9, "feasible-cone probe stays above -1e-8 N for certified (n,k), n <= 12", ok,
         detail.empty() ? "lowest value " + std::to_string(worst) : detail);
}

}  // namespace

int main() {
  criterion1_constants();
  criterion2_certificates();
  criterion3_exclusions();
  criterion4_identities();
  criterion5_model_spectra();
  criterion6_minimization();
  criterion7_lambda1_lp();
  criterion8_proposition();
  criterion9_probe();

  if (failures > 0) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all acceptance criteria passed" << std::endl;
  return 0;
}
