#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace secondkind {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;  // deterministic summary; witness data on failure
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct VerifyOptions {
  int trials = 100;
  std::uint64_t seed = 12345;
  int n_lo = 4;
  int n_hi = 8;
};

/// Tensor-algebra identity suite: action-norm sum identity, action-norm
/// upper bound, basis independence, Weyl norm identity, trace identity,
/// homogeneity, projector exactness, model spectra.
SuiteResult run_identities_suite(const VerifyOptions& opt);

/// Eigensolver, cone-condition, weighted-sum, and minimization-lemma suite,
/// with the independent LP / characteristic-polynomial / grid oracles.
SuiteResult run_lemmas_suite(const VerifyOptions& opt);

/// Certificate suite: matching residues, minimizer residues, exclusions,
/// beta-substitution identity, feasible-cone nonnegativity probes, and the
/// inequality-chain reproduction on concrete tensors.
SuiteResult run_bochner_suite(const VerifyOptions& opt);

/// name: identities | lemmas | bochner | all.
std::vector<SuiteResult> run_suites(const std::string& name, const VerifyOptions& opt);

}  // namespace secondkind
