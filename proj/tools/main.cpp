#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "secondkind/cli_commands.hpp"
#include "secondkind/version.hpp"

namespace {

bool parse_range(const std::string& text, int& lo, int& hi) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace secondkind;

  CLI::App app{"algebra of the curvature operator of the second kind: spectra, cone "
               "conditions, and exact rigidity constants for Einstein curvature tensors"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);

  SpectrumOptions spectrum_opt;
  std::string spectrum_mode = "float";
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of the second-kind operator of a curvature file");
  spectrum->add_option("--input", spectrum_opt.input_path, "curvature file")->required();
  spectrum->add_option("--mode", spectrum_mode, "exact|float (default float)")
      ->check(CLI::IsMember({"exact", "float"}));

  ThetaOptions theta_opt;
  std::string theta_range = "4..10";
  auto* theta = app.add_subcommand("theta", "rigidity constant table theta(n, k)");
  theta->add_option("--n-range", theta_range, "dimension range a..b (default 4..10)");

  VerifyCmdOptions verify_opt;
  std::string verify_dims = "4..8";
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--suite", verify_opt.suite, "identities|lemmas|bochner|all")
      ->check(CLI::IsMember({"identities", "lemmas", "bochner", "all"}));
  verify->add_option("--trials", verify_opt.trials, "base trial count (default 100)");
  verify->add_option("--seed", verify_opt.seed, "random seed (default 12345)");
  verify->add_option("--dims", verify_dims, "dimension range a..b (default 4..8)");

  MinimizeOptions minimize_opt;
  auto* minimize = app.add_subcommand("minimize", "constrained cubic minimization on the simplex");
  minimize->add_option("--N", minimize_opt.N, "number of variables")->required();
  minimize->add_option("--C", minimize_opt.C, "constraint sum, p/q or decimal (default N(N-1)/(2N-1))");
  minimize->add_option("--restarts", minimize_opt.restarts, "descent restarts (default 64)");
  minimize->add_option("--seed", minimize_opt.seed, "random seed (default 12345)");

  ClassifyOptions classify_opt;
  std::string classify_mode = "exact";
  auto* classify = app.add_subcommand("classify", "check theorem hypotheses for a curvature file");
  classify->add_option("--input", classify_opt.input_path, "curvature file")->required();
  classify->add_option("--mode", classify_mode, "exact|float (default exact)")
      ->check(CLI::IsMember({"exact", "float"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (spectrum->parsed()) {
      spectrum_opt.exact = spectrum_mode == "exact";
      return cmd_spectrum(spectrum_opt, std::cout, std::cerr);
    }
    if (theta->parsed()) {
      if (!parse_range(theta_range, theta_opt.n_lo, theta_opt.n_hi)) {
        std::cerr << "error: bad --n-range '" << theta_range << "'\n";
        return kExitInputError;
      }
      return cmd_theta(theta_opt, std::cout, std::cerr);
    }
    if (verify->parsed()) {
      if (!parse_range(verify_dims, verify_opt.n_lo, verify_opt.n_hi)) {
        std::cerr << "error: bad --dims '" << verify_dims << "'\n";
        return kExitInputError;
      }
      return cmd_verify(verify_opt, std::cout, std::cerr);
    }
    if (minimize->parsed()) return cmd_minimize(minimize_opt, std::cout, std::cerr);
    if (classify->parsed()) {
      classify_opt.exact = classify_mode == "exact";
      return cmd_classify(classify_opt, std::cout, std::cerr);
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
