#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace secondkind {

/// Exit codes shared by every command: 0 all checks passed, 1 a check
/// failed (witness in the report), 2 input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

struct SpectrumOptions {
  std::string input_path;
  bool exact = false;  // exact input parsing and exact identity checks
};
int cmd_spectrum(const SpectrumOptions& opt, std::ostream& out, std::ostream& err);

struct ThetaOptions {
  int n_lo = 4;
  int n_hi = 10;
};
int cmd_theta(const ThetaOptions& opt, std::ostream& out, std::ostream& err);

struct VerifyCmdOptions {
  std::string suite = "all";
  int trials = 100;
  std::uint64_t seed = 12345;
  int n_lo = 4;
  int n_hi = 8;
};
int cmd_verify(const VerifyCmdOptions& opt, std::ostream& out, std::ostream& err);

struct MinimizeOptions {
  int N = 9;
  std::string C;  // "p/q" or decimal; empty means N(N-1)/(2N-1)
  int restarts = 64;
  std::uint64_t seed = 12345;
};
int cmd_minimize(const MinimizeOptions& opt, std::ostream& out, std::ostream& err);

struct ClassifyOptions {
  std::string input_path;
  bool exact = true;
};
int cmd_classify(const ClassifyOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace secondkind
