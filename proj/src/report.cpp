#include "secondkind/report.hpp"

#include <unistd.h>

#include <cstdlib>

#include "secondkind/version.hpp"

namespace secondkind {

Report::Report(const std::string& command, std::uint64_t seed, const std::string& mode) {
  record("meta")
      .kv("tool", kToolName)
      .kv("version", kToolVersion)
      .kv("command", command)
      .kv("seed", seed)
      .kv("mode", mode);
}

void Report::print(std::ostream& os) const {
  for (const auto& line : human_) os << line << "\n";
  os << "--- machine ---\n";
  for (const auto& line : machine_) os << line << "\n";
}

bool color_allowed() {
  if (std::getenv("NO_COLOR") != nullptr) return false;
  return isatty(fileno(stdout)) != 0;
}

}  // namespace secondkind
