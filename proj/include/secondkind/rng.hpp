#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace secondkind {

/// Deterministic random source. Wraps mt19937_64 and maps raw draws to
/// doubles directly, so streams are identical across standard libraries
/// (std:: distributions are not portable between implementations).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Generator for trial `index` of a seeded loop; trials are
  /// schedule-independent because each derives only from (seed, index).
  static Rng derive(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{seed, index, std::uint64_t(0x5ec09d4153ULL)};
    std::mt19937_64 eng(seq);
    return Rng(eng);
  }

  std::uint64_t raw() { return eng_(); }

  /// Uniform in [0, 1).
  double u01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * u01(); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Standard normal via Box-Muller.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u = 0.0;
    while (u <= 0.0) u = u01();
    double v = u01();
    double r = std::sqrt(-2.0 * std::log(u));
    spare_ = r * std::sin(6.283185307179586476925286766559 * v);
    have_spare_ = true;
    return r * std::cos(6.283185307179586476925286766559 * v);
  }

  /// Exponential(1).
  double exp1() {
    double u = 0.0;
    while (u <= 0.0) u = u01();
    return -std::log(u);
  }

 private:
  explicit Rng(std::mt19937_64 eng) : eng_(eng) {}
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace secondkind
