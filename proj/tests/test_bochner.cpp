#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "secondkind/bochner.hpp"
#include "secondkind/rng.hpp"

using namespace secondkind;

TEST_CASE("estimate cubic coefficients") {
  SUBCASE("vanishes identically at the constant-curvature point") {
    for (int n : {4, 6, 8, 11}) {
      for (long long tp : {0LL, 1LL, 5LL}) {
        const auto cubic = df_estimate_cubic<Rational>(n, frac<Rational>(tp, 3));
        std::vector<Rational> lambdas(static_cast<size_t>(cubic.N), frac<Rational>(7, 5));
        CHECK(cubic.eval(lambdas, frac<Rational>(7, 5)) == 0);
      }
    }
  }
  SUBCASE("frozen coefficient: n=8, theta=0 gives b = -40/3") {
    const auto cubic = df_estimate_cubic<Rational>(8, Rational(0));
    CHECK(cubic.b == frac<Rational>(-40, 3));
    CHECK(cubic.a == 16);
  }
  SUBCASE("degree-3 homogeneity") {
    const auto cubic = df_estimate_cubic<double>(5, 0.3);
    Rng rng(8);
    std::vector<double> lambdas(static_cast<size_t>(cubic.N));
    double mean = 0.0;
    for (auto& v : lambdas) {
      v = rng.uniform(-1.0, 2.0);
      mean += v;
    }
    mean /= cubic.N;
    const double base = cubic.eval(lambdas, mean);
    for (auto& v : lambdas) v *= 2.0;
    CHECK(cubic.eval(lambdas, 2.0 * mean) == doctest::Approx(8.0 * base).epsilon(1e-12));
  }
}

TEST_CASE("spectral identity right-hand side") {
  SUBCASE("all-equal spectrum telescopes to zero") {
    std::vector<Rational> lambdas(9, frac<Rational>(3, 2));
    CHECK(sum_lambda_w_identity_rhs(4, lambdas) == 0);
  }
  SUBCASE("zero spectrum") {
    std::vector<Rational> lambdas(14, Rational(0));
    CHECK(sum_lambda_w_identity_rhs(5, lambdas) == 0);
  }
  SUBCASE("value at the n=4 boundary minimizer") {
    // independent expansion oracle: assemble the value from the three power
    // sums computed separately, in exact arithmetic
    const auto cert = solve_theta_jp(4, 1);
    const auto& pt = cert.point2;  // (-17/7, 10/7 x 8)
    REQUIRE(pt.front() == frac<Rational>(-17, 7));
    Rational s1(0), s2(0), s3(0);
    for (const auto& v : pt) {
      s1 += v;
      s2 += v * v;
      s3 += v * v * v;
    }
    REQUIRE(s1 == 9);  // mean 1
    const Rational expected = 16 * s3 + frac<Rational>(16 * (2 * 9 - 12 * 4 + 6), 3 * 4) * s2 -
                              frac<Rational>(16 * 9 * (2 * 9 - 9 * 4 + 6), 3 * 4);
    CHECK(expected == frac<Rational>(-20736, 49));
    CHECK(sum_lambda_w_identity_rhs(4, pt) == expected);
  }
}

TEST_CASE("dimension-4/5 cubic") {
  SUBCASE("n=4 coefficients") {
    const auto cubic = jp_cubic<Rational>(4);
    CHECK(cubic.a == 8);
    CHECK(cubic.b == 0);
    CHECK(cubic.c == -72);
  }
  SUBCASE("n=5 coefficients") {
    const auto cubic = jp_cubic<Rational>(5);
    CHECK(cubic.a == 8);
    CHECK(cubic.b == frac<Rational>(8, 3));
    CHECK(cubic.c == frac<Rational>(-448, 3));
  }
  SUBCASE("constant curvature annihilates") {
    const auto cubic = jp_cubic<Rational>(4);
    std::vector<Rational> lambdas(9, Rational(1));
    CHECK(cubic.eval(lambdas, Rational(1)) == 0);
  }
  SUBCASE("unsupported dimension") {
    CHECK_THROWS_AS(jp_cubic<Rational>(6), std::invalid_argument);
  }
}

TEST_CASE("beta substitution") {
  SUBCASE("D = 0 leaves the cubic unchanged") {
    const auto cubic = df_estimate_cubic<Rational>(6, frac<Rational>(1, 7));
    const auto form = beta_substitute(cubic, Rational(0));
    CHECK(form.a == cubic.a);
    CHECK(form.b_beta == cubic.b);
    CHECK(form.G == cubic.c);
  }
  SUBCASE("quadratic coefficient shifts by -3aD") {
    const auto cubic = df_estimate_cubic<Rational>(8, frac<Rational>(1, 20));
    const Rational D = frac<Rational>(5, 3);
    const auto form = beta_substitute(cubic, D);
    CHECK(form.b_beta == cubic.b - 48 * D);
  }
  SUBCASE("evaluation agrees exactly under the sum constraint") {
    const auto cubic = df_estimate_cubic<Rational>(6, frac<Rational>(208, 647));
    const Rational D = lambda1_bound(traceless_dim(6), 1, frac<Rational>(208, 647));
    const auto form = beta_substitute(cubic, D);
    Rng rng(99);
    for (int t = 0; t < 50; ++t) {
      std::vector<Rational> lambdas(static_cast<size_t>(cubic.N));
      Rational mean(0);
      for (auto& v : lambdas) {
        v = frac<Rational>(rng.uniform_int(-12, 12), 4);
        mean += v;
      }
      mean /= cubic.N;
      Rational lbar = mean;
      if (lbar == 0) {
        lambdas[0] += cubic.N;
        lbar = 1;
      }
      std::vector<Rational> betas(lambdas);
      for (auto& b : betas) b += D * lbar;
      CHECK(cubic.eval(lambdas, lbar) == form.eval(betas, lbar));
    }
  }
}

TEST_CASE("theta certificates, Einstein route") {
  SUBCASE("frozen constants") {
    CHECK(solve_theta_df(6, 1).theta == frac<Rational>(208, 647));
    CHECK(solve_theta_df(10, 2).theta == frac<Rational>(8, 37));
    CHECK(solve_theta_df(10, 2).sum_form() == frac<Rational>(16, 37));
    CHECK(solve_theta_df(8, 2).theta == frac<Rational>(1, 20));
    CHECK(solve_theta_df(7, 1).theta == frac<Rational>(163, 383));
    CHECK(solve_theta_df(10, 1).theta == frac<Rational>(964, 1421));
  }
  SUBCASE("residues vanish exactly for all n up to 20") {
    for (int n = 4; n <= 20; ++n) {
      const int N = traceless_dim(n);
      for (int k = 1; k < std::min(N, 8); ++k) {
        const auto cert = solve_theta_df(n, k);
        CHECK(cert.residue_matching == 0);
        CHECK(cert.residue_point1 == 0);
        CHECK(cert.residue_point2 == 0);
      }
    }
  }
  SUBCASE("point2 structure") {
    const auto cert = solve_theta_df(8, 2);
    CHECK(cert.point2.front() == -cert.D);
    Rational sum(0);
    for (const auto& v : cert.point2) sum += v;
    CHECK(sum == cert.N);  // sum = N lbar at lbar = 1
  }
  SUBCASE("negative theta cases recorded") {
    CHECK(solve_theta_df(6, 2).theta < 0);
    CHECK(solve_theta_df(7, 2).theta < 0);
    CHECK(solve_theta_df(10, 3).theta < 0);
    CHECK(!solve_theta_df(6, 2).theta_nonneg);
  }
}

TEST_CASE("theta certificates, dimension-4/5 route") {
  SUBCASE("n=4 constants") {
    const auto k1 = solve_theta_jp(4, 1);
    CHECK(k1.D == frac<Rational>(17, 7));
    CHECK(k1.theta == frac<Rational>(17, 7));
    CHECK(!k1.below_li_threshold);  // 17/7 > 2(n-1)/(n+2) = 1
    const auto k2 = solve_theta_jp(4, 2);
    CHECK(k2.theta == frac<Rational>(1, 2));
    CHECK(k2.sum_form() == 1);
  }
  SUBCASE("n=5 constants") {
    CHECK(solve_theta_jp(5, 1).theta == frac<Rational>(47, 18));
    CHECK(solve_theta_jp(5, 2).sum_form() == frac<Rational>(4, 3));
    CHECK(solve_theta_jp(5, 3).theta == frac<Rational>(1, 54));
    CHECK(solve_theta_jp(5, 3).sum_form() == frac<Rational>(1, 18));
  }
  SUBCASE("residues vanish exactly") {
    for (int n : {4, 5})
      for (int k = 1; k <= 3; ++k) {
        const auto cert = solve_theta_jp(n, k);
        CHECK(cert.residue_matching == 0);
        CHECK(cert.residue_point1 == 0);
        CHECK(cert.residue_point2 == 0);
      }
  }
  SUBCASE("k = 3 in n = 4 goes negative") {
    CHECK(solve_theta_jp(4, 3).theta == frac<Rational>(-1, 7));
  }
  SUBCASE("unsupported dimensions") {
    CHECK_THROWS_AS(solve_theta_jp(6, 1), std::invalid_argument);
    CHECK_THROWS_AS(solve_theta_jp(4, 4), std::invalid_argument);
  }
}

TEST_CASE("nonnegativity probe on the feasible cone") {
  SUBCASE("certified pairs stay above -1e-8 N") {
    for (auto [n, k] : {std::pair{8, 2}, std::pair{4, 1}, std::pair{6, 1}}) {
      const auto cert = (n <= 5) ? solve_theta_jp(n, k) : solve_theta_df(n, k);
      const double found = estimate_min_probe(cert, 5000, 321);
      CHECK(found >= -1e-8 * cert.N);
    }
  }
  SUBCASE("evaluation at both minimizers is exactly zero") {
    const auto cert = solve_theta_df(8, 2);
    const auto cubic = cert.cubic();
    CHECK(cubic.eval(cert.point1, Rational(1)) == 0);
    CHECK(cubic.eval(cert.point2, Rational(1)) == 0);
  }
  SUBCASE("an over-relaxed theta is caught by the probe") {
    // doubling theta past the certificate makes the estimate dip negative
    auto cert = solve_theta_df(8, 2);
    cert.theta = cert.theta * 2;
    cert.D = lambda1_bound(cert.N, cert.k, cert.theta);
    const double found = estimate_min_probe(cert, 4000, 321);
    CHECK(found < -1e-6);
  }
}
