#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "secondkind/basis.hpp"
#include "secondkind/curvature.hpp"
#include "secondkind/random_tensors.hpp"
#include "secondkind/second_kind.hpp"

using namespace secondkind;

TEST_CASE("traceless basis dimensions and orthonormality") {
  CHECK(build_traceless_basis<double>(4).N == 9);
  CHECK(build_traceless_basis<double>(2).N == 2);
  CHECK_THROWS_AS(build_traceless_basis<double>(1), std::invalid_argument);

  // n = 5: Gram matrix of the normalized elements is the 14x14 identity
  const auto basis = build_traceless_basis<double>(5);
  REQUIRE(basis.N == 14);
  for (int a = 0; a < basis.N; ++a) {
    CHECK(std::abs(basis.raw[a].trace()) <= 1e-15);
    for (int b = a; b < basis.N; ++b) {
      const double ip = basis.raw[a].inner(basis.raw[b]);
      CHECK(std::abs(ip - (a == b ? 1.0 : 0.0)) <= 1e-14);
    }
  }

  // exact backend: raw elements are orthogonal with the recorded norms
  const auto exact = build_traceless_basis<Rational>(5);
  for (int a = 0; a < exact.N; ++a) {
    CHECK(exact.raw[a].trace() == 0);
    for (int b = a; b < exact.N; ++b)
      CHECK(exact.raw[a].inner(exact.raw[b]) == (a == b ? exact.norm2[a] : Rational(0)));
  }
}

TEST_CASE("constant-curvature tensor") {
  const auto t2 = kulkarni_nomizu_gg<Rational>(2);
  CHECK(t2(0, 1, 0, 1) == 1);
  CHECK(t2(0, 1, 1, 0) == -1);

  for (int n : {2, 3, 4, 5}) {
    const auto t = kulkarni_nomizu_gg<Rational>(n);
    CHECK_NOTHROW(validate_curvature_symmetries(t));
  }

  // Ricci contraction is (n-1) * identity
  const auto t4 = kulkarni_nomizu_gg<Rational>(4);
  const auto ric = ricci(t4);
  for (int j = 0; j < 4; ++j)
    for (int l = 0; l < 4; ++l) CHECK(ric(j, l) == (j == l ? Rational(3) : Rational(0)));
}

TEST_CASE("einstein assembly") {
  SUBCASE("sphere normalization") {
    EinsteinData<Rational> data{4, Rational(12), Tensor4<Rational>(4)};
    const auto r = assemble_einstein(data);
    CHECK(r.data() == kulkarni_nomizu_gg<Rational>(4).data());
  }
  SUBCASE("zero scalar curvature gives the zero tensor") {
    EinsteinData<Rational> data{5, Rational(0), Tensor4<Rational>(5)};
    const auto r = assemble_einstein(data);
    for (const auto& v : r.data()) CHECK(v == 0);
  }
  SUBCASE("random Weyl with s = 12 in n = 4 has Ricci 3 id") {
    // oracle: direct Ricci contraction of the assembled tensor
    Rng rng(99);
    EinsteinData<double> data{4, 12.0, random_weyl(4, rng)};
    const auto r = assemble_einstein(data);
    const auto ric = ricci(r);
    for (int j = 0; j < 4; ++j)
      for (int l = 0; l < 4; ++l) CHECK(std::abs(ric(j, l) - (j == l ? 3.0 : 0.0)) <= 1e-12);
  }
  SUBCASE("invalid weyl part is rejected with the identity named") {
    Tensor4<Rational> bad(4);
    bad(0, 1, 0, 1) = 1;  // not antisymmetrized
    EinsteinData<Rational> data{4, Rational(12), bad};
    CHECK_THROWS_WITH_AS(assemble_einstein(data),
                         doctest::Contains("antisymmetry"), invalid_curvature);

    // trace-free violation: a valid curvature tensor that is not Weyl
    EinsteinData<Rational> data2{4, Rational(12), kulkarni_nomizu_gg<Rational>(4)};
    CHECK_THROWS_WITH_AS(assemble_einstein(data2), doctest::Contains("trace-free"),
                         invalid_curvature);
  }
}

TEST_CASE("weyl projector") {
  SUBCASE("idempotent on Weyl tensors") {
    Rng rng(7);
    const auto w = random_weyl_exact(4, rng);
    CHECK(project_to_weyl(w).data() == w.data());
  }
  SUBCASE("kills the constant-curvature part") {
    const auto p = project_to_weyl(kulkarni_nomizu_gg<Rational>(5));
    for (const auto& v : p.data()) CHECK(v == 0);
  }
  SUBCASE("output is exactly Weyl in the rational backend") {
    Rng rng(11);
    const auto w = random_weyl_exact(5, rng);
    CHECK_NOTHROW(validate_weyl(w));
    CHECK(w.norm2() > 0);
  }
  SUBCASE("float output single traces vanish relative to the norm") {
    Rng rng(13);
    const auto w = random_weyl(5, rng);
    const double scale = std::sqrt(w.norm2());
    REQUIRE(scale > 0);
    for (int j = 0; j < 5; ++j)
      for (int l = 0; l < 5; ++l) {
        double acc = 0.0;
        for (int i = 0; i < 5; ++i) acc += w(i, j, i, l);
        CHECK(std::abs(acc) <= 1e-12 * scale);
      }
  }
}

TEST_CASE("second-kind matrix") {
  SUBCASE("sphere gives the identity") {
    const auto basis = build_traceless_basis<double>(4);
    const auto m = second_kind_matrix(kulkarni_nomizu_gg<double>(4), basis);
    for (int a = 0; a < 9; ++a)
      for (int b = 0; b < 9; ++b) CHECK(std::abs(m(a, b) - (a == b ? 1.0 : 0.0)) <= 1e-14);
  }
  SUBCASE("zero tensor gives the zero matrix") {
    const auto basis = build_traceless_basis<double>(5);
    const auto m = second_kind_matrix(Tensor4<double>(5), basis);
    for (int a = 0; a < basis.N; ++a)
      for (int b = 0; b < basis.N; ++b) CHECK(m(a, b) == 0.0);
  }
  SUBCASE("trace identity for a random Einstein tensor in n = 5") {
    Rng rng(21);
    const double s = 17.5;
    EinsteinData<double> data{5, s, random_weyl(5, rng)};
    const auto m = second_kind_matrix(assemble_einstein(data), build_traceless_basis<double>(5));
    CHECK(m.trace() == doctest::Approx(7.0 * s / 10.0).epsilon(1e-12));
  }
  SUBCASE("exact trace identity") {
    Rng rng(23);
    const Rational s = frac<Rational>(35, 2);
    EinsteinData<Rational> data{5, s, random_weyl_exact(5, rng)};
    const auto r = assemble_einstein(data);
    const auto basis = build_traceless_basis<Rational>(5);
    CHECK(second_kind_trace(r, basis) == Rational(7) * s / 10);
  }
}

TEST_CASE("first-kind matrix") {
  SUBCASE("sphere in n = 3 is the identity on the wedge basis") {
    // oracle: direct evaluation of (1/2) sum R_ijkl e_k^e_l on each e_i^e_j
    const auto r = kulkarni_nomizu_gg<double>(3);
    const auto m = first_kind_matrix(r);
    REQUIRE(m.dim() == 3);
    std::vector<std::pair<int, int>> pairs{{0, 1}, {0, 2}, {1, 2}};
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        auto [i, j] = pairs[a];
        auto [k, l] = pairs[b];
        double direct = 0.5 * (r(i, j, k, l) - r(i, j, l, k));  // coefficient of e_k ^ e_l, k < l
        CHECK(m(b, a) == doctest::Approx(direct).epsilon(1e-15));
        CHECK(m(a, b) == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-15));
      }
  }
  SUBCASE("zero tensor maps to zero") {
    const auto m = first_kind_matrix(Tensor4<double>(4));
    for (int a = 0; a < m.dim(); ++a)
      for (int b = 0; b < m.dim(); ++b) CHECK(m(a, b) == 0.0);
  }
  SUBCASE("symmetry for a random curvature tensor") {
    Rng rng(31);
    EinsteinData<double> data{4, 9.0, random_weyl(4, rng)};
    const auto m = first_kind_matrix(assemble_einstein(data));
    for (int a = 0; a < m.dim(); ++a)
      for (int b = 0; b < m.dim(); ++b) CHECK(m(a, b) == m(b, a));
  }
}

TEST_CASE("tensor action") {
  SUBCASE("identity acts as multiplication by the rank") {
    Rng rng(41);
    const auto t = random_tensor4(4, rng);
    SymMatrix<double> id(4);
    for (int i = 0; i < 4; ++i) id.set(i, i, 1.0);
    const auto out = act(id, t);
    for (size_t p = 0; p < t.size(); ++p) CHECK(out.data()[p] == doctest::Approx(4.0 * t.data()[p]));
  }
  SUBCASE("zero tensor stays zero") {
    SymMatrix<double> s(3);
    s.set(0, 1, 2.0);
    const auto out = act(s, Tensor4<double>(3));
    for (const auto& v : out.data()) CHECK(v == 0.0);
  }
  SUBCASE("matches the index-by-index contraction oracle") {
    // oracle: independent brute-force loop over slots and summation index
    SymMatrix<double> s(4);
    s.set(0, 0, 1.0);
    s.set(1, 1, -1.0);
    const auto t = kulkarni_nomizu_gg<double>(4);
    const auto out = act(s, t);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
          for (int l = 0; l < 4; ++l) {
            double expect = 0.0;
            for (int m = 0; m < 4; ++m) {
              expect += s(m, i) * t(m, j, k, l);
              expect += s(m, j) * t(i, m, k, l);
              expect += s(m, k) * t(i, j, m, l);
              expect += s(m, l) * t(i, j, k, m);
            }
            CHECK(out(i, j, k, l) == doctest::Approx(expect).epsilon(1e-14));
          }
  }
  SUBCASE("generic rank-2 action") {
    SymMatrix<double> s(3);
    s.set(0, 1, 1.0);
    std::vector<double> t(9, 0.0);
    t[0 * 3 + 0] = 1.0;  // T = e_0 (x) e_0
    const auto out = act_on_rank(s, t, 2, 3);
    // (S T)(x, y) = T(Sx, y) + T(x, Sy); S e_1 = e_0 gives hits at (1,0) and (0,1)
    CHECK(out[0 * 3 + 1] == doctest::Approx(1.0));
    CHECK(out[1 * 3 + 0] == doctest::Approx(1.0));
    CHECK(out[0 * 3 + 0] == doctest::Approx(0.0));
  }
}

TEST_CASE("action norm sum identity") {
  SUBCASE("zero Weyl") {
    const auto basis = build_traceless_basis<double>(4);
    CHECK(s02_action_norm_sum(Tensor4<double>(4), basis) == 0.0);
  }
  SUBCASE("n = 4 gives 6 |W|^2 and n = 5 gives 44/5 |W|^2") {
    for (int n : {4, 5}) {
      Rng rng(51 + n);
      const auto w = random_weyl(n, rng);
      const auto basis = build_traceless_basis<double>(n);
      const double expect = 2.0 * (n * n + n - 8) / n * w.norm2();
      CHECK(s02_action_norm_sum(w, basis) == doctest::Approx(expect).epsilon(1e-11));
    }
  }
  SUBCASE("exactly zero difference in the rational backend") {
    Rng rng(61);
    const auto w = random_weyl_exact(4, rng);
    const auto basis = build_traceless_basis<Rational>(4);
    CHECK(s02_action_norm_sum(w, basis) == Rational(6) * w.norm2());
  }
}

TEST_CASE("sampled action norms stay under the bound") {
  for (int n : {4, 6}) {
    Rng rng(71 + n);
    const auto w = random_weyl(n, rng);
    const auto basis = build_traceless_basis<double>(n);
    const double bound = (8.0 * n - 16.0) / n * w.norm2();
    const double probed = max_unit_action_norm(w, basis, 50, 2024);
    CHECK(probed <= bound + 1e-9);
    CHECK(probed > 0.0);
  }
  CHECK(max_unit_action_norm(Tensor4<double>(4), build_traceless_basis<double>(4), 3, 1) == 0.0);
}
