#include <random>

#include "bvlab/exterior.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace bvlab;
using bvlab::testing::max_abs;

TEST_CASE("subset enumeration") {
  CHECK(binom(6, 2) == 15);
  CHECK(binom(6, 3) == 20);
  CHECK(binom(6, 0) == 1);
  auto s = ksubsets(4, 2);
  REQUIRE(s.size() == 6);
  CHECK(s[0] == std::vector<int>{0, 1});
  CHECK(s[1] == std::vector<int>{0, 2});
  CHECK(s[5] == std::vector<int>{2, 3});
  CHECK(ksubsets(5, 0).size() == 1);

  CHECK(subset_complement({0, 2}, 4) == std::vector<int>{1, 3});
  // (0,1 | 2,3) is the identity arrangement; (0,2 | 1,3) has one inversion.
  CHECK(subset_complement_sign({0, 1}, 4) == 1);
  CHECK(subset_complement_sign({0, 2}, 4) == -1);
  CHECK(subset_complement_sign({1, 3}, 4) == -1);
}

TEST_CASE("minor-expansion determinants agree with pivoted solvers") {
  std::mt19937_64 rng(7001);
  for (int n = 1; n <= 6; ++n)
    for (int t = 0; t < 20; ++t) {
      Eigen::MatrixXd m = bvlab::testing::random_real_matrix(rng, n, n);
      double ref = m.determinant();
      CHECK(det_minor_expansion(m) ==
            doctest::Approx(ref).epsilon(1e-9));
      Eigen::MatrixXcd mc = bvlab::testing::random_complex_matrix(rng, n, n);
      CHECK(std::abs(det_minor_expansion(mc) - mc.determinant()) <
            1e-9 * std::max(1.0, std::abs(mc.determinant())));
    }
}

TEST_CASE("compound matrices") {
  std::mt19937_64 rng(7002);

  SUBCASE("boundary orders") {
    Eigen::MatrixXd m = bvlab::testing::random_real_matrix(rng, 4, 4);
    CHECK(max_abs(Eigen::MatrixXd(compound(m, 1) - m)) < 1e-14);
    Eigen::MatrixXd top = compound(m, 4);
    REQUIRE(top.rows() == 1);
    CHECK(top(0, 0) == doctest::Approx(m.determinant()).epsilon(1e-10));
    Eigen::MatrixXd one = compound(m, 0);
    REQUIRE(one.rows() == 1);
    CHECK(one(0, 0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(compound(m, 5), BadOrder);
    CHECK_THROWS_AS(compound(m, -1), BadOrder);
  }

  SUBCASE("identity maps to identity") {
    Eigen::MatrixXd id = Eigen::MatrixXd::Identity(6, 6);
    for (int k = 1; k <= 5; ++k) {
      Eigen::MatrixXd c = compound(id, k);
      CHECK(max_abs(Eigen::MatrixXd(
                c - Eigen::MatrixXd::Identity(c.rows(), c.cols()))) < 1e-14);
    }
  }

  SUBCASE("multiplicativity") {
    for (int t = 0; t < 50; ++t) {
      int n = 4 + static_cast<int>(t % 3);
      Eigen::MatrixXd a = bvlab::testing::random_real_matrix(rng, n, n);
      Eigen::MatrixXd b = bvlab::testing::random_real_matrix(rng, n, n);
      for (int k = 2; k <= 3; ++k) {
        Eigen::MatrixXd lhs = compound(Eigen::MatrixXd(a * b), k);
        Eigen::MatrixXd rhs = compound(a, k) * compound(b, k);
        double scale = std::max(1.0, max_abs(rhs));
        CHECK(max_abs(Eigen::MatrixXd(lhs - rhs)) < 1e-9 * scale);
      }
    }
    for (int t = 0; t < 20; ++t) {
      Eigen::MatrixXcd a = bvlab::testing::random_complex_matrix(rng, 5, 5);
      Eigen::MatrixXcd b = bvlab::testing::random_complex_matrix(rng, 5, 5);
      Eigen::MatrixXcd lhs = compound(Eigen::MatrixXcd(a * b), 2);
      Eigen::MatrixXcd rhs = compound(a, 2) * compound(b, 2);
      double scale = std::max(1.0, max_abs(rhs));
      CHECK(max_abs(Eigen::MatrixXcd(lhs - rhs)) < 1e-9 * scale);
    }
  }

  SUBCASE("volume scaling") {
    // det of the order-2 compound of an n x n matrix is det^binom(n-1, 1).
    for (int t = 0; t < 10; ++t) {
      Eigen::MatrixXd b6 = bvlab::testing::random_real_matrix(rng, 6, 6);
      double d = b6.determinant();
      double lhs = compound(b6, 2).determinant();
      CHECK(lhs == doctest::Approx(std::pow(d, 5)).epsilon(1e-7));
      Eigen::MatrixXd b4 = bvlab::testing::random_real_matrix(rng, 4, 4);
      CHECK(compound(b4, 2).determinant() ==
            doctest::Approx(std::pow(b4.determinant(), 3)).epsilon(1e-7));
    }
  }
}

TEST_CASE("supplementary compounds") {
  std::mt19937_64 rng(7003);

  SUBCASE("order one is the adjugate") {
    Eigen::MatrixXd m(2, 2);
    m << 3.0, 1.0, -2.0, 5.0;
    Eigen::MatrixXd s = supplementary_compound(m, 1);
    Eigen::MatrixXd adj(2, 2);
    adj << 5.0, -1.0, 2.0, 3.0;
    CHECK(max_abs(Eigen::MatrixXd(s - adj)) < 1e-14);
  }

  SUBCASE("product with the compound is det times identity") {
    for (int n = 3; n <= 6; ++n)
      for (int k = 1; k < n; ++k)
        for (int t = 0; t < 5; ++t) {
          Eigen::MatrixXd m = bvlab::testing::random_real_matrix(rng, n, n);
          Eigen::MatrixXd prod = compound(m, k) * supplementary_compound(m, k);
          Eigen::MatrixXd expect =
              m.determinant() *
              Eigen::MatrixXd::Identity(prod.rows(), prod.cols());
          CHECK(max_abs(Eigen::MatrixXd(prod - expect)) <
                1e-9 * std::max(1.0, max_abs(expect)));
        }
  }

  SUBCASE("inverse-compound relation") {
    for (int t = 0; t < 20; ++t) {
      Eigen::MatrixXd m = bvlab::testing::random_real_matrix(rng, 6, 6);
      if (std::abs(m.determinant()) < 0.1) continue;
      for (int k = 2; k <= 4; ++k) {
        Eigen::MatrixXd lhs = compound(Eigen::MatrixXd(m.inverse()), k);
        Eigen::MatrixXd rhs = supplementary_compound(m, k) / m.determinant();
        CHECK(max_abs(Eigen::MatrixXd(lhs - rhs)) <
              1e-8 * std::max(1.0, max_abs(rhs)));
      }
    }
  }
}

TEST_CASE("complement re-indexing") {
  std::mt19937_64 rng(7004);

  SUBCASE("involution") {
    for (int k : {2, 4}) {
      int r = binom(6, k);
      Eigen::MatrixXd x = bvlab::testing::random_real_matrix(rng, r, r);
      Eigen::MatrixXd back = star(star(x, 6, k), 6, 6 - k);
      CHECK(max_abs(Eigen::MatrixXd(back - x)) < 1e-14);
    }
  }

  SUBCASE("supplementary compound via complements") {
    // supplementary(m, k) equals the complement re-indexing of the
    // (n-k)-compound of the transpose.
    for (int t = 0; t < 10; ++t) {
      Eigen::MatrixXd m = bvlab::testing::random_real_matrix(rng, 6, 6);
      for (int k = 1; k <= 5; ++k) {
        Eigen::MatrixXd lhs = supplementary_compound(m, k);
        Eigen::MatrixXd rhs =
            star(compound(Eigen::MatrixXd(m.transpose()), 6 - k), 6, 6 - k);
        CHECK(max_abs(Eigen::MatrixXd(lhs - rhs)) <
              1e-10 * std::max(1.0, max_abs(lhs)));
      }
    }
  }

  SUBCASE("shape guard") {
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(14, 14);
    CHECK_THROWS_AS(star(x, 6, 2), BadOrder);
  }
}

TEST_CASE("pfaffians") {
  std::mt19937_64 rng(7005);

  SUBCASE("canonical block form") {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(6, 6);
    a(0, 1) = 2.0;
    a(1, 0) = -2.0;
    a(2, 3) = -3.0;
    a(3, 2) = 3.0;
    a(4, 5) = 7.0;
    a(5, 4) = -7.0;
    CHECK(pfaffian(a) == doctest::Approx(2.0 * -3.0 * 7.0));
  }

  SUBCASE("squared pfaffian is the determinant") {
    for (int n : {2, 4, 6}) {
      for (int t = 0; t < 50; ++t) {
        Eigen::MatrixXd a = bvlab::testing::random_antisym(rng, n);
        double p = pfaffian(a);
        CHECK(p * p ==
              doctest::Approx(a.determinant())
                  .epsilon(1e-9));
        Eigen::MatrixXcd ac = bvlab::testing::random_antisym_c(rng, n);
        cplx pc = pfaffian(ac);
        cplx d = ac.determinant();
        CHECK(std::abs(pc * pc - d) < 1e-9 * std::max(1.0, std::abs(d)));
      }
    }
  }

  SUBCASE("odd dimension vanishes") {
    Eigen::MatrixXd a = bvlab::testing::random_antisym(rng, 5);
    CHECK(pfaffian(a) == 0.0);
  }

  SUBCASE("rejects non-antisymmetric input") {
    Eigen::MatrixXd m = bvlab::testing::random_real_matrix(rng, 4, 4);
    m(0, 0) = 1.0;
    CHECK_THROWS_AS(pfaffian(m), NotAntisymmetric);
  }
}

TEST_CASE("quadratic pfaffian minor map") {
  std::mt19937_64 rng(7006);

  SUBCASE("companion property") {
    for (int t = 0; t < 50; ++t) {
      Mat6d a = bvlab::testing::random_antisym(rng, 6);
      Mat6d p = pfaffian_compound(a);
      double pf = pfaffian(Eigen::MatrixXd(a));
      CHECK(max_abs(Eigen::MatrixXd(a * p - pf * Mat6d::Identity())) <
            1e-10 * std::max(1.0, std::abs(pf)));
      CHECK(max_abs(Eigen::MatrixXd(p * a - pf * Mat6d::Identity())) <
            1e-10 * std::max(1.0, std::abs(pf)));
      CHECK(max_abs(Eigen::MatrixXd(p + p.transpose())) < 1e-12);
    }
  }

  SUBCASE("square and inverse-free closed forms") {
    for (int t = 0; t < 50; ++t) {
      Mat6d a = bvlab::testing::random_antisym(rng, 6);
      Mat6d p = pfaffian_compound(a);
      double tr2 = (a * a).trace();
      double tr4 = (a * a * a * a).trace();
      Mat6d lhs = p * p;
      Mat6d rhs = -0.25 * (0.5 * tr2 * tr2 - tr4) * Mat6d::Identity() +
                  0.5 * tr2 * a * a - a * a * a * a;
      CHECK(max_abs(Eigen::MatrixXd(lhs - rhs)) <
            1e-10 * std::max(1.0, max_abs(rhs)));

      double pf = pfaffian(Eigen::MatrixXd(a));
      if (std::abs(pf) > 1e-3) {
        Mat6d rhs2 = -(a / pf) * (0.25 * (0.5 * tr2 * tr2 - tr4) *
                                      Mat6d::Identity() -
                                  0.5 * tr2 * a * a + a * a * a * a);
        CHECK(max_abs(Eigen::MatrixXd(p - rhs2)) <
              1e-9 * std::max(1.0, max_abs(p)));
      }
    }
    // Complex variant of the companion property.
    for (int t = 0; t < 10; ++t) {
      Mat6c a = bvlab::testing::random_antisym_c(rng, 6);
      Mat6c p = pfaffian_compound(a);
      cplx pf = pfaffian(Eigen::MatrixXcd(a));
      CHECK(max_abs(Eigen::MatrixXcd(a * p - pf * Mat6c::Identity())) <
            1e-10 * std::max(1.0, std::abs(pf)));
    }
  }

  SUBCASE("rejects non-antisymmetric input") {
    Mat6d m = Mat6d::Identity();
    CHECK_THROWS_AS(pfaffian_compound(m), NotAntisymmetric);
  }
}
