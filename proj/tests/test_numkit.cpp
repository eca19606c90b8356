#include "kfcl/numkit.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "test_util.hpp"

using namespace kfcl;

TEST_SUITE_BEGIN("numkit");

TEST_CASE("mat_exp of zero is the identity") {
  const Matrix e = mat_exp(Matrix::Zero(8, 8));
  CHECK((e - Matrix::Identity(8, 8)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("mat_exp matches the closed-form plane rotation") {
  const double t = std::numbers::pi / 3.0;
  Matrix j(2, 2);
  j << 0, -1, 1, 0;
  Matrix expected(2, 2);
  expected << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
  CHECK((mat_exp(t * j) - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("mat_exp inverse check on a random skew matrix") {
  RngStream rng(7);
  INFO("seed ", rng.seed());
  const Matrix a = testutil::random_skew(rng, 8);
  const Matrix e = mat_exp(a);
  // Independent route: solve with exp(-a) rather than transposing.
  CHECK((e * mat_exp(-a) - Matrix::Identity(8, 8)).cwiseAbs().maxCoeff() <
        1e-12);
}

TEST_CASE("exponentials of skew matrices are orthogonal") {
  RngStream rng(11);
  INFO("seed ", rng.seed());
  for (int size : {7, 8, 16}) {
    for (int trial = 0; trial < 100; ++trial) {
      const Matrix e = mat_exp(testutil::random_skew(rng, size));
      CHECK(testutil::orthogonality_defect(e) < 1e-12);
    }
  }
}

TEST_CASE("mat_exp rejects bad input") {
  CHECK_THROWS_AS(mat_exp(Matrix::Zero(3, 4)), std::invalid_argument);
  Matrix bad = Matrix::Zero(2, 2);
  bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(mat_exp(bad), std::invalid_argument);
}

TEST_CASE("rank_tol basics") {
  auto vec2 = [](double a, double b) {
    Vector v(2);
    v << a, b;
    return v;
  };
  CHECK(rank_tol({vec2(1, 0), vec2(0, 1), vec2(1, 1)}) == 2);
  CHECK(rank_tol({}) == 0);
  CHECK(rank_tol({vec2(0, 0)}) == 0);
  Vector three(3);
  three << 1, 2, 3;
  CHECK_THROWS_AS(rank_tol({vec2(1, 0), three}), std::invalid_argument);
  CHECK_THROWS_AS(rank_tol({vec2(1, 0)}, 0.0), std::invalid_argument);
}

TEST_CASE("rank_tol ignores permutations and benign scalings") {
  RngStream rng(23);
  INFO("seed ", rng.seed());
  std::vector<Vector> vectors;
  for (int k = 0; k < 5; ++k) vectors.push_back(rng.gaussian_vector(12));
  vectors.push_back(vectors[0] + vectors[1]);  // dependent
  const int reference = rank_tol(vectors);
  CHECK(reference == 5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vector> scrambled = vectors;
    for (Vector& v : scrambled) {
      v *= std::pow(10.0, rng.uniform(-3.0, 3.0));
    }
    for (std::size_t k = scrambled.size(); k > 1; --k) {
      const auto other = static_cast<std::size_t>(rng.uniform(0.0, double(k)));
      std::swap(scrambled[k - 1], scrambled[other]);
    }
    CHECK(rank_tol(scrambled) == reference);
  }
}

TEST_CASE("lstsq identity and consistent systems") {
  RngStream rng(3);
  const Vector y = rng.gaussian_vector(6);
  const LstsqResult r = lstsq(Matrix::Identity(6, 6), y);
  CHECK((r.x - y).norm() < 1e-14);
  CHECK(r.residual < 1e-14);

  // Overdetermined but consistent.
  Matrix a(8, 3);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = rng.normal();
  const Vector x0 = rng.gaussian_vector(3);
  const LstsqResult c = lstsq(a, a * x0);
  CHECK(c.residual < 1e-12);
}

TEST_CASE("lstsq circle fit agrees with the normal equations") {
  RngStream rng(31);
  INFO("seed ", rng.seed());
  // 200 noisy points near a circle; fit x^2 + y^2 = a x + b y + c.
  const int n = 200;
  Matrix a(n, 3);
  Vector y(n);
  for (int i = 0; i < n; ++i) {
    const double t = rng.uniform(0, 2 * std::numbers::pi);
    const double px = 1.5 + 2.0 * std::cos(t) + 0.01 * rng.normal();
    const double py = -0.5 + 2.0 * std::sin(t) + 0.01 * rng.normal();
    a.row(i) << px, py, 1.0;
    y(i) = px * px + py * py;
  }
  const LstsqResult cod = lstsq(a, y);
  const Vector normal_x =
      (a.transpose() * a).ldlt().solve(a.transpose() * y);
  const double normal_residual = (a * normal_x - y).norm();
  CHECK(std::abs(cod.residual - normal_residual) < 1e-10);
  CHECK((cod.x - normal_x).norm() < 1e-8);
}

TEST_CASE("lstsq residual never beats the zero vector") {
  RngStream rng(47);
  INFO("seed ", rng.seed());
  for (int trial = 0; trial < 50; ++trial) {
    Matrix a(5, 7);  // rank deficient on purpose
    for (int i = 0; i < a.size(); ++i) a(i / 7, i % 7) = rng.normal();
    const Vector y = rng.gaussian_vector(5);
    CHECK(lstsq(a, y).residual <= y.norm() + 1e-12);
  }
}

TEST_CASE("RngStream reproduces its sequence") {
  RngStream a(123), b(123), c(124);
  bool same = true, different = false;
  for (int i = 0; i < 100; ++i) {
    const double va = a.unit();
    same = same && (va == b.unit());
    different = different || (va != c.unit());
  }
  CHECK(same);
  CHECK(different);
}

TEST_CASE("RngStream variates are in range") {
  RngStream rng(5);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.uniform(-2.0, 3.0);
    CHECK(u >= -2.0);
    CHECK(u < 3.0);
  }
  CHECK(std::abs(rng.sphere_point(9).norm() - 1.0) < 1e-14);
}

TEST_SUITE_END();
