#include <doctest.h>

#include <cmath>

#include "ljsep/exact.hpp"
#include "ljsep/linalg.hpp"

using namespace ljsep;

namespace {

ExclusionModel model(int n, double theta, double alpha, double beta) {
  ModelParams p;
  p.n = n;
  p.theta = theta;
  p.alpha = alpha;
  p.beta = beta;
  return ExclusionModel(p);
}

}  // namespace

TEST_CASE("generator structure") {
  for (double theta : {-0.5, 0.0, 1.0}) {
    const Eigen::MatrixXd q = exact_generator_matrix(model(6, theta, 0.2, 0.9));
    CHECK(q.rows() == 32);
    CHECK(q.rowwise().sum().cwiseAbs().maxCoeff() < 1e-9 * q.cwiseAbs().maxCoeff());
    for (int i = 0; i < 32; ++i)
      for (int j = 0; j < 32; ++j)
        if (i != j) CHECK(q(i, j) >= 0.0);
  }
  CHECK_THROWS_AS(exact_generator_matrix(model(13, 0.5, 0.5, 0.5)), std::invalid_argument);
}

TEST_CASE("exchange rates are symmetric") {
  // Reservoir-free part: swapping eta and its image under sigma^{x,y} has equal rates.
  const Eigen::MatrixXd q = exact_generator_matrix(model(5, 0.5, 0.0, 0.0));
  const Eigen::MatrixXd q2 = exact_generator_matrix(model(5, 0.5, 1.0, 1.0));
  // alpha = beta = 0 and 1 differ only in flip directions; swap entries agree.
  const Eigen::Index s = q.rows();
  for (Eigen::Index i = 0; i < s; ++i)
    for (Eigen::Index j = 0; j < s; ++j) {
      const auto diff = static_cast<std::uint64_t>(i ^ j);
      if (i != j && __builtin_popcountll(diff) == 2 && __builtin_popcountll(static_cast<std::uint64_t>(i) & diff) == 1) {
        CHECK(q(i, j) == doctest::Approx(q(j, i)));
        CHECK(q(i, j) == doctest::Approx(q2(i, j)));
      }
    }
}

TEST_CASE("product measures and densities") {
  const auto profile = [](double u) { return 0.2 + 0.5 * u; };
  const Eigen::VectorXd p = product_measure_vector(7, profile);
  CHECK(p.sum() == doctest::Approx(1.0));
  const Eigen::VectorXd d = site_densities(7, p);
  for (int x = 1; x < 7; ++x) CHECK(d[x - 1] == doctest::Approx(profile(x / 7.0)));
}

TEST_CASE("evolution preserves probability and relaxes to the stationary law") {
  const Eigen::MatrixXd q = exact_generator_matrix(model(5, 0.5, 0.3, 0.3));
  const Eigen::VectorXd p0 = product_measure_vector(5, [](double u) { return u; });
  CHECK((evolve_law(q, p0, 0.0) - p0).cwiseAbs().maxCoeff() < 1e-15);
  const Eigen::VectorXd pt = evolve_law(q, p0, 0.3);
  CHECK(pt.sum() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pt.minCoeff() > -1e-14);
  const Eigen::VectorXd late = site_densities(5, evolve_law(q, p0, 50.0));
  for (int x = 0; x < 4; ++x) CHECK(late[x] == doctest::Approx(0.3).epsilon(1e-6));
}

TEST_CASE("expm and tridiagonal solver") {
  Eigen::Matrix2d a;
  a << 0.0, 1.0, -1.0, 0.0;
  const Eigen::MatrixXd e = expm(a * 2.0);
  CHECK(e(0, 0) == doctest::Approx(std::cos(2.0)));
  CHECK(e(0, 1) == doctest::Approx(std::sin(2.0)));
  Eigen::VectorXd lo(3), di(3), up(3), rhs(3);
  lo << 0, 1, 1;
  di << 4, 4, 4;
  up << 1, 1, 0;
  rhs << 5, 6, 5;
  const Eigen::VectorXd x = solve_tridiagonal<double>(lo, di, up, rhs);
  CHECK((x.array() - 1.0).abs().maxCoeff() < 1e-14);
  di[0] = 0.0;
  CHECK_THROWS(solve_tridiagonal<double>(lo, di, up, rhs));
}

TEST_CASE("detailed balance for equal reservoir densities") {
  for (double theta : {-0.5, 0.0, 1.0, 2.0}) {
    const Eigen::MatrixXd q = exact_generator_matrix(model(8, theta, 0.35, 0.35));
    const Eigen::VectorXd pi = product_measure_vector(8, [](double) { return 0.35; });
    const Eigen::MatrixXd flux = pi.asDiagonal() * q;
    const double scale = flux.cwiseAbs().maxCoeff();
    CHECK((flux - flux.transpose()).cwiseAbs().maxCoeff() <= 1e-10 * scale);
  }
}
