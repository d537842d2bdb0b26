#include "ljsep/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ljsep {

Quadrature gauss_legendre(int points) {
  if (points < 1) throw std::invalid_argument("gauss_legendre: need at least one point");
  Quadrature q{Eigen::VectorXd(points), Eigen::VectorXd(points)};
  for (int i = 0; i < points; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (points + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= points; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = points * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    q.nodes[i] = 0.5 * (1.0 - x);
    q.weights[i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
  return q;
}

double integrate(const Eigen::VectorXd& f) {
  const Eigen::Index m = f.size() - 1;
  if (m < 1) throw std::invalid_argument("integrate: need at least two nodes");
  const double h = 1.0 / static_cast<double>(m);
  if (m % 2 != 0) return h * (f.sum() - 0.5 * (f[0] + f[m]));
  double s = f[0] + f[m];
  for (Eigen::Index i = 1; i < m; ++i) s += (i % 2 ? 4.0 : 2.0) * f[i];
  return s * h / 3.0;
}

Eigen::VectorXd product_weights(const std::function<double(double)>& f, int grid, int points, int stencil) {
  if (grid < stencil - 1) throw std::invalid_argument("product_weights: grid smaller than the stencil");
  const Quadrature rule = gauss_legendre(points);
  const double h = 1.0 / grid;
  Eigen::VectorXd w = Eigen::VectorXd::Zero(grid + 1);
  for (int cell = 0; cell < grid; ++cell) {
    // Stencil centred on the cell, shifted inwards at the ends.
    const int first = std::clamp(cell - (stencil / 2 - 1), 0, grid + 1 - stencil);
    for (Eigen::Index q = 0; q < rule.nodes.size(); ++q) {
      const double u = (cell + rule.nodes[q]) * h;
      const double fw = f(u) * rule.weights[q] * h;
      if (fw == 0.0) continue;
      const double s = u / h - first;  // position in stencil units
      for (int a = 0; a < stencil; ++a) {
        double l = 1.0;
        for (int b = 0; b < stencil; ++b)
          if (b != a) l *= (s - b) / static_cast<double>(a - b);
        w[first + a] += fw * l;
      }
    }
  }
  return w;
}

}  // namespace ljsep
