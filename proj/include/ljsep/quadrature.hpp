#ifndef LJSEP_QUADRATURE_HPP
#define LJSEP_QUADRATURE_HPP

#include <functional>

#include <Eigen/Core>

namespace ljsep {

/// Gauss-Legendre rule mapped to [0, 1].
struct Quadrature {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;

  template <typename F>
  double integrate(F&& f) const {
    double s = 0.0;
    for (Eigen::Index i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
    return s;
  }
};
Quadrature gauss_legendre(int points);

/// Composite Simpson over nodal values on [0, 1] for even M, trapezoid otherwise.
double integrate(const Eigen::VectorXd& nodal_values);

/// Nodal weights w with w . v = int_0^1 I[v](u) f(u) du, where I[v] is the
/// piecewise Lagrange interpolant (`stencil` nodes per cell, centred where
/// possible) of values v on u_i = i/M; each cell is
/// integrated with `points` Gauss nodes, so f enters only through interior
/// evaluations.
Eigen::VectorXd product_weights(const std::function<double(double)>& f, int grid, int points = 8, int stencil = 8);

}  // namespace ljsep

#endif  // LJSEP_QUADRATURE_HPP
