#ifndef LJSEP_SPECTRAL_HPP
#define LJSEP_SPECTRAL_HPP

#include <iosfwd>
#include <vector>

#include <Eigen/Core>

#include "ljsep/lattice.hpp"
#include "ljsep/pde.hpp"
#include "ljsep/quadrature.hpp"

namespace ljsep {

/// psi_n(u) = coeff_a sin(lambda_tilde u) + coeff_b cos(lambda_tilde u),
/// an L2-normalized eigenfunction of c2_hat psi'' + lambda psi = 0 with
/// psi'(0) = k psi(0), psi'(1) = -k psi(1), k = m_hat / c2_hat.
struct EigenPair {
  int index = 0;
  double lambda_tilde = 0.0;
  double lambda = 0.0;
  double coeff_a = 0.0;
  double coeff_b = 0.0;
  double norm_b = 0.0;
  double ratio = 0.0;
};

/// Positive roots of (x^2 - k^2) sin x - 2 k x cos x, the pole-free form of
/// tan x = 2 k x / (x^2 - k^2). For k = 0 the roots are n pi exactly.
std::vector<double> robin_eigenfrequencies(double m_hat, double c2_hat, int count);

/// |tan x - 2 m c x / (x^2 c^2 - m^2)|
double transcendental_residual(double lambda_tilde, double m_hat, double c2_hat);

std::vector<EigenPair> robin_eigenpairs(double m_hat, double c2_hat, int count);

/// Derivative of the given order (0, 1 or 2) of psi_n at u.
double eigenfunction(const EigenPair& pair, double u, int order = 0);

/// psi_n as a test function of the Robin class (Neumann when k = 0).
TestFunction robin_mode(const EigenPair& pair);


/// <f, psi_n> for n = 1..n_max.
Eigen::VectorXd expansion_coefficients(const std::function<double(double)>& f, const std::vector<EigenPair>& pairs,
                                       int n_max, const Quadrature& rule);

/// V = sum_{n <= n_max} <rho_bar, psi_n>^2, Simpson on the profile nodes.
double lyapunov_V(const DensityProfile& rho_bar, const std::vector<EigenPair>& pairs, int n_max);

/// Rows "n,lambda_tilde,lambda,A,B".
void write_eigen_rows(std::ostream& os, const std::vector<EigenPair>& pairs);

}  // namespace ljsep

#endif  // LJSEP_SPECTRAL_HPP
