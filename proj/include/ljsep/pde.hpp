#ifndef LJSEP_PDE_HPP
#define LJSEP_PDE_HPP

#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "ljsep/lattice.hpp"
#include "ljsep/quadrature.hpp"
#include "ljsep/regime.hpp"

namespace ljsep {

using Profile = std::function<double(double)>;

/// Values on the nodes u_i = i/M, i = 0..M.
struct DensityProfile {
  RegimeSelection regime;
  double time = 0.0;
  Eigen::VectorXd values;

  int intervals() const { return static_cast<int>(values.size()) - 1; }
  double node(int i) const { return static_cast<double>(i) / intervals(); }
  BoundaryKind boundary() const { return regime.boundary(); }
};

/// Every time level of one solve, times[0] = 0.
struct ProfileTrajectory {
  RegimeSelection regime;
  std::vector<double> times;
  std::vector<Eigen::VectorXd> values;

  DensityProfile at(std::size_t k) const { return {regime, times[k], values[k]}; }
  DensityProfile back() const { return at(times.size() - 1); }
};

enum class TimeScheme { backward_euler, bdf2 };

struct SolverOptions {
  int grid = 256;
  double dt = 1e-3;
  /// bdf2 starts with one backward Euler step.
  TimeScheme scheme = TimeScheme::backward_euler;
};

/// Explicit solution of d/dt rho = kappa (V0 - V1 rho) at the interior nodes;
/// the endpoints carry alpha and beta.
DensityProfile solve_reaction(const Profile& g, double alpha, double beta, double kappa, double t, int grid = 256);

/// Finite differences for every regime (the reaction regime uses the explicit
/// formula at each step).
ProfileTrajectory solve_trajectory(const RegimeSelection& regime, const Profile& g, double t,
                                   const SolverOptions& options = {});
DensityProfile solve_parabolic(const RegimeSelection& regime, const Profile& g, double t,
                               const SolverOptions& options = {});

double pairing(const DensityProfile& rho, const TestFunction& g);
double mass(const DensityProfile& rho);

enum class WeakForm { reaction, dirichlet, robin };

/// Weak formulation evaluated on the stored levels up to time t (which must be
/// one of them): Simpson in space, trapezoid in time. Throws
/// std::invalid_argument when the test function class does not fit the form.
double weak_form_residual(WeakForm form, const ProfileTrajectory& rho, const Profile& g, const TestFunction& test,
                          double t);

/// Closed-form steady state. Neumann needs the conserved mass; Robin with
/// m_hat = 0 is treated as Neumann.
DensityProfile stationary_profile(const RegimeSelection& regime, int grid = 256,
                                  std::optional<double> mass = std::nullopt);

/// Rows "time,node,value".
void write_profile_rows(std::ostream& os, const DensityProfile& rho);

}  // namespace ljsep

#endif  // LJSEP_PDE_HPP
