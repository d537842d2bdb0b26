#ifndef LJSEP_REGIME_HPP
#define LJSEP_REGIME_HPP

#include <string>

namespace ljsep {

/// c2 and m of the infinite-volume kernel, computed once.
struct KernelConstants {
  double c2;
  double m;
};
const KernelConstants& kernel_constants();

enum class Equation { reaction, reaction_diffusion, dirichlet_heat, robin_heat, neumann_heat };
enum class BoundaryKind { dirichlet, robin, neumann, none };

std::string to_string(Equation e);
std::string to_string(BoundaryKind b);

/// Hydrodynamic equation attached to a reservoir exponent theta.
struct RegimeSelection {
  double theta = 0.0;
  Equation equation = Equation::dirichlet_heat;
  double c2_hat = 0.0;
  double kappa_hat = 0.0;
  double m_hat = 0.0;
  double alpha = 0.0;
  double beta = 0.0;

  BoundaryKind boundary() const;
  /// m_hat / c2_hat, the Robin coupling in d/du rho = ratio (rho - reservoir).
  double robin_ratio() const { return c2_hat > 0.0 ? m_hat / c2_hat : 0.0; }
};

/// theta < 0: reaction; theta = 0: reaction-diffusion; 0 < theta < 1: Dirichlet
/// heat; theta = 1: Robin heat with m_hat = kappa m; theta > 1: Neumann heat.
RegimeSelection select_regime(double theta, double kappa, double alpha, double beta);

}  // namespace ljsep

#endif  // LJSEP_REGIME_HPP
