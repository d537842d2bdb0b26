#include "ljsep/regime.hpp"

#include "ljsep/kernel.hpp"

namespace ljsep {

const KernelConstants& kernel_constants() {
  static const KernelConstants constants = [] {
    const KernelTable table(3);
    return KernelConstants{table.c2(), table.m()};
  }();
  return constants;
}

std::string to_string(Equation e) {
  switch (e) {
    case Equation::reaction: return "reaction";
    case Equation::reaction_diffusion: return "reaction-diffusion";
    case Equation::dirichlet_heat: return "dirichlet";
    case Equation::robin_heat: return "robin";
    case Equation::neumann_heat: return "neumann";
  }
  return "unknown";
}

std::string to_string(BoundaryKind b) {
  switch (b) {
    case BoundaryKind::dirichlet: return "dirichlet";
    case BoundaryKind::robin: return "robin";
    case BoundaryKind::neumann: return "neumann";
    case BoundaryKind::none: return "none";
  }
  return "none";
}

BoundaryKind RegimeSelection::boundary() const {
  switch (equation) {
    case Equation::reaction: return BoundaryKind::none;
    case Equation::reaction_diffusion:
    case Equation::dirichlet_heat: return BoundaryKind::dirichlet;
    case Equation::robin_heat: return BoundaryKind::robin;
    case Equation::neumann_heat: return BoundaryKind::neumann;
  }
  return BoundaryKind::none;
}

RegimeSelection select_regime(double theta, double kappa, double alpha, double beta) {
  const KernelConstants& k = kernel_constants();
  RegimeSelection r;
  r.theta = theta;
  r.alpha = alpha;
  r.beta = beta;
  if (theta < 0.0) {
    r.equation = Equation::reaction;
    r.kappa_hat = kappa;
  } else if (theta == 0.0) {
    r.equation = Equation::reaction_diffusion;
    r.kappa_hat = kappa;
    r.c2_hat = k.c2;
  } else if (theta < 1.0) {
    r.equation = Equation::dirichlet_heat;
    r.c2_hat = k.c2;
  } else if (theta == 1.0) {
    r.equation = Equation::robin_heat;
    r.c2_hat = k.c2;
    r.m_hat = kappa * k.m;
  } else {
    r.equation = Equation::neumann_heat;
    r.c2_hat = k.c2;
  }
  return r;
}

}  // namespace ljsep
