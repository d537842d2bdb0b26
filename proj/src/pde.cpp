#include "ljsep/pde.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "ljsep/csv.hpp"
#include "ljsep/kernel.hpp"
#include "ljsep/linalg.hpp"

namespace ljsep {

namespace {

void check_grid(int grid) {
  if (grid < 32) throw std::invalid_argument("pde: grid must have at least 32 intervals");
}

Eigen::VectorXd sample(const Profile& g, int grid) {
  Eigen::VectorXd v(grid + 1);
  for (int i = 0; i <= grid; ++i) v[i] = g(static_cast<double>(i) / grid);
  return v;
}

double reaction_value(double g0, const Potentials& p, double kappa, double t) {
  const double fixed = p.v0 / p.v1;
  return fixed + (g0 - fixed) * std::exp(-kappa * p.v1 * t);
}

// Semi-discrete operator d/dt x = A x + b on the unknowns, A tridiagonal.
struct Operator {
  Eigen::VectorXd lower, diag, upper, b;
  int first = 0;  // node index of unknown 0

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const {
    Eigen::VectorXd y = diag.cwiseProduct(x) + b;
    const Eigen::Index n = x.size();
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i > 0) y[i] += lower[i] * x[i - 1];
      if (i + 1 < n) y[i] += upper[i] * x[i + 1];
    }
    return y;
  }
};

Operator assemble(const RegimeSelection& r, int grid) {
  const double h = 1.0 / grid;
  const double c = r.c2_hat / (h * h);
  Operator op;
  const BoundaryKind bc = r.boundary();
  if (bc == BoundaryKind::dirichlet) {
    const int n = grid - 1;
    op.first = 1;
    op.lower = Eigen::VectorXd::Constant(n, c);
    op.upper = Eigen::VectorXd::Constant(n, c);
    op.diag = Eigen::VectorXd::Constant(n, -2.0 * c);
    op.b = Eigen::VectorXd::Zero(n);
    op.b[0] += c * r.alpha;
    op.b[n - 1] += c * r.beta;
    if (r.equation == Equation::reaction_diffusion) {
      const double c2 = kernel_constants().c2;
      for (int i = 0; i < n; ++i) {
        const Potentials p = continuum_potentials((i + 1) * h, r.alpha, r.beta, c2);
        op.diag[i] -= r.kappa_hat * p.v1;
        op.b[i] += r.kappa_hat * p.v0;
      }
    }
    return op;
  }
  // Robin and Neumann: ghost nodes rho_{-1} = rho_1 - 2hk(rho_0 - alpha),
  // rho_{M+1} = rho_{M-1} - 2hk(rho_M - beta).
  const int n = grid + 1;
  const double k = r.robin_ratio();
  op.lower = Eigen::VectorXd::Constant(n, c);
  op.upper = Eigen::VectorXd::Constant(n, c);
  op.diag = Eigen::VectorXd::Constant(n, -2.0 * c);
  op.b = Eigen::VectorXd::Zero(n);
  op.upper[0] = 2.0 * c;
  op.lower[n - 1] = 2.0 * c;
  op.diag[0] -= 2.0 * c * h * k;
  op.diag[n - 1] -= 2.0 * c * h * k;
  op.b[0] = 2.0 * c * h * k * r.alpha;
  op.b[n - 1] = 2.0 * c * h * k * r.beta;
  return op;
}

ProfileTrajectory reaction_trajectory(const RegimeSelection& r, const Profile& g, int grid,
                                      const std::vector<double>& times) {
  ProfileTrajectory traj{r, times, {}};
  const Eigen::VectorXd g0 = sample(g, grid);
  std::vector<Potentials> pot(grid + 1);
  for (int i = 1; i < grid; ++i)
    pot[i] = continuum_potentials(static_cast<double>(i) / grid, r.alpha, r.beta, kernel_constants().c2);
  for (double t : times) {
    Eigen::VectorXd v = g0;
    if (t > 0.0) {
      v[0] = r.alpha;
      v[grid] = r.beta;
      for (int i = 1; i < grid; ++i) v[i] = reaction_value(g0[i], pot[i], r.kappa_hat, t);
    }
    traj.values.push_back(std::move(v));
  }
  return traj;
}

}  // namespace

DensityProfile solve_reaction(const Profile& g, double alpha, double beta, double kappa, double t, int grid) {
  if (t < 0.0) throw std::invalid_argument("solve_reaction: t must be non-negative");
  check_grid(grid);
  RegimeSelection r = select_regime(-1.0, kappa, alpha, beta);
  return reaction_trajectory(r, g, grid, {t}).back();
}

ProfileTrajectory solve_trajectory(const RegimeSelection& regime, const Profile& g, double t,
                                   const SolverOptions& options) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("solve: t must be finite and non-negative");
  if (!(options.dt > 0.0)) throw std::invalid_argument("solve: dt must be positive");
  const int grid = options.grid;
  check_grid(grid);
  const long steps = t > 0.0 ? std::max(1L, static_cast<long>(std::ceil(t / options.dt - 1e-9))) : 0L;
  const double dt = steps > 0 ? t / steps : 0.0;
  std::vector<double> times(static_cast<std::size_t>(steps) + 1);
  for (long s = 0; s <= steps; ++s) times[s] = s == steps ? t : s * dt;

  if (regime.equation == Equation::reaction) return reaction_trajectory(regime, g, grid, times);

  const Operator op = assemble(regime, grid);
  const Eigen::Index n = op.diag.size();
  const bool dirichlet = regime.boundary() == BoundaryKind::dirichlet;

  ProfileTrajectory traj{regime, times, {}};
  traj.values.reserve(times.size());
  Eigen::VectorXd full = sample(g, grid);
  traj.values.push_back(full);

  Eigen::VectorXd previous;
  Eigen::VectorXd current = full.segment(op.first, n);
  for (long s = 1; s <= steps; ++s) {
    const bool bdf2 = options.scheme == TimeScheme::bdf2 && s > 1;
    const double lead = bdf2 ? 1.5 : 1.0;
    Eigen::VectorXd rhs = bdf2 ? Eigen::VectorXd(2.0 * current - 0.5 * previous) : current;
    rhs += dt * op.b;
    const Eigen::VectorXd next =
        solve_tridiagonal<double>(-dt * op.lower, Eigen::VectorXd(lead - dt * op.diag.array()), -dt * op.upper, rhs);
    previous = std::move(current);
    current = next;
    full.segment(op.first, n) = current;
    if (dirichlet) {
      full[0] = regime.alpha;
      full[grid] = regime.beta;
    }
    traj.values.push_back(full);
  }
  return traj;
}

DensityProfile solve_parabolic(const RegimeSelection& regime, const Profile& g, double t, const SolverOptions& options) {
  return solve_trajectory(regime, g, t, options).back();
}

double pairing(const DensityProfile& rho, const TestFunction& g) {
  Eigen::VectorXd f(rho.values.size());
  for (int i = 0; i <= rho.intervals(); ++i) f[i] = rho.values[i] * g(rho.node(i));
  return integrate(f);
}

double mass(const DensityProfile& rho) {
  // Trapezoid weights: the quantity the Neumann scheme conserves exactly.
  const Eigen::VectorXd& v = rho.values;
  return (v.sum() - 0.5 * (v[0] + v[v.size() - 1])) / rho.intervals();
}

double weak_form_residual(WeakForm form, const ProfileTrajectory& rho, const Profile& g, const TestFunction& test,
                          double t) {
  const TestClass cls = test.test_class();
  const RegimeSelection& r = rho.regime;
  switch (form) {
    case WeakForm::reaction:
      if (cls != TestClass::compact_support)
        throw std::invalid_argument("weak_form_residual: reaction form needs a compactly supported test function");
      break;
    case WeakForm::dirichlet:
      if (cls != TestClass::dirichlet && cls != TestClass::compact_support)
        throw std::invalid_argument("weak_form_residual: Dirichlet form needs G(0) = G(1) = 0");
      break;
    case WeakForm::robin: {
      const bool admissible = (cls == TestClass::robin || cls == TestClass::neumann) &&
                              std::abs(test.robin_ratio() - r.robin_ratio()) <= 1e-9 * std::max(1.0, r.robin_ratio());
      if (!admissible)
        throw std::invalid_argument("weak_form_residual: Robin form needs a test function with the regime's ratio");
      break;
    }
  }

  std::size_t last = rho.times.size();
  for (std::size_t k = 0; k < rho.times.size(); ++k)
    if (std::abs(rho.times[k] - t) <= 1e-9 * std::max(1.0, t)) last = k;
  if (last == rho.times.size()) throw std::invalid_argument("weak_form_residual: t is not a stored time level");

  // Product quadrature: the nodal field is interpolated piecewise and
  // integrated against the analytic test function on Gauss points, so narrow
  // test functions do not add a quadrature error of their own.
  const int grid = static_cast<int>(rho.values.front().size()) - 1;
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(grid + 1);
  const Eigen::VectorXd w_value = product_weights([&](double u) { return test(u); }, grid);
  const Eigen::VectorXd w_curv = product_weights([&](double u) { return test.second_derivative(u); }, grid);
  const double initial = product_weights([&](double u) { return g(u) * test(u); }, grid).dot(ones);
  Eigen::VectorXd w_v1 = Eigen::VectorXd::Zero(grid + 1);
  double source = 0.0;
  if (form == WeakForm::reaction) {
    const double c2 = kernel_constants().c2;
    w_v1 = product_weights(
        [&](double u) { return test(u) * continuum_potentials(u, r.alpha, r.beta, c2).v1; }, grid);
    source = product_weights(
                 [&](double u) { return test(u) * continuum_potentials(u, r.alpha, r.beta, c2).v0; }, grid)
                 .dot(ones);
  }

  // Time integrand at level k.
  auto bulk = [&](std::size_t k) {
    const Eigen::VectorXd& v = rho.values[k];
    double s = -r.c2_hat * w_curv.dot(v);
    if (form == WeakForm::reaction) s -= r.kappa_hat * (source - w_v1.dot(v));
    return s;
  };
  double time_integral = 0.0;
  double left = bulk(0);
  for (std::size_t k = 1; k <= last; ++k) {
    const double right = bulk(k);
    time_integral += 0.5 * (rho.times[k] - rho.times[k - 1]) * (left + right);
    left = right;
  }

  double f = w_value.dot(rho.values[last]) - initial + time_integral;
  const double tl = rho.times[last];
  if (form == WeakForm::dirichlet)
    f += r.c2_hat * tl * (r.beta * test.derivative(1.0) - r.alpha * test.derivative(0.0));
  if (form == WeakForm::robin) f -= r.m_hat * tl * (r.alpha * test(0.0) + r.beta * test(1.0));
  return f;
}

DensityProfile stationary_profile(const RegimeSelection& regime, int grid, std::optional<double> mass_value) {
  check_grid(grid);
  DensityProfile out{regime, std::numeric_limits<double>::infinity(), Eigen::VectorXd(grid + 1)};
  const double a = regime.alpha;
  const double b = regime.beta;
  auto fill = [&](auto f) {
    for (int i = 0; i <= grid; ++i) out.values[i] = f(static_cast<double>(i) / grid);
  };
  switch (regime.equation) {
    case Equation::reaction: {
      const double c2 = kernel_constants().c2;
      fill([&](double u) {
        if (u <= 0.0) return a;
        if (u >= 1.0) return b;
        const Potentials p = continuum_potentials(u, a, b, c2);
        return p.v0 / p.v1;
      });
      return out;
    }
    case Equation::reaction_diffusion:
      throw std::invalid_argument("stationary_profile: no closed form for the reaction-diffusion regime");
    case Equation::dirichlet_heat:
      fill([&](double u) { return a + (b - a) * u; });
      return out;
    case Equation::robin_heat:
      if (regime.m_hat > 0.0) {
        const double slope = regime.m_hat * (b - a) / (regime.m_hat + 2.0 * regime.c2_hat);
        const double start = a + slope * regime.c2_hat / regime.m_hat;
        fill([&](double u) { return start + slope * u; });
        return out;
      }
      out.regime.equation = Equation::neumann_heat;
      [[fallthrough]];
    case Equation::neumann_heat:
      if (!mass_value) throw std::invalid_argument("stationary_profile: Neumann steady state needs the initial mass");
      out.values.setConstant(*mass_value);
      return out;
  }
  return out;
}

void write_profile_rows(std::ostream& os, const DensityProfile& rho) {
  for (int i = 0; i <= rho.intervals(); ++i) write_row(os, rho.time, rho.node(i), rho.values[i]);
}

}  // namespace ljsep
