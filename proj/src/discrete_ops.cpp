#include "ljsep/discrete_ops.hpp"

#include <cmath>
#include <stdexcept>

namespace ljsep {

namespace {

Eigen::VectorXd distance_probs(const KernelTable& kernel) {
  Eigen::VectorXd p(kernel.n());
  for (int d = 0; d < kernel.n(); ++d) p[d] = kernel.prob(d);
  return p;
}

}  // namespace

Eigen::VectorXd discrete_generator(const TestFunction& g, const KernelTable& kernel) {
  const int n = kernel.n();
  const Eigen::VectorXd gv = g.on_lattice(n);
  const Eigen::VectorXd p = distance_probs(kernel);
  Eigen::VectorXd out(n - 1);
  for (int i = 0; i < n - 1; ++i) {
    double s = 0.0;
    for (int j = 0; j < i; ++j) s += (gv[j] - gv[i]) * p[i - j];
    for (int j = i + 1; j < n - 1; ++j) s += (gv[j] - gv[i]) * p[j - i];
    out[i] = s;
  }
  return out;
}

Eigen::VectorXd discrete_drift(const KernelTable& kernel) {
  const int n = kernel.n();
  // sum_{y=1}^{N-1} (y-x) p(y-x) = sum_{d=1}^{N-1-x} d p(d) - sum_{d=1}^{x-1} d p(d)
  Eigen::VectorXd cumulative = Eigen::VectorXd::Zero(n);
  for (int d = 1; d < n; ++d) cumulative[d] = cumulative[d - 1] + d * kernel.prob(d);
  Eigen::VectorXd out(n - 1);
  for (int x = 1; x < n; ++x) out[x - 1] = cumulative[n - 1 - x] - cumulative[x - 1];
  return out;
}

double l1conv_residual(const TestFunction& g, const KernelTable& kernel) {
  const int n = kernel.n();
  const double nd = n;
  const double log_n = std::log(nd);
  const Eigen::VectorXd lg = discrete_generator(g, kernel);
  const Eigen::VectorXd drift = discrete_drift(kernel);
  double sup = 0.0;
  for (int x = 1; x < n; ++x) {
    const double u = x / nd;
    const double r = nd * nd / log_n * lg[x - 1] - kernel.c2() * g.second_derivative(u) -
                     g.derivative(u) * nd / log_n * drift[x - 1];
    sup = std::max(sup, std::abs(r));
  }
  return sup;
}

double theta_sum_residual(const KernelTable& kernel) { return std::abs(kernel.scaled_theta_sum() - kernel.c2()); }

double DriftDecomposition::bulk(const Configuration& config) const {
  double s = 0.0;
  for (int x = 1; x < config.n(); ++x)
    if (config.occupied(x)) s += bulk_term[x - 1];
  return s;
}

double DriftDecomposition::reservoir(const Configuration& config) const {
  double s = alpha * coefficient_alpha.sum() + beta * coefficient_beta.sum();
  for (int x = 1; x < config.n(); ++x)
    if (config.occupied(x)) s += coefficient_eta[x - 1];
  return s;
}

DriftDecomposition drift_decomposition(const TestFunction& g, const ExclusionModel& model) {
  const int n = model.n();
  const KernelTable& kernel = model.kernel();
  const double scale = model.time_scale();
  DriftDecomposition d;
  d.alpha = model.params().alpha;
  d.beta = model.params().beta;
  d.bulk_term = scale / (n - 1) * discrete_generator(g, kernel);
  const double k = model.reservoir_prefactor() * scale / (n - 1);
  d.coefficient_alpha.resize(n - 1);
  d.coefficient_beta.resize(n - 1);
  d.coefficient_eta.resize(n - 1);
  for (int x = 1; x < n; ++x) {
    const double gx = g(static_cast<double>(x) / n);
    d.coefficient_alpha[x - 1] = k * gx * kernel.tail_left(x);
    d.coefficient_beta[x - 1] = k * gx * kernel.tail_right(x);
    d.coefficient_eta[x - 1] = -k * gx * (kernel.tail_left(x) + kernel.tail_right(x));
  }
  return d;
}

namespace {

// w_x = G'(x/N) Theta_x^- / log N, entry x-1
Eigen::VectorXd replacement_weights(const TestFunction& g, const KernelTable& kernel) {
  const int n = kernel.n();
  Eigen::VectorXd w(n - 1);
  const double log_n = std::log(static_cast<double>(n));
  for (int x = 1; x < n; ++x) w[x - 1] = g.derivative(static_cast<double>(x) / n) * kernel.theta_minus(x) / log_n;
  return w;
}

double integrand(const Configuration& config, const Eigen::VectorXd& w, double eps) {
  const double avg = boundary_average(config, Side::left, eps);
  double s = 0.0;
  for (int x = 1; x < config.n(); ++x) s += w[x - 1] * ((config.occupied(x) ? 1.0 : 0.0) - avg);
  return s;
}

}  // namespace

double replacement_integrand(const Configuration& config, const TestFunction& g, const KernelTable& kernel,
                             double eps) {
  return integrand(config, replacement_weights(g, kernel), eps);
}

Estimate replacement_diagnostic(const ExclusionModel& model, const TestFunction& g,
                                const std::function<double(double)>& profile, const ReplacementOptions& options) {
  if (model.params().theta < 1.0) throw std::invalid_argument("replacement_diagnostic: requires theta >= 1");
  if (std::floor(options.eps * model.n()) < 1.0) throw std::invalid_argument("replacement_diagnostic: floor(eps N) = 0");
  if (options.samples < 2 || options.replicas < 1) throw std::invalid_argument("replacement_diagnostic: bad sampling");
  const Eigen::VectorXd w = replacement_weights(g, model.kernel());
  const double dt = options.t / (options.samples - 1);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::uint64_t r = 0; r < options.replicas; ++r) {
    CounterRng init_rng(model.params().seed, r | (std::uint64_t{1} << 63));
    Simulator sim(model, sample_product_measure(profile, model.n(), init_rng), CounterRng(model.params().seed, r),
                  options.simulator);
    double integral = 0.0;
    for (int k = 0; k < options.samples; ++k) {
      if (!sim.advance_to(k * dt)) throw std::runtime_error("replacement_diagnostic: event budget exceeded");
      const double weight = (k == 0 || k == options.samples - 1) ? 0.5 : 1.0;
      integral += weight * dt * integrand(sim.config(), w, options.eps);
    }
    const double v = std::abs(integral);
    sum += v;
    sum_sq += v * v;
  }
  const double reps = static_cast<double>(options.replicas);
  Estimate e;
  e.mean = sum / reps;
  const double var = options.replicas > 1 ? std::max(0.0, (sum_sq - reps * e.mean * e.mean) / (reps - 1)) : 0.0;
  e.standard_error = std::sqrt(var / reps);
  return e;
}

}  // namespace ljsep
