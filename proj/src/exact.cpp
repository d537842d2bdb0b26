#include "ljsep/exact.hpp"

#include <cmath>
#include <stdexcept>

#include "ljsep/linalg.hpp"

namespace ljsep {

Eigen::MatrixXd exact_generator_matrix(const ExclusionModel& model) {
  const int n = model.n();
  if (n > kMaxExactN) throw std::invalid_argument("exact_generator_matrix: N must be <= 12");
  const int sites = n - 1;
  const Eigen::Index states = Eigen::Index{1} << sites;
  const double scale = model.time_scale();
  const KernelTable& kernel = model.kernel();
  const ModelParams& prm = model.params();
  const double strength = kappa_scaled(prm.theta, n, prm.kappa) * std::pow(static_cast<double>(n), -prm.theta);
  auto c_rate = [](bool occupied, double delta) { return occupied ? 1.0 - delta : delta; };
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(states, states);
  for (Eigen::Index s = 0; s < states; ++s) {
    const auto bits = static_cast<std::uint64_t>(s);
    // (1/2) sum over ordered pairs = one term per unordered pair at rate p(x-y)
    for (int x = 1; x <= sites; ++x) {
      for (int y = x + 1; y <= sites; ++y) {
        const bool ex = (bits >> (x - 1)) & 1u;
        const bool ey = (bits >> (y - 1)) & 1u;
        if (ex == ey) continue;
        const auto target = static_cast<Eigen::Index>(bits ^ (std::uint64_t{1} << (x - 1)) ^ (std::uint64_t{1} << (y - 1)));
        q(s, target) += scale * kernel.prob(y - x);
      }
      const bool ex = (bits >> (x - 1)) & 1u;
      const auto target = static_cast<Eigen::Index>(bits ^ (std::uint64_t{1} << (x - 1)));
      const double flip = strength * (kernel.tail_left(x) * c_rate(ex, prm.alpha) + kernel.tail_right(x) * c_rate(ex, prm.beta));
      q(s, target) += scale * flip;
    }
    q(s, s) = -q.row(s).sum();
  }
  return q;
}

Eigen::VectorXd product_measure_vector(int n, const std::function<double(double)>& profile) {
  const int sites = n - 1;
  if (sites > 30) throw std::invalid_argument("product_measure_vector: too many sites");
  const Eigen::Index states = Eigen::Index{1} << sites;
  Eigen::VectorXd pi(states);
  for (Eigen::Index s = 0; s < states; ++s) {
    double w = 1.0;
    for (int x = 1; x <= sites; ++x) {
      const double h = profile(static_cast<double>(x) / n);
      w *= ((s >> (x - 1)) & 1) ? h : 1.0 - h;
    }
    pi[s] = w;
  }
  return pi;
}

Eigen::VectorXd evolve_law(const Eigen::MatrixXd& generator, const Eigen::VectorXd& initial, double t) {
  return (initial.transpose() * expm(generator * t)).transpose();
}

Eigen::VectorXd site_densities(int n, const Eigen::VectorXd& law) {
  Eigen::VectorXd rho = Eigen::VectorXd::Zero(n - 1);
  for (Eigen::Index s = 0; s < law.size(); ++s)
    for (int x = 1; x < n; ++x)
      if ((s >> (x - 1)) & 1) rho[x - 1] += law[s];
  return rho;
}

}  // namespace ljsep
