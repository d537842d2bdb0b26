#ifndef LJSEP_DISCRETE_OPS_HPP
#define LJSEP_DISCRETE_OPS_HPP

#include <cstdint>

#include <Eigen/Core>

#include "ljsep/dynamics.hpp"
#include "ljsep/kernel.hpp"
#include "ljsep/lattice.hpp"

namespace ljsep {

/// (L_N G)(x/N) = sum_{y in Lambda_N} (G(y/N) - G(x/N)) p(y - x), entry x-1.
/// Exact O(N^2) double sum.
Eigen::VectorXd discrete_generator(const TestFunction& g, const KernelTable& kernel);

/// sum_{y in Lambda_N} (y - x) p(y - x), entry x-1.
Eigen::VectorXd discrete_drift(const KernelTable& kernel);

/// sup_x |(N^2/log N) L_N G - c2 G'' - G' (N/log N) sum_y (y-x) p(y-x)|.
double l1conv_residual(const TestFunction& g, const KernelTable& kernel);

/// |(1/log N) sum_x Theta_x^- - c2|.
double theta_sum_residual(const KernelTable& kernel);

/// Theta(N) L_N <pi^N, G> split into the bulk and reservoir contributions.
///
/// bulk(eta)      = sum_x bulk_term[x] eta(x)
/// reservoir(eta) = sum_x alpha coefficient_alpha[x] + beta coefficient_beta[x]
///                        + coefficient_eta[x] eta(x)
/// Entry x-1 holds site x.
struct DriftDecomposition {
  Eigen::VectorXd bulk_term;
  Eigen::VectorXd coefficient_alpha;
  Eigen::VectorXd coefficient_beta;
  Eigen::VectorXd coefficient_eta;
  double alpha = 0.0;
  double beta = 0.0;

  double bulk(const Configuration& config) const;
  double reservoir(const Configuration& config) const;
  double total(const Configuration& config) const { return bulk(config) + reservoir(config); }
};

DriftDecomposition drift_decomposition(const TestFunction& g, const ExclusionModel& model);

struct Estimate {
  double mean = 0.0;
  double standard_error = 0.0;
};

struct ReplacementOptions {
  double eps = 0.1;
  double t = 0.1;
  std::uint64_t replicas = 16;
  int samples = 200;
  SimulatorOptions simulator;
};

/// Monte Carlo estimate of
///   E | int_0^t (1/log N) sum_x G'(x/N) (eta_s(x) - avg_left_s) Theta_x^- ds |
/// with the left boundary average over floor(eps N) sites, time integral by
/// the trapezoid rule over `samples` equispaced times.
Estimate replacement_diagnostic(const ExclusionModel& model, const TestFunction& g,
                                const std::function<double(double)>& profile, const ReplacementOptions& options);

/// Same integrand along a fixed configuration held constant in time.
double replacement_integrand(const Configuration& config, const TestFunction& g, const KernelTable& kernel, double eps);

}  // namespace ljsep

#endif  // LJSEP_DISCRETE_OPS_HPP
