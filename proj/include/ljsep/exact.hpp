#ifndef LJSEP_EXACT_HPP
#define LJSEP_EXACT_HPP

#include <functional>

#include <Eigen/Core>

#include "ljsep/dynamics.hpp"

namespace ljsep {

inline constexpr int kMaxExactN = 12;

/// Dense rate matrix of Theta(N) L_N over the 2^{N-1} configurations, state
/// index = Configuration::to_bits(). Rows sum to zero. Throws for N > 12.
Eigen::MatrixXd exact_generator_matrix(const ExclusionModel& model);

/// Probability vector of the product measure with marginals profile(x/N).
Eigen::VectorXd product_measure_vector(int n, const std::function<double(double)>& profile);

/// Row vector law at macroscopic time t started from `initial`.
Eigen::VectorXd evolve_law(const Eigen::MatrixXd& generator, const Eigen::VectorXd& initial, double t);

/// E[eta_t(x)] for x = 1..N-1 (entry x-1) under the law `law`.
Eigen::VectorXd site_densities(int n, const Eigen::VectorXd& law);

}  // namespace ljsep

#endif  // LJSEP_EXACT_HPP
