#include "ljsep/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "ljsep/csv.hpp"

namespace ljsep {

namespace {

// Compensated accumulator; the suffix sums add ~10^6 terms of decreasing size.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double v) {
    const double y = v - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

long cutoff_for(long n) { return std::max(kMinCutoff, 10 * n); }

}  // namespace

double inverse_power_tail(int s, long cutoff) {
  // int_a^inf z^{-s} dz = a^{1-s}/(s-1)
  const double a = static_cast<double>(cutoff);
  const double up = std::pow(a, 1.0 - s) / (s - 1);
  const double lo = std::pow(a + 1.0, 1.0 - s) / (s - 1);
  return 0.5 * (up + lo);
}

Eigen::VectorXd inverse_power_suffix_sums(int s, long x_max, long cutoff) {
  if (s < 2) throw std::invalid_argument("inverse_power_suffix_sums: exponent must be >= 2");
  if (x_max < 1 || cutoff < x_max) throw std::invalid_argument("inverse_power_suffix_sums: need 1 <= x_max <= cutoff");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(x_max + 1);
  KahanSum acc;
  acc.add(inverse_power_tail(s, cutoff));
  for (long z = cutoff; z >= 1; --z) {
    const double zd = static_cast<double>(z);
    acc.add(s == 2 ? 1.0 / (zd * zd) : s == 3 ? 1.0 / (zd * zd * zd) : std::pow(zd, -s));
    if (z <= x_max) out[z] = acc.sum;
  }
  return out;
}

double normalizing_constant(double precision) {
  if (!(precision > 0)) throw std::invalid_argument("normalizing_constant: precision must be positive");
  // Bracket half-width ~ 1/(2 Z^3) on sum z^{-3}; c2 error ~ 4 c2^2 times that.
  long cutoff = kMinCutoff;
  while (1.0 / std::pow(static_cast<double>(cutoff), 3) > precision && cutoff < (1L << 40)) cutoff *= 2;
  const Eigen::VectorXd s3 = inverse_power_suffix_sums(3, 1, cutoff);
  return 1.0 / (2.0 * s3[1]);
}

double first_moment(std::span<const double> probs_from_one) {
  double m = 0.0;
  for (std::size_t i = 0; i < probs_from_one.size(); ++i) m += static_cast<double>(i + 1) * probs_from_one[i];
  return m;
}

double kappa_scaled(double theta, double n, double kappa) {
  if (theta == 0.0 || theta == 1.0) return kappa * std::log(n);
  return kappa;
}

double time_scale(double theta, double n) {
  if (theta < 0.0) return std::pow(n, 2.0 + theta);
  return n * n / std::log(n);
}

void ModelParams::validate() const {
  if (n < 3) throw std::invalid_argument("ModelParams: n must be >= 3, got " + std::to_string(n));
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("ModelParams: alpha must lie in [0,1]");
  if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("ModelParams: beta must lie in [0,1]");
  if (!(kappa > 0.0)) throw std::invalid_argument("ModelParams: kappa must be positive");
  if (!(t_max >= 0.0)) throw std::invalid_argument("ModelParams: t_max must be non-negative");
  if (!std::isfinite(theta)) throw std::invalid_argument("ModelParams: theta must be finite");
}

double ModelParams::reservoir_prefactor() const { return kappa_n() * std::pow(static_cast<double>(n), -theta); }

KernelTable::KernelTable(int n) : n_(n), cutoff_(cutoff_for(n)) {
  if (n < 3) throw std::invalid_argument("KernelTable: n must be >= 3");
  const Eigen::VectorXd s3 = inverse_power_suffix_sums(3, n, cutoff_);
  const Eigen::VectorXd s2 = inverse_power_suffix_sums(2, n, cutoff_);
  c2_ = 1.0 / (2.0 * s3[1]);
  tail_left_ = c2_ * s3.head(n);
  theta_minus_ = c2_ * s2.head(n);
  tail_left_[0] = 0.0;
  theta_minus_[0] = 0.0;
  m_ = theta_minus_[1];
  // sum_{z=1}^{N-2} p(z) = r^-(1) - r^-(N-1)
  bulk_mass_ = 2.0 * (tail_left_[1] - tail_left_[n - 1]);
}

double KernelTable::prob(long z) const {
  if (z == 0) return 0.0;
  const double a = static_cast<double>(z < 0 ? -z : z);
  return c2_ / (a * a * a);
}

double KernelTable::scaled_theta_sum() const {
  const double sum = theta_minus_.segment(1, n_ - 1).sum();
  return sum / std::log(static_cast<double>(n_));
}

void KernelTable::write_csv(std::ostream& os) const {
  for (int x = 1; x < n_; ++x) write_row(os, x, prob(x), tail_left(x), tail_right(x), theta_minus(x), theta_plus(x));
}

Potentials continuum_potentials(double u, double alpha, double beta, double c2) {
  if (!(u > 0.0 && u < 1.0)) throw std::domain_error("continuum_potentials: u must lie in the open interval (0,1)");
  Potentials p{};
  p.r_minus = c2 / (2.0 * u * u);
  p.r_plus = c2 / (2.0 * (1.0 - u) * (1.0 - u));
  p.v0 = alpha * p.r_minus + beta * p.r_plus;
  p.v1 = p.r_minus + p.r_plus;
  return p;
}

}  // namespace ljsep
