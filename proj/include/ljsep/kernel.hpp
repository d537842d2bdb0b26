#ifndef LJSEP_KERNEL_HPP
#define LJSEP_KERNEL_HPP

#include <cstdint>
#include <iosfwd>
#include <span>

#include <Eigen/Core>

namespace ljsep {

/// Default cutoff for the truncated infinite sums. The effective cutoff for a
/// lattice of size N is max(kMinCutoff, 10 N).
inline constexpr long kMinCutoff = 1'000'000;

/// Suffix sums S[x] = sum_{z >= x} z^{-s} for x = 1..x_max, accumulated from
/// `cutoff` downwards with an integral tail correction for z > cutoff.
/// Entry 0 of the result is unused and set to 0.
Eigen::VectorXd inverse_power_suffix_sums(int s, long x_max, long cutoff);

/// Tail correction used for sum_{z > cutoff} z^{-s}: the midpoint of the
/// bracket [int_{cutoff+1}^inf, int_cutoff^inf] of z^{-s} dz.
double inverse_power_tail(int s, long cutoff);

/// c2 = (sum_{z != 0} |z|^{-3})^{-1}, accurate to `precision`.
double normalizing_constant(double precision = 1e-12);

/// Sum_{z>=1} z q[z-1] for an explicitly given (possibly truncated) kernel.
double first_moment(std::span<const double> probs_from_one);

/// Reservoir strength kappa_N(theta): kappa log N at theta in {0, 1}, kappa otherwise.
double kappa_scaled(double theta, double n, double kappa);

/// Time acceleration Theta(N): N^{2+theta} for theta < 0, N^2 / log N otherwise.
double time_scale(double theta, double n);

struct ModelParams {
  int n = 256;
  double theta = 0.5;
  double alpha = 0.5;
  double beta = 0.5;
  double kappa = 1.0;
  double t_max = 0.1;
  std::uint64_t seed = 1;

  /// Throws std::invalid_argument when an invariant is violated.
  void validate() const;

  double kappa_n() const { return kappa_scaled(theta, n, kappa); }
  double time_acceleration() const { return time_scale(theta, n); }
  /// kappa_N(theta) N^{-theta}, the prefactor of both reservoir generators.
  double reservoir_prefactor() const;
};

/// Jump kernel p(z) = c2 |z|^{-3} restricted to a lattice {1, ..., N-1},
/// together with the reservoir tails and first-moment tails.
///
/// All tables are indexed by site x in 1..N-1; index 0 is unused. The object
/// is immutable once built and may be shared across threads.
class KernelTable {
 public:
  explicit KernelTable(int n);

  int n() const { return n_; }
  long cutoff() const { return cutoff_; }
  double c2() const { return c2_; }
  /// m = sum_{z>=1} z p(z).
  double m() const { return m_; }

  /// p(z) for any integer z; p(0) = 0.
  double prob(long z) const;

  /// P_N = sum_{1 <= |z| <= N-2} p(z): mass of displacements that stay inside the lattice.
  double bulk_mass() const { return bulk_mass_; }

  /// r_N^-(x/N) = sum_{y >= x} p(y).
  double tail_left(int x) const { return tail_left_[x]; }
  /// r_N^+(x/N) = sum_{y >= N-x} p(y).
  double tail_right(int x) const { return tail_left_[n_ - x]; }
  /// Theta_x^- = sum_{z >= x} z p(z).
  double theta_minus(int x) const { return theta_minus_[x]; }
  /// Theta_x^+ = sum_{z >= N-x} z p(z).
  double theta_plus(int x) const { return theta_minus_[n_ - x]; }

  /// (1/log N) sum_{x in Lambda_N} Theta_x^-.
  double scaled_theta_sum() const;

  const Eigen::VectorXd& tail_left_table() const { return tail_left_; }
  const Eigen::VectorXd& theta_minus_table() const { return theta_minus_; }

  /// CSV dump: x, p(x), tail_left, tail_right, theta_minus, theta_plus.
  void write_csv(std::ostream& os) const;

 private:
  int n_;
  long cutoff_;
  double c2_;
  double m_;
  double bulk_mass_;
  Eigen::VectorXd tail_left_;
  Eigen::VectorXd theta_minus_;
};

/// Continuum reservoir potentials at u in (0, 1).
struct Potentials {
  double r_minus;
  double r_plus;
  double v0;
  double v1;
};

/// r^-(u) = c2/(2u^2), r^+(u) = c2/(2(1-u)^2), V0 = alpha r^- + beta r^+,
/// V1 = r^- + r^+. Throws std::domain_error outside (0, 1).
Potentials continuum_potentials(double u, double alpha, double beta, double c2);

}  // namespace ljsep

#endif  // LJSEP_KERNEL_HPP
