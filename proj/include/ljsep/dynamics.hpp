#ifndef LJSEP_DYNAMICS_HPP
#define LJSEP_DYNAMICS_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "ljsep/kernel.hpp"
#include "ljsep/lattice.hpp"
#include "ljsep/rng.hpp"
#include "ljsep/sampler.hpp"

namespace ljsep {

inline constexpr std::uint64_t kDefaultEventBudget = 5'000'000'000ULL;

/// Immutable model context shared by all replicas: parameters, kernel tables,
/// jump sampler and the per-site flip rates for both occupation values.
class ExclusionModel {
 public:
  explicit ExclusionModel(const ModelParams& params);
  ExclusionModel(const ModelParams& params, std::shared_ptr<const KernelTable> kernel);

  const ModelParams& params() const { return params_; }
  const KernelTable& kernel() const { return *kernel_; }
  const JumpSampler& sampler() const { return sampler_; }
  int n() const { return params_.n; }

  /// Theta(N)
  double time_scale() const { return time_scale_; }
  /// kappa_N(theta) N^{-theta}
  double reservoir_prefactor() const { return prefactor_; }

  /// Rate (generator L_N units) of flipping site x given its occupation:
  /// prefactor * (r^-_N c_x(eta; alpha) + r^+_N c_x(eta; beta)).
  double flip_rate(int x, bool occupied) const { return occupied ? rate_full_[x] : rate_empty_[x]; }

  /// Total candidate exchange rate (N-1) P_N / 2.
  double bulk_majorant() const;

 private:
  ModelParams params_;
  std::shared_ptr<const KernelTable> kernel_;
  JumpSampler sampler_;
  double time_scale_;
  double prefactor_;
  std::vector<double> rate_empty_;
  std::vector<double> rate_full_;
};

struct SimulationClock {
  double micro_time = 0.0;
  double time_scale = 1.0;
  std::uint64_t event_count = 0;

  double macro_time() const { return micro_time / time_scale; }
};

/// Flip rates per site held in a complete binary tree of partial sums, so
/// updates and proportional selection cost O(log N) and the root always
/// equals the sum of the leaves as recomputed along the update path.
class RateBook {
 public:
  RateBook(const ExclusionModel& model, const Configuration& config, bool reservoirs_enabled = true);

  double bulk_majorant() const { return bulk_majorant_; }
  double total_flip() const { return tree_[1]; }
  double total() const { return bulk_majorant_ + tree_[1]; }
  double flip_rate(int x) const { return tree_[leaves_ + x - 1]; }

  void update(int x, double rate);
  /// Site x whose cumulative rate interval contains `target` in [0, total_flip).
  int select(double target) const;
  /// Recomputes every internal node from the leaves.
  void resum();

 private:
  double bulk_majorant_;
  int sites_;
  int leaves_;
  std::vector<double> tree_;
};

enum class EventKind { swap, null_exchange, flip };

struct EventStats {
  std::uint64_t proposals = 0;
  std::uint64_t swaps = 0;
  std::uint64_t flips = 0;

  std::uint64_t null_events() const { return proposals - swaps; }
  double null_fraction() const { return proposals ? 1.0 - static_cast<double>(swaps) / proposals : 0.0; }
};

struct SimulatorOptions {
  bool bulk_enabled = true;
  bool reservoirs_enabled = true;
  std::uint64_t event_budget = kDefaultEventBudget;
};

/// Thinned continuous-time simulation of Theta(N) L_N for one replica.
class Simulator {
 public:
  Simulator(const ExclusionModel& model, Configuration initial, CounterRng rng, SimulatorOptions options = {});

  /// Performs one event of the embedded chain and advances the clock.
  EventKind step();

  /// Runs until the macroscopic clock reaches `macro_time`; the state is the
  /// one holding at that deterministic time. Returns false when the event
  /// budget is exhausted first.
  bool advance_to(double macro_time);

  const Configuration& config() const { return config_; }
  const SimulationClock& clock() const { return clock_; }
  const EventStats& stats() const { return stats_; }
  const RateBook& rates() const { return rates_; }

 private:
  EventKind apply_event(double selector);

  const ExclusionModel& model_;
  Configuration config_;
  CounterRng rng_;
  SimulatorOptions options_;
  RateBook rates_;
  SimulationClock clock_;
  EventStats stats_;
  double bulk_site_rate_;
};

struct RunOptions {
  std::vector<double> report_times;
  std::vector<TestFunction> observables;
  /// Boundary window for the left/right averages; 0 disables them.
  double eps = 0.1;
  bool snapshots = false;
  SimulatorOptions simulator;
};

/// Observables of one replica at the report times.
struct TrajectoryRecord {
  std::uint64_t replica = 0;
  std::vector<double> times;
  /// values(time index, observable index) = <pi^N_t, G>
  Eigen::MatrixXd values;
  std::vector<double> left_average;
  std::vector<double> right_average;
  std::vector<Configuration> snapshots;
  EventStats stats;
  bool overflow = false;
};

/// Samples the initial configuration from the product measure of `profile`
/// and simulates one replica. Stream (params.seed, replica) drives the run.
TrajectoryRecord run(const ExclusionModel& model, const std::function<double(double)>& profile,
                     const RunOptions& options, std::uint64_t replica = 0);

/// Same, from a given initial configuration.
TrajectoryRecord run_from(const ExclusionModel& model, Configuration initial, const RunOptions& options,
                          std::uint64_t replica = 0);

/// Runs `replicas` independent replicas on a worker pool. Results are ordered
/// by replica index and do not depend on the number of threads.
std::vector<TrajectoryRecord> run_replicas(const ExclusionModel& model, const std::function<double(double)>& profile,
                                           const RunOptions& options, std::uint64_t replicas,
                                           unsigned threads = 0);

}  // namespace ljsep

#endif  // LJSEP_DYNAMICS_HPP
