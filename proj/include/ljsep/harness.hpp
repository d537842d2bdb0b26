#ifndef LJSEP_HARNESS_HPP
#define LJSEP_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ljsep/dynamics.hpp"
#include "ljsep/pde.hpp"
#include "ljsep/regime.hpp"

namespace ljsep {

enum ExitCode : int { kExitOk = 0, kExitTrendViolated = 2, kExitBudgetOverflow = 3, kExitInvalidSpec = 4 };

class InvalidSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// constant (alpha+beta)/2, linear alpha + (beta-alpha)u, bump 4u(1-u), step 1{u < 1/2}.
Profile initial_profile(std::string_view id, double alpha, double beta);

/// Five observables of the class the regime admits: smooth bumps for
/// theta <= 0, sin(k pi u) for Dirichlet, psi_1..psi_5 for Robin,
/// cos(k pi u), k = 0..4, for Neumann.
std::vector<TestFunction> preset_observables(const RegimeSelection& regime);

bool admissible(const TestFunction& g, const RegimeSelection& regime);

struct ExperimentSpec {
  double theta = 0.5;
  double alpha = 0.2;
  double beta = 0.8;
  double kappa = 1.0;
  std::string profile = "bump";
  std::vector<int> n_list;
  std::uint64_t replicas = 64;
  std::vector<double> report_times{0.05, 0.15};
  /// Preset ids; empty selects every preset of the regime.
  std::vector<std::string> observables;
  double eps = 0.1;
  std::uint64_t seed = 1;
  /// Reference PDE grid.
  int grid = 1024;
  double dt = 1e-4;
  unsigned threads = 0;
  std::uint64_t event_budget = kDefaultEventBudget;

  /// Throws InvalidSpec.
  void validate() const;
  RegimeSelection regime() const { return select_regime(theta, kappa, alpha, beta); }
  std::vector<TestFunction> resolved_observables() const;
};

struct ConvergenceRow {
  int n = 0;
  std::string observable;
  double time = 0.0;
  double mc_mean = 0.0;
  double mc_stderr = 0.0;
  double pde_value = 0.0;
  double abs_error = 0.0;
  std::uint64_t overflowed_replicas = 0;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  int status = kExitOk;
};

/// err(N_{k+1}) <= err(N_k) + 2 sqrt(se_k^2 + se_{k+1}^2) along increasing N,
/// for every (observable, time).
bool errors_decrease(const std::vector<ConvergenceRow>& rows);

ConvergenceReport converge(const ExperimentSpec& spec);

struct LemmaRow {
  int n = 0;
  std::string id;
  double residual = 0.0;
};

struct LemmaReport {
  std::vector<LemmaRow> rows;
  /// max/min of residual * log N over the theta rows.
  double theta_envelope_ratio = 0.0;
  int status = kExitOk;
};

/// "theta" rows from theta_sum_residual over `theta_ns`; one row per preset G
/// (sin1, square, cubic_product, constant) from l1conv_residual over `l1_ns`.
/// Status 2 when a non-constant column fails to decrease or the theta
/// envelope ratio reaches 3.
LemmaReport lemmas(const std::vector<int>& theta_ns, const std::vector<int>& l1_ns);

/// Mean and standard error (sample sd / sqrt(count)).
struct SampleStats {
  double mean = 0.0;
  double standard_error = 0.0;
  std::uint64_t count = 0;
};
SampleStats sample_stats(const std::vector<double>& values);

void write_convergence_csv(std::ostream& os, const ConvergenceReport& report, const ExperimentSpec& spec);
void write_lemma_csv(std::ostream& os, const LemmaReport& report);
void write_trajectory_csv(std::ostream& os, const std::vector<TrajectoryRecord>& records,
                          const std::vector<TestFunction>& observables, const ModelParams& params);
void write_snapshot_csv(std::ostream& os, const std::vector<TrajectoryRecord>& records, const ModelParams& params);
void write_profiles_csv(std::ostream& os, const std::vector<DensityProfile>& profiles);

/// Plain "key = value" lines; '#' starts a comment. Throws InvalidSpec on
/// malformed lines.
std::map<std::string, std::string> parse_config(std::istream& is);

}  // namespace ljsep

#endif  // LJSEP_HARNESS_HPP
