#include "ljsep/harness.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <memory>
#include <ostream>
#include <utility>

#include "ljsep/csv.hpp"
#include "ljsep/discrete_ops.hpp"
#include "ljsep/kernel.hpp"
#include "ljsep/spectral.hpp"
#include "ljsep/test_functions.hpp"

namespace ljsep {

Profile initial_profile(std::string_view id, double alpha, double beta) {
  if (id == "constant") {
    const double c = 0.5 * (alpha + beta);
    return [c](double) { return c; };
  }
  if (id == "linear") return [alpha, beta](double u) { return alpha + (beta - alpha) * u; };
  if (id == "bump") return [](double u) { return 4.0 * u * (1.0 - u); };
  if (id == "step") return [](double u) { return u < 0.5 ? 1.0 : 0.0; };
  throw InvalidSpec("unknown initial profile '" + std::string(id) + "' (constant, linear, bump, step)");
}

std::vector<TestFunction> preset_observables(const RegimeSelection& regime) {
  std::vector<TestFunction> out;
  switch (regime.equation) {
    case Equation::reaction:
    case Equation::reaction_diffusion:
      for (auto [c, w] : {std::pair{0.5, 0.45}, {0.5, 0.3}, {0.3, 0.2}, {0.7, 0.2}, {0.5, 0.15}})
        out.push_back(preset::smooth_bump(c, w));
      break;
    case Equation::dirichlet_heat:
      for (int k = 1; k <= 5; ++k) out.push_back(preset::sine(k));
      break;
    case Equation::robin_heat:
      for (const EigenPair& p : robin_eigenpairs(regime.m_hat, regime.c2_hat, 5)) out.push_back(robin_mode(p));
      break;
    case Equation::neumann_heat:
      for (int k = 0; k <= 4; ++k) out.push_back(preset::cosine(k));
      break;
  }
  return out;
}

bool admissible(const TestFunction& g, const RegimeSelection& regime) {
  const TestClass c = g.test_class();
  switch (regime.equation) {
    case Equation::reaction:
    case Equation::reaction_diffusion: return c == TestClass::compact_support;
    case Equation::dirichlet_heat: return c == TestClass::dirichlet || c == TestClass::compact_support;
    case Equation::robin_heat:
      return (c == TestClass::robin || c == TestClass::neumann) &&
             std::abs(g.robin_ratio() - regime.robin_ratio()) <= 1e-9 * std::max(1.0, regime.robin_ratio());
    case Equation::neumann_heat: return c == TestClass::neumann;
  }
  return false;
}

void ExperimentSpec::validate() const {
  if (!std::isfinite(theta)) throw InvalidSpec("theta must be finite");
  if (!(alpha >= 0.0 && alpha <= 1.0) || !(beta >= 0.0 && beta <= 1.0))
    throw InvalidSpec("alpha and beta must lie in [0,1]");
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw InvalidSpec("kappa must be positive");
  for (int n : n_list)
    if (n < 3) throw InvalidSpec("every N must be at least 3");
  if (replicas < 1) throw InvalidSpec("replicas must be at least 1");
  if (report_times.empty()) throw InvalidSpec("at least one report time is required");
  for (double t : report_times)
    if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidSpec("report times must be finite and non-negative");
  if (!std::is_sorted(report_times.begin(), report_times.end())) throw InvalidSpec("report times must be sorted");
  if (!(eps >= 0.0 && eps <= 1.0)) throw InvalidSpec("eps must lie in [0,1]");
  if (grid < 32) throw InvalidSpec("grid must be at least 32");
  if (!(dt > 0.0)) throw InvalidSpec("dt must be positive");
  initial_profile(profile, alpha, beta);
  resolved_observables();
}

std::vector<TestFunction> ExperimentSpec::resolved_observables() const {
  const RegimeSelection r = regime();
  std::vector<TestFunction> presets = preset_observables(r);
  if (observables.empty()) return presets;
  std::vector<TestFunction> out;
  for (const std::string& id : observables) {
    auto it = std::find_if(presets.begin(), presets.end(), [&](const TestFunction& g) { return g.id() == id; });
    if (it == presets.end())
      throw InvalidSpec("observable '" + id + "' is not a preset admissible for the " + to_string(r.equation) +
                        " regime");
    out.push_back(*it);
  }
  return out;
}

SampleStats sample_stats(const std::vector<double>& values) {
  SampleStats s;
  s.count = values.size();
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(s.count);
  if (s.count > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.standard_error = std::sqrt(ss / static_cast<double>(s.count - 1) / static_cast<double>(s.count));
  }
  return s;
}

bool errors_decrease(const std::vector<ConvergenceRow>& rows) {
  std::map<std::pair<std::string, double>, std::vector<const ConvergenceRow*>> groups;
  for (const ConvergenceRow& r : rows) groups[{r.observable, r.time}].push_back(&r);
  for (auto& [key, group] : groups) {
    std::sort(group.begin(), group.end(), [](const ConvergenceRow* a, const ConvergenceRow* b) { return a->n < b->n; });
    for (std::size_t k = 0; k + 1 < group.size(); ++k) {
      const double slack = 2.0 * std::hypot(group[k]->mc_stderr, group[k + 1]->mc_stderr);
      if (group[k + 1]->abs_error > group[k]->abs_error + slack) return false;
    }
  }
  return true;
}

ConvergenceReport converge(const ExperimentSpec& spec) {
  spec.validate();
  ConvergenceReport report;
  if (spec.n_list.empty()) return report;

  const RegimeSelection regime = spec.regime();
  const std::vector<TestFunction> observables = spec.resolved_observables();
  const Profile g = initial_profile(spec.profile, spec.alpha, spec.beta);

  // Reference values, one solve per report time so every time is a grid level.
  SolverOptions solver{spec.grid, spec.dt, TimeScheme::bdf2};
  std::vector<std::vector<double>> reference(spec.report_times.size());
  for (std::size_t k = 0; k < spec.report_times.size(); ++k) {
    const DensityProfile rho = solve_parabolic(regime, g, spec.report_times[k], solver);
    for (const TestFunction& obs : observables) reference[k].push_back(pairing(rho, obs));
  }

  RunOptions run_options;
  run_options.report_times = spec.report_times;
  run_options.observables = observables;
  run_options.eps = 0.0;
  run_options.simulator.event_budget = spec.event_budget;

  bool overflow = false;
  for (int n : spec.n_list) {
    ModelParams params;
    params.n = n;
    params.theta = spec.theta;
    params.alpha = spec.alpha;
    params.beta = spec.beta;
    params.kappa = spec.kappa;
    params.t_max = spec.report_times.back();
    params.seed = spec.seed;
    const ExclusionModel model(params);
    const std::vector<TrajectoryRecord> records = run_replicas(model, g, run_options, spec.replicas, spec.threads);

    for (std::size_t k = 0; k < spec.report_times.size(); ++k) {
      for (std::size_t j = 0; j < observables.size(); ++j) {
        std::vector<double> values;
        ConvergenceRow row;
        for (const TrajectoryRecord& rec : records) {
          const double v = rec.values(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j));
          if (std::isnan(v)) ++row.overflowed_replicas; else values.push_back(v);
        }
        const SampleStats s = sample_stats(values);
        row.n = n;
        row.observable = observables[j].id();
        row.time = spec.report_times[k];
        row.mc_mean = values.empty() ? std::nan("") : s.mean;
        row.mc_stderr = s.standard_error;
        row.pde_value = reference[k][j];
        row.abs_error = std::abs(row.mc_mean - row.pde_value);
        overflow = overflow || row.overflowed_replicas > 0;
        report.rows.push_back(std::move(row));
      }
    }
  }
  if (overflow) report.status = kExitBudgetOverflow;
  else if (!errors_decrease(report.rows)) report.status = kExitTrendViolated;
  return report;
}

LemmaReport lemmas(const std::vector<int>& theta_ns, const std::vector<int>& l1_ns) {
  LemmaReport report;
  std::vector<double> theta_residuals;
  double lo = INFINITY, hi = 0.0;
  for (int n : theta_ns) {
    const KernelTable kernel(n);
    const double r = theta_sum_residual(kernel);
    report.rows.push_back({n, "theta", r});
    theta_residuals.push_back(r);
    const double scaled = r * std::log(static_cast<double>(n));
    lo = std::min(lo, scaled);
    hi = std::max(hi, scaled);
  }
  bool ok = true;
  for (std::size_t k = 0; k + 1 < theta_residuals.size(); ++k) ok = ok && theta_residuals[k + 1] < theta_residuals[k];
  if (!theta_residuals.empty()) {
    report.theta_envelope_ratio = lo > 0.0 ? hi / lo : INFINITY;
    ok = ok && report.theta_envelope_ratio < 3.0;
  }

  const std::vector<TestFunction> library{preset::sine(1), preset::square(), preset::cubic_product(),
                                          preset::constant(1.0)};
  std::vector<std::vector<double>> columns(library.size());
  for (int n : l1_ns) {
    const KernelTable kernel(n);
    for (std::size_t j = 0; j < library.size(); ++j) {
      const double r = l1conv_residual(library[j], kernel);
      report.rows.push_back({n, library[j].id(), r});
      columns[j].push_back(r);
    }
  }
  for (std::size_t j = 0; j + 1 < library.size(); ++j)
    for (std::size_t k = 0; k + 1 < columns[j].size(); ++k) ok = ok && columns[j][k + 1] < columns[j][k];
  report.status = ok ? kExitOk : kExitTrendViolated;
  return report;
}

void write_convergence_csv(std::ostream& os, const ConvergenceReport& report, const ExperimentSpec& spec) {
  const RegimeSelection r = spec.regime();
  os << csv_header("convergence",
                   {"N", "observable_id", "time", "mc_mean", "mc_stderr", "pde_value", "abs_error", "overflowed"},
                   {{"regime", to_string(r.equation)},
                    {"theta", format_number(spec.theta)},
                    {"seed", std::to_string(spec.seed)},
                    {"replicas", std::to_string(spec.replicas)}})
     << '\n';
  for (const ConvergenceRow& row : report.rows)
    write_row(os, row.n, row.observable, row.time, row.mc_mean, row.mc_stderr, row.pde_value, row.abs_error,
              row.overflowed_replicas);
}

void write_lemma_csv(std::ostream& os, const LemmaReport& report) {
  os << csv_header("lemmas", {"N", "G_id", "residual"}, {{"theta_envelope_ratio", format_number(report.theta_envelope_ratio)}})
     << '\n';
  for (const LemmaRow& row : report.rows) write_row(os, row.n, row.id, row.residual);
}

namespace {

CsvMetadata model_meta(const ModelParams& p) {
  return {{"regime", to_string(select_regime(p.theta, p.kappa, p.alpha, p.beta).equation)},
          {"N", std::to_string(p.n)},
          {"theta", format_number(p.theta)},
          {"alpha", format_number(p.alpha)},
          {"beta", format_number(p.beta)},
          {"kappa", format_number(p.kappa)},
          {"seed", std::to_string(p.seed)}};
}

}  // namespace

void write_trajectory_csv(std::ostream& os, const std::vector<TrajectoryRecord>& records,
                          const std::vector<TestFunction>& observables, const ModelParams& params) {
  os << csv_header("trajectory", {"replica", "macro_time", "observable_id", "value"}, model_meta(params)) << '\n';
  for (const TrajectoryRecord& rec : records) {
    for (std::size_t k = 0; k < rec.times.size(); ++k) {
      const auto ki = static_cast<Eigen::Index>(k);
      for (std::size_t j = 0; j < observables.size(); ++j)
        write_row(os, rec.replica, rec.times[k], observables[j].id(), rec.values(ki, static_cast<Eigen::Index>(j)));
      if (!std::isnan(rec.left_average[k])) write_row(os, rec.replica, rec.times[k], "left_avg", rec.left_average[k]);
      if (!std::isnan(rec.right_average[k]))
        write_row(os, rec.replica, rec.times[k], "right_avg", rec.right_average[k]);
    }
  }
}

void write_snapshot_csv(std::ostream& os, const std::vector<TrajectoryRecord>& records, const ModelParams& params) {
  os << csv_header("snapshots", {"replica", "macro_time", "site", "occupancy"}, model_meta(params)) << '\n';
  for (const TrajectoryRecord& rec : records)
    for (std::size_t k = 0; k < rec.snapshots.size(); ++k) {
      const Configuration& c = rec.snapshots[k];
      for (int x = 1; x < c.n(); ++x) write_row(os, rec.replica, rec.times[k], x, c.occupied(x) ? 1 : 0);
    }
}

void write_profiles_csv(std::ostream& os, const std::vector<DensityProfile>& profiles) {
  const std::string regime = profiles.empty() ? "none" : to_string(profiles.front().regime.equation);
  os << csv_header("profiles", {"time", "node", "value"}, {{"regime", regime}}) << '\n';
  for (const DensityProfile& p : profiles) write_profile_rows(os, p);
}

std::map<std::string, std::string> parse_config(std::istream& is) {
  std::map<std::string, std::string> out;
  std::string line;
  int number = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };
  while (std::getline(is, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidSpec("config line " + std::to_string(number) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw InvalidSpec("config line " + std::to_string(number) + ": empty key");
    out[key] = value;
  }
  return out;
}

}  // namespace ljsep
