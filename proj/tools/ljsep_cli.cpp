#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ljsep/csv.hpp"
#include "ljsep/dynamics.hpp"
#include "ljsep/harness.hpp"
#include "ljsep/kernel.hpp"
#include "ljsep/pde.hpp"
#include "ljsep/regime.hpp"
#include "ljsep/spectral.hpp"

namespace {

using namespace ljsep;

struct Settings {
  int n = 256;
  double theta = 0.5;
  double alpha = 0.2;
  double beta = 0.8;
  double kappa = 1.0;
  double tmax = 0.1;
  std::uint64_t replicas = 16;
  std::uint64_t seed = 1;
  double eps = 0.1;
  int grid = 256;
  double dt = 1e-3;
  std::string out = "-";
  std::string profile = "bump";
  std::string times;
  std::string n_list;
  std::string observables;
  std::string snapshots;
  std::string scheme = "be";
  int count = 20;
  unsigned threads = 0;
  std::uint64_t budget = kDefaultEventBudget;
};

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::istringstream is(item);
    T v{};
    if (!(is >> v) || !is.eof()) throw InvalidSpec(std::string("cannot parse ") + what + " entry '" + item + "'");
    out.push_back(v);
  }
  return out;
}

template <typename T>
void assign(T& target, const std::string& key, const std::string& value) {
  std::istringstream is(value);
  T v{};
  if (!(is >> v) || !(is >> std::ws).eof()) throw InvalidSpec("config: bad value for '" + key + "': " + value);
  target = v;
}

void apply_config(Settings& s, const std::map<std::string, std::string>& cfg) {
  for (const auto& [key, value] : cfg) {
    if (key == "n") assign(s.n, key, value);
    else if (key == "theta") assign(s.theta, key, value);
    else if (key == "alpha") assign(s.alpha, key, value);
    else if (key == "beta") assign(s.beta, key, value);
    else if (key == "kappa") assign(s.kappa, key, value);
    else if (key == "tmax") assign(s.tmax, key, value);
    else if (key == "replicas") assign(s.replicas, key, value);
    else if (key == "seed") assign(s.seed, key, value);
    else if (key == "eps") assign(s.eps, key, value);
    else if (key == "grid") assign(s.grid, key, value);
    else if (key == "dt") assign(s.dt, key, value);
    else if (key == "out") s.out = value;
    else if (key == "profile") s.profile = value;
    else if (key == "times") s.times = value;
    else if (key == "n-list") s.n_list = value;
    else if (key == "observables") s.observables = value;
    else if (key == "snapshots") s.snapshots = value;
    else if (key == "scheme") s.scheme = value;
    else if (key == "count") assign(s.count, key, value);
    else if (key == "threads") assign(s.threads, key, value);
    else if (key == "budget") assign(s.budget, key, value);
    else if (key == "kappa_n" || key == "kappa-n")
      throw InvalidSpec("kappa_N is derived from kappa and theta and cannot be overridden");
    else throw InvalidSpec("config: unknown key '" + key + "'");
  }
}

std::vector<double> report_times(const Settings& s, std::vector<double> fallback) {
  if (!s.times.empty()) return parse_list<double>(s.times, "times");
  return fallback;
}

std::vector<double> uniform_times(double tmax) {
  std::vector<double> t;
  for (int k = 0; k <= 10; ++k) t.push_back(tmax * k / 10.0);
  return t;
}

ModelParams model_params(const Settings& s) {
  ModelParams p;
  p.n = s.n;
  p.theta = s.theta;
  p.alpha = s.alpha;
  p.beta = s.beta;
  p.kappa = s.kappa;
  p.t_max = s.tmax;
  p.seed = s.seed;
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw InvalidSpec(e.what());
  }
  return p;
}

// Writes to --out, or stdout for "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw InvalidSpec("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int cmd_simulate(const Settings& s) {
  const ModelParams p = model_params(s);
  const ExclusionModel model(p);
  const Profile g = initial_profile(s.profile, p.alpha, p.beta);
  RunOptions opts;
  opts.report_times = report_times(s, uniform_times(s.tmax));
  for (double t : opts.report_times)
    if (t < 0.0 || t > s.tmax) throw InvalidSpec("report times must lie in [0, tmax]");
  opts.observables = preset_observables(select_regime(p.theta, p.kappa, p.alpha, p.beta));
  opts.eps = std::floor(s.eps * p.n) >= 1.0 ? s.eps : 0.0;
  opts.snapshots = !s.snapshots.empty();
  opts.simulator.event_budget = s.budget;
  const auto records = run_replicas(model, g, opts, s.replicas, s.threads);
  Output out(s.out);
  write_trajectory_csv(out.stream(), records, opts.observables, p);
  if (opts.snapshots) {
    Output snap(s.snapshots);
    write_snapshot_csv(snap.stream(), records, p);
  }
  for (const auto& r : records)
    if (r.overflow) return kExitBudgetOverflow;
  return kExitOk;
}

int cmd_pde(const Settings& s) {
  if (!(s.alpha >= 0 && s.alpha <= 1 && s.beta >= 0 && s.beta <= 1 && s.kappa > 0))
    throw InvalidSpec("alpha, beta must lie in [0,1] and kappa must be positive");
  if (s.scheme != "be" && s.scheme != "bdf2") throw InvalidSpec("scheme must be be or bdf2");
  const RegimeSelection regime = select_regime(s.theta, s.kappa, s.alpha, s.beta);
  const Profile g = initial_profile(s.profile, s.alpha, s.beta);
  const SolverOptions opts{s.grid, s.dt, s.scheme == "bdf2" ? TimeScheme::bdf2 : TimeScheme::backward_euler};
  std::vector<DensityProfile> profiles;
  try {
    for (double t : report_times(s, uniform_times(s.tmax))) profiles.push_back(solve_parabolic(regime, g, t, opts));
  } catch (const std::invalid_argument& e) {
    throw InvalidSpec(e.what());
  }
  Output out(s.out);
  write_profiles_csv(out.stream(), profiles);
  return kExitOk;
}

int cmd_lemmas(const Settings& s) {
  std::vector<int> theta_ns, l1_ns;
  if (!s.n_list.empty()) {
    theta_ns = l1_ns = parse_list<int>(s.n_list, "n-list");
  } else {
    for (int e = 8; e <= 16; ++e) theta_ns.push_back(1 << e);
    for (int e = 8; e <= 13; ++e) l1_ns.push_back(1 << e);
  }
  for (int n : theta_ns)
    if (n < 3) throw InvalidSpec("every N must be at least 3");
  const LemmaReport report = lemmas(theta_ns, l1_ns);
  Output out(s.out);
  write_lemma_csv(out.stream(), report);
  return report.status;
}

int cmd_spectral(const Settings& s) {
  if (!(s.kappa > 0) || s.count < 1) throw InvalidSpec("kappa must be positive and count at least 1");
  const RegimeSelection r = select_regime(1.0, s.kappa, s.alpha, s.beta);
  const auto pairs = robin_eigenpairs(r.m_hat, r.c2_hat, s.count);
  Output out(s.out);
  out.stream() << csv_header("eigen", {"n", "lambda_tilde", "lambda", "A", "B"},
                             {{"m_hat", format_number(r.m_hat)}, {"c2_hat", format_number(r.c2_hat)}})
               << '\n';
  write_eigen_rows(out.stream(), pairs);
  return kExitOk;
}

int cmd_converge(const Settings& s) {
  ExperimentSpec spec;
  spec.theta = s.theta;
  spec.alpha = s.alpha;
  spec.beta = s.beta;
  spec.kappa = s.kappa;
  spec.profile = s.profile;
  spec.n_list = s.n_list.empty() ? std::vector<int>{256, 512, 1024} : parse_list<int>(s.n_list, "n-list");
  spec.replicas = s.replicas;
  spec.report_times = report_times(s, {s.tmax / 2.0, s.tmax});
  spec.observables = parse_list<std::string>(s.observables, "observables");
  spec.eps = s.eps;
  spec.seed = s.seed;
  spec.grid = s.grid;
  spec.dt = s.dt;
  spec.threads = s.threads;
  spec.event_budget = s.budget;
  const ConvergenceReport report = converge(spec);
  Output out(s.out);
  write_convergence_csv(out.stream(), report, spec);
  return report.status;
}

int cmd_kernel_dump(const Settings& s) {
  if (s.n < 3) throw InvalidSpec("n must be at least 3");
  const KernelTable table(s.n);
  Output out(s.out);
  out.stream() << csv_header("kernel", {"x", "p", "tail_left", "tail_right", "theta_minus", "theta_plus"},
                             {{"N", std::to_string(s.n)}, {"c2", format_number(table.c2())}, {"m", format_number(table.m())}})
               << '\n';
  table.write_csv(out.stream());
  return kExitOk;
}

// Value following --config, if any, read before CLI11 so flags override it.
std::string find_config(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--config" && i + 1 < argc) return argv[i + 1];
    if (a.rfind("--config=", 0) == 0) return a.substr(9);
  }
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  Settings s;
  try {
    if (const std::string path = find_config(argc, argv); !path.empty()) {
      std::ifstream in(path);
      if (!in) throw InvalidSpec("cannot read config file '" + path + "'");
      apply_config(s, parse_config(in));
    }
  } catch (const std::exception& e) {
    std::cerr << "ljsep: " << e.what() << '\n';
    return kExitInvalidSpec;
  }

  CLI::App app{"Long-jump exclusion process with reservoirs: simulation and verification"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  app.add_option("--config", config_path, "key = value file; flags override it");
  app.add_option("--n", s.n, "lattice size N");
  app.add_option("--theta", s.theta, "reservoir exponent");
  app.add_option("--alpha", s.alpha, "left reservoir density");
  app.add_option("--beta", s.beta, "right reservoir density");
  app.add_option("--kappa", s.kappa, "reservoir strength");
  app.add_option("--tmax", s.tmax, "final macroscopic time");
  app.add_option("--replicas", s.replicas, "independent replicas");
  app.add_option("--seed", s.seed, "RNG seed");
  app.add_option("--eps", s.eps, "boundary window for averages");
  app.add_option("--grid", s.grid, "PDE grid intervals M");
  app.add_option("--dt", s.dt, "PDE time step");
  app.add_option("--out", s.out, "output CSV path ('-' for stdout)");
  app.add_option("--profile", s.profile, "initial profile: constant, linear, bump, step");
  app.add_option("--times", s.times, "comma-separated report times");
  app.add_option("--n-list", s.n_list, "comma-separated lattice sizes");
  app.add_option("--observables", s.observables, "comma-separated preset observable ids");
  app.add_option("--snapshots", s.snapshots, "snapshot CSV path (simulate)");
  app.add_option("--scheme", s.scheme, "time scheme for pde: be or bdf2");
  app.add_option("--count", s.count, "number of eigenpairs (spectral)");
  app.add_option("--threads", s.threads, "worker threads (0 = hardware)");
  app.add_option("--budget", s.budget, "event budget per replica");

  int status = kExitOk;
  auto add = [&](const char* name, const char* help, int (*fn)(const Settings&)) {
    app.add_subcommand(name, help)->callback([&, fn] { status = fn(s); });
  };
  add("simulate", "simulate replicas and write the trajectory CSV", cmd_simulate);
  add("pde", "solve the hydrodynamic equation and write profiles", cmd_pde);
  add("lemmas", "tabulate the discrete-operator residuals", cmd_lemmas);
  add("spectral", "write the Robin eigen table", cmd_spectral);
  add("converge", "Monte Carlo against PDE convergence table", cmd_converge);
  add("kernel-dump", "write the kernel tables", cmd_kernel_dump);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidSpec;
  } catch (const InvalidSpec& e) {
    std::cerr << "ljsep: invalid spec: " << e.what() << '\n';
    return kExitInvalidSpec;
  } catch (const std::invalid_argument& e) {
    std::cerr << "ljsep: invalid spec: " << e.what() << '\n';
    return kExitInvalidSpec;
  } catch (const std::exception& e) {
    std::cerr << "ljsep: " << e.what() << '\n';
    return 1;
  }
  return status;
}
