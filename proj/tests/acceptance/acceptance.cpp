// Acceptance suite: one PASS/FAIL line per criterion. Run with criterion
// numbers to select a subset; --cli <path> adds the command-line rerun to
// the determinism check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ljsep/csv.hpp"
#include "ljsep/discrete_ops.hpp"
#include "ljsep/dynamics.hpp"
#include "ljsep/exact.hpp"
#include "ljsep/harness.hpp"
#include "ljsep/kernel.hpp"
#include "ljsep/pde.hpp"
#include "ljsep/regime.hpp"
#include "ljsep/spectral.hpp"
#include "ljsep/test_functions.hpp"

using namespace ljsep;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

const std::vector<double> kThetas{-0.5, 0.0, 0.5, 1.0, 2.0};

// Euler-Maclaurin tail: sum_{z >= K} z^-s for s = 2, 3.
double zeta_oracle(int s, long k = 2000) {
  double sum = 0.0;
  for (long z = k - 1; z >= 1; --z) sum += std::pow(static_cast<double>(z), -s);
  const double kd = static_cast<double>(k);
  if (s == 3) return sum + 1.0 / (2.0 * kd * kd) + 1.0 / (2.0 * kd * kd * kd) + 1.0 / (4.0 * std::pow(kd, 4));
  return sum + 1.0 / kd + 1.0 / (2.0 * kd * kd) + 1.0 / (6.0 * kd * kd * kd);
}

Outcome criterion1() {
  Outcome o;
  constexpr double kZeta3 = 1.2020569031595942854;
  const KernelTable table(64);
  const double c2_oracle = 1.0 / (2.0 * zeta_oracle(3));
  const double m_oracle = c2_oracle * zeta_oracle(2);
  const double e_c2 = std::abs(table.c2() - 1.0 / (2.0 * kZeta3));
  const double e_c2o = std::abs(table.c2() - c2_oracle);
  const double e_m = std::abs(table.m() - table.c2() * pi * pi / 6.0);
  const double e_mo = std::abs(table.m() - m_oracle);
  o.require(e_c2 < 1e-10 && e_c2o < 1e-10, "c2 mismatch");
  o.require(e_m < 1e-9 && e_mo < 1e-9, "m mismatch");
  o.detail += fmt("|c2-1/(2zeta3)|=%.1e", e_c2) + fmt(" |c2-oracle|=%.1e", e_c2o) +
              fmt(" |m-c2 pi^2/6|=%.1e", e_m) + fmt(" |m-oracle|=%.1e", e_mo);
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::vector<int> ns;
  for (int e = 8; e <= 16; ++e) ns.push_back(1 << e);
  const LemmaReport r = lemmas(ns, {});
  double prev = INFINITY;
  for (const LemmaRow& row : r.rows) {
    o.require(row.residual < prev, "not decreasing at N=" + std::to_string(row.n));
    prev = row.residual;
  }
  o.require(r.theta_envelope_ratio < 3.0, "envelope ratio >= 3");
  o.detail += fmt("residual(2^8)=%.3e", r.rows.front().residual) + fmt(" residual(2^16)=%.3e", r.rows.back().residual) +
              fmt(" max/min(residual log N)=%.3f", r.theta_envelope_ratio);
  return o;
}

Outcome criterion3() {
  Outcome o;
  const std::vector<TestFunction> gs{preset::sine(1), preset::square(), preset::cubic_product()};
  std::vector<std::vector<double>> res(gs.size());
  for (int e = 8; e <= 13; ++e) {
    const KernelTable k(1 << e);
    for (std::size_t j = 0; j < gs.size(); ++j) res[j].push_back(l1conv_residual(gs[j], k));
  }
  for (std::size_t j = 0; j < gs.size(); ++j) {
    bool mono = true;
    for (std::size_t k = 0; k + 1 < res[j].size(); ++k) mono = mono && res[j][k + 1] < res[j][k];
    o.require(mono, gs[j].id() + " not monotone decreasing");
    std::string col = " " + gs[j].id() + ":";
    for (double v : res[j]) col += fmt(" %.4f", v);
    o.detail += col;
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  constexpr std::uint64_t kReplicas = 100000;
  const std::vector<double> times{0.05, 0.2};
  const Profile g = initial_profile("bump", 0.2, 0.8);
  double worst = 0.0;
  for (int n : {4, 5, 6}) {
    for (double theta : kThetas) {
      ModelParams p;
      p.n = n;
      p.theta = theta;
      p.alpha = 0.2;
      p.beta = 0.8;
      p.t_max = 0.2;
      p.seed = 20240 + n;
      const ExclusionModel model(p);
      const Eigen::MatrixXd q = exact_generator_matrix(model);
      const Eigen::VectorXd p0 = product_measure_vector(n, g);
      std::vector<Eigen::VectorXd> expected;
      for (double t : times) expected.push_back(site_densities(n, evolve_law(q, p0, t)));

      std::vector<Eigen::VectorXd> sum(times.size(), Eigen::VectorXd::Zero(n - 1));
      for (std::uint64_t r = 0; r < kReplicas; ++r) {
        CounterRng init(p.seed, r | (std::uint64_t{1} << 63));
        Simulator sim(model, sample_product_measure(g, n, init), CounterRng(p.seed, r));
        for (std::size_t k = 0; k < times.size(); ++k) {
          sim.advance_to(times[k]);
          for (int x = 1; x < n; ++x) sum[k][x - 1] += sim.config().occupied(x);
        }
      }
      for (std::size_t k = 0; k < times.size(); ++k) {
        for (int x = 1; x < n; ++x) {
          const double mean = sum[k][x - 1] / kReplicas;
          const double e = expected[k][x - 1];
          const double se = std::sqrt(std::max(e * (1.0 - e), 1e-12) / kReplicas);
          const double z = std::abs(mean - e) / se;
          worst = std::max(worst, z);
          if (z >= 4.0)
            o.require(false, "N=" + std::to_string(n) + fmt(" theta=%g", theta) + fmt(" t=%g", times[k]) +
                                 " x=" + std::to_string(x) + fmt(" z=%.2f", z));
        }
      }
    }
  }
  o.detail += fmt(" worst |z|=%.2f over 150 site/time/theta cells", worst);
  return o;
}

Outcome criterion5() {
  Outcome o;
  double worst_exact = 0.0;
  for (double rho : {0.3, 0.5}) {
    for (int n = 3; n <= 10; ++n) {
      for (double theta : kThetas) {
        ModelParams p;
        p.n = n;
        p.theta = theta;
        p.alpha = p.beta = rho;
        const ExclusionModel model(p);
        const Eigen::VectorXd nu = product_measure_vector(n, [rho](double) { return rho; });
        const Eigen::RowVectorXd flux = nu.transpose() * exact_generator_matrix(model);
        worst_exact = std::max(worst_exact, flux.cwiseAbs().maxCoeff());
      }
    }
  }
  o.require(worst_exact < 1e-9, "exact generator does not annihilate the product measure");
  o.detail += fmt("max |nu Q|=%.1e;", worst_exact);

  // Time-averaged density from stationary starts, N = 512.
  constexpr int kN = 512;
  constexpr int kReplicas = 16;
  constexpr int kSamples = 50;
  for (double rho : {0.3, 0.5}) {
    for (double theta : kThetas) {
      ModelParams p;
      p.n = kN;
      p.theta = theta;
      p.alpha = p.beta = rho;
      p.t_max = 0.2;
      p.seed = 77;
      const ExclusionModel model(p);
      RunOptions opts;
      for (int k = 1; k <= kSamples; ++k) opts.report_times.push_back(p.t_max * k / kSamples);
      opts.observables = {preset::constant(1.0)};
      opts.eps = 0.0;
      const auto records = run_replicas(model, [rho](double) { return rho; }, opts, kReplicas);
      std::vector<double> averages;
      for (const auto& rec : records) averages.push_back(rec.values.col(0).mean());
      const SampleStats s = sample_stats(averages);
      const double z = std::abs(s.mean - rho) / s.standard_error;
      o.require(z < 3.0, fmt("rho=%g", rho) + fmt(" theta=%g", theta) + fmt(" z=%.2f", z));
      o.detail += fmt(" [rho=%g", rho) + fmt(" th=%g", theta) + fmt(" z=%.2f]", z);
    }
  }
  return o;
}

// Classical RK4 on d/dt y = kappa (V0 - V1 y).
double rk4_reaction(double y, double v0, double v1, double kappa, double t, int steps) {
  const double h = t / steps;
  auto f = [&](double v) { return kappa * (v0 - v1 * v); };
  for (int s = 0; s < steps; ++s) {
    const double k1 = f(y), k2 = f(y + 0.5 * h * k1), k3 = f(y + 0.5 * h * k2), k4 = f(y + h * k3);
    y += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  return y;
}

Outcome criterion6() {
  Outcome o;
  const double c2 = kernel_constants().c2;
  const double m = kernel_constants().m;
  {
    const RegimeSelection r = select_regime(0.5, 1.0, 0.0, 0.0);
    const DensityProfile rho = solve_parabolic(
        r, [](double u) { return std::sin(pi * u); }, 0.1, {256, 1e-4});
    double err = 0.0;
    for (int i = 0; i <= 256; ++i)
      err = std::max(err, std::abs(rho.values[i] - std::exp(-c2 * pi * pi * 0.1) * std::sin(pi * rho.node(i))));
    o.require(err < 1e-4, "sine decay");
    o.detail += fmt("sine decay err=%.2e", err);
  }
  {
    const RegimeSelection r = select_regime(0.5, 1.0, 0.2, 0.8);
    const DensityProfile rho = solve_parabolic(r, initial_profile("bump", 0.2, 0.8), 20.0, {256, 1e-2});
    double err = 0.0;
    for (int i = 0; i <= 256; ++i) err = std::max(err, std::abs(rho.values[i] - (0.2 + 0.6 * rho.node(i))));
    o.require(err < 1e-6, "Dirichlet steady state");
    o.detail += fmt(" dirichlet steady err=%.2e", err);
  }
  {
    const RegimeSelection r = select_regime(1.0, 1.0, 0.2, 0.8);
    const DensityProfile rho = solve_parabolic(r, initial_profile("bump", 0.2, 0.8), 40.0, {512, 1e-2});
    const double a = m * (0.8 - 0.2) / (m + 2.0 * c2);
    const double start = 0.2 + a * c2 / m;
    double err = 0.0;
    for (int i = 0; i <= 512; ++i) err = std::max(err, std::abs(rho.values[i] - (start + a * rho.node(i))));
    o.require(err < 1e-5, "Robin steady state");
    o.detail += fmt(" robin steady err=%.2e", err);
  }
  {
    const RegimeSelection r = select_regime(2.0, 1.0, 0.2, 0.8);
    const ProfileTrajectory tr = solve_trajectory(r, initial_profile("bump", 0.2, 0.8), 0.5, {256, 1e-3});
    double drift = 0.0;
    const double m0 = mass(tr.at(0));
    for (std::size_t k = 0; k < tr.times.size(); ++k) drift = std::max(drift, std::abs(mass(tr.at(k)) - m0));
    o.require(drift < 1e-8, "Neumann mass");
    o.detail += fmt(" neumann mass drift=%.1e", drift);
  }
  {
    double err = 0.0;
    for (double rb : {0.3, 0.7}) {
      const DensityProfile rho = solve_reaction([](double) { return 0.0; }, rb, rb, 1.0, 0.3, 40);
      for (int i = 4; i < 40; i += 4) {  // 9 interior nodes plus the midpoint below
        const Potentials p = continuum_potentials(rho.node(i), rb, rb, c2);
        err = std::max(err, std::abs(rho.values[i] - rk4_reaction(0.0, p.v0, p.v1, 1.0, 0.3, 4000)));
        err = std::max(err, std::abs(rho.values[i] - rb * (1.0 - std::exp(-p.v1 * 0.3))));
      }
      const Potentials mid = continuum_potentials(0.5, rb, rb, c2);
      err = std::max(err, std::abs(rho.values[20] - rk4_reaction(0.0, mid.v0, mid.v1, 1.0, 0.3, 4000)));
    }
    o.require(err < 1e-8, "reaction explicit formula");
    o.detail += fmt(" reaction vs RK4 err=%.1e", err);
    const DensityProfile s = stationary_profile(select_regime(-1.0, 1.0, 1.0, 0.0), 64);
    o.require(std::abs(s.values[32] - 0.5) < 1e-14, "reaction stationary midpoint");
  }
  {
    const RegimeSelection r = select_regime(0.0, 1.0, 0.4, 0.4);
    const DensityProfile rho = solve_parabolic(r, [](double) { return 0.4; }, 0.2, {128, 1e-3});
    const double dev = (rho.values.array() - 0.4).abs().maxCoeff();
    o.require(dev < 1e-13, "reaction-diffusion stationarity");
    o.detail += fmt(" rd stationarity dev=%.1e", dev);
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  constexpr double kFloor = 1e-11;  // residuals already at round-off level
  constexpr double kT = 0.1;
  double worst = INFINITY;
  for (double theta : kThetas) {
    const RegimeSelection r = select_regime(theta, 1.0, 0.2, 0.8);
    const WeakForm form = theta <= 0.0 ? WeakForm::reaction : theta < 1.0 ? WeakForm::dirichlet : WeakForm::robin;
    // Odd cosines are orthogonal to the symmetric bump, so Neumann uses data
    // with nonzero projection on every cosine.
    const Profile g = theta > 1.0 ? Profile([](double u) { return 0.2 + 0.6 * u * u; })
                                  : initial_profile("bump", 0.2, 0.8);
    const ProfileTrajectory coarse = solve_trajectory(r, g, kT, {128, 1e-3, TimeScheme::bdf2});
    const ProfileTrajectory fine = solve_trajectory(r, g, kT, {256, 5e-4, TimeScheme::bdf2});
    const ProfileTrajectory coarse_be = solve_trajectory(r, g, kT, {128, 1e-3});
    const ProfileTrajectory fine_be = solve_trajectory(r, g, kT, {256, 5e-4});
    std::string line = fmt(" [theta=%g", theta);
    for (const TestFunction& G : preset_observables(r)) {
      const double a = std::abs(weak_form_residual(form, coarse, g, G, kT));
      const double b = std::abs(weak_form_residual(form, fine, g, G, kT));
      const double ratio = a / b;
      const bool ok = a < kFloor || ratio >= 3.0;
      if (a >= kFloor) worst = std::min(worst, ratio);
      o.require(ok, fmt("theta=%g ", theta) + G.id() + fmt(" ratio=%.2f", ratio));
      const double be = std::abs(weak_form_residual(form, coarse_be, g, G, kT)) /
                        std::abs(weak_form_residual(form, fine_be, g, G, kT));
      line += " " + G.id() + fmt(":%.2f", ratio) + fmt("(be %.2f)", be);
    }
    o.detail += line + "]";
  }
  o.detail = fmt("min bdf2 ratio=%.2f;", worst) + o.detail;
  // Frozen field rho_t = g: residual must not vanish under refinement.
  {
    const RegimeSelection r = select_regime(0.5, 1.0, 0.2, 0.8);
    const Profile g = initial_profile("bump", 0.2, 0.8);
    double last = 0.0;
    for (int grid : {128, 256, 512}) {
      ProfileTrajectory frozen = solve_trajectory(r, g, kT, {grid, 1e-2});
      for (auto& v : frozen.values) v = frozen.values.front();
      last = std::abs(weak_form_residual(WeakForm::dirichlet, frozen, g, preset::sine(1), kT));
    }
    o.require(last > 1e-2, "frozen field residual vanished");
    o.detail += fmt(" frozen-field residual=%.3f", last);
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (double theta : kThetas) {
    ExperimentSpec spec;
    spec.theta = theta;
    spec.alpha = 0.2;
    spec.beta = 0.8;
    spec.profile = "bump";
    spec.n_list = {256, 512, 1024};
    spec.replicas = 64;
    spec.report_times = {0.05, 0.15};
    spec.seed = 8;
    const auto start = std::chrono::steady_clock::now();
    const ConvergenceReport report = converge(spec);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    double worst_final = 0.0;
    for (const ConvergenceRow& row : report.rows)
      if (row.n == 1024) worst_final = std::max(worst_final, row.abs_error);
    o.require(report.status != kExitBudgetOverflow, fmt("theta=%g overflow", theta));
    o.require(errors_decrease(report.rows), fmt("theta=%g trend violated", theta));
    o.require(worst_final < 0.05, fmt("theta=%g", theta) + fmt(" error at 2^10=%.3f", worst_final));
    o.detail += fmt(" [theta=%g", theta) + fmt(" max err@1024=%.4f", worst_final) + fmt(" %.0fs]", secs);
    for (const ConvergenceRow& row : report.rows)
      std::printf("    c8 theta=%g N=%d %s t=%g mc=%.5f se=%.5f pde=%.5f err=%.5f\n", theta, row.n,
                  row.observable.c_str(), row.time, row.mc_mean, row.mc_stderr, row.pde_value, row.abs_error);
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  const RegimeSelection r = select_regime(1.0, 1.0, 0.2, 0.8);
  const auto pairs = robin_eigenpairs(r.m_hat, r.c2_hat, 20);
  double eq = 0.0;
  for (const EigenPair& p : pairs) eq = std::max(eq, transcendental_residual(p.lambda_tilde, r.m_hat, r.c2_hat));
  o.require(eq < 1e-9, "transcendental equation");

  const Quadrature gl = gauss_legendre(256);
  double ortho = 0.0;
  for (std::size_t a = 0; a < pairs.size(); ++a)
    for (std::size_t b = 0; b <= a; ++b) {
      const double ip = gl.integrate([&](double u) { return eigenfunction(pairs[a], u) * eigenfunction(pairs[b], u); });
      ortho = std::max(ortho, std::abs(ip - (a == b ? 1.0 : 0.0)));
    }
  o.require(ortho < 1e-8, "orthonormality");

  const SolverOptions opts{256, 1e-3};
  const ProfileTrajectory ta = solve_trajectory(r, initial_profile("bump", 0.2, 0.8), 0.1, opts);
  const ProfileTrajectory tb = solve_trajectory(r, initial_profile("step", 0.2, 0.8), 0.1, opts);
  double prev = INFINITY;
  bool decreasing = true;
  std::string vs;
  for (int k = 1; k <= 10; ++k) {
    const std::size_t level = static_cast<std::size_t>(10 * k);  // t = 0.01 k
    DensityProfile diff = ta.at(level);
    diff.values -= tb.values[level];
    const double v = lyapunov_V(diff, pairs, 20);
    decreasing = decreasing && v <= prev + 1e-12;
    prev = v;
    if (k == 1 || k == 10) vs += fmt(" V=%.4e", v);
  }
  o.require(decreasing, "V(t) increased");

  const auto neumann = robin_eigenpairs(0.0, r.c2_hat, 20);
  double nd = 0.0;
  for (const EigenPair& p : neumann) {
    nd = std::max(nd, std::abs(p.lambda_tilde - p.index * pi));
    for (int i = 0; i <= 100; ++i) {
      const double u = i / 100.0;
      nd = std::max(nd, std::abs(eigenfunction(p, u) - std::cos(p.index * pi * u) / std::sqrt(0.5)));
    }
  }
  o.require(nd < 1e-13, "Neumann reduction");
  o.detail += fmt("eq residual=%.1e", eq) + fmt(" ortho=%.1e", ortho) + vs + fmt(" neumann dev=%.1e", nd);
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome criterion10(const std::string& cli) {
  Outcome o;
  auto converge_csv = [](unsigned threads) {
    ExperimentSpec spec;
    spec.theta = 1.0;
    spec.n_list = {32, 64};
    spec.replicas = 8;
    spec.report_times = {0.02, 0.04};
    spec.grid = 128;
    spec.dt = 1e-3;
    spec.threads = threads;
    std::ostringstream os;
    write_convergence_csv(os, converge(spec), spec);
    return os.str();
  };
  const std::string a = converge_csv(1);
  o.require(a == converge_csv(1), "converge CSV differs between reruns");
  o.require(a == converge_csv(3), "converge CSV depends on the thread count");

  auto simulate_csv = [] {
    ModelParams p;
    p.n = 48;
    p.theta = -0.5;
    p.alpha = 0.1;
    p.beta = 0.9;
    p.t_max = 0.05;
    p.seed = 99;
    const ExclusionModel model(p);
    RunOptions opts;
    opts.report_times = {0.0, 0.025, 0.05};
    opts.observables = preset_observables(select_regime(p.theta, p.kappa, p.alpha, p.beta));
    opts.snapshots = true;
    const auto records = run_replicas(model, initial_profile("step", p.alpha, p.beta), opts, 4, 2);
    std::ostringstream os;
    write_trajectory_csv(os, records, opts.observables, p);
    write_snapshot_csv(os, records, p);
    return os.str();
  };
  o.require(simulate_csv() == simulate_csv(), "trajectory CSV differs between reruns");

  if (!cli.empty()) {
    const std::vector<std::string> commands{
        "simulate --n 64 --theta 0.5 --replicas 3 --tmax 0.05 --seed 5",
        "converge --theta 2 --n-list 32,64 --replicas 4 --tmax 0.02 --grid 64",
        "pde --theta 0 --tmax 0.05 --grid 64",
        "spectral --count 10",
        "lemmas --n-list 64,128",
        "kernel-dump --n 32"};
    int idx = 0;
    for (const std::string& c : commands) {
      std::string out[2];
      for (int rep = 0; rep < 2; ++rep) {
        const std::string path = "acceptance_det_" + std::to_string(idx) + "_" + std::to_string(rep) + ".csv";
        const std::string cmd = "\"" + cli + "\" " + c + " --out " + path + " > /dev/null 2>&1";
        const int rc = std::system(cmd.c_str());
        (void)rc;
        out[rep] = read_file(path);
        std::remove(path.c_str());
      }
      o.require(!out[0].empty() && out[0] == out[1], "CLI output differs: " + c);
      o.require(out[0].rfind("# ljsep ", 0) == 0, "missing header: " + c);
      ++idx;
    }
    o.detail += std::to_string(commands.size()) + " CLI subcommands rerun byte-identical;";
  }
  o.detail += " library converge/simulate CSV identical across reruns and thread counts";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> selected;
  std::string cli;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--cli" && i + 1 < argc) cli = argv[++i];
    else selected.insert(std::atoi(a.c_str()));
  }
  struct Entry {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Entry> entries{
      {1, "kernel constants", 1.0, criterion1},
      {2, "theta-sum envelope", 10.0, criterion2},
      {3, "discrete Laplacian residuals", 30.0, criterion3},
      {4, "exact-oracle agreement", 300.0, criterion4},
      {5, "stationarity", 120.0, criterion5},
      {6, "PDE closed forms", 60.0, criterion6},
      {7, "weak-form residual refinement", 120.0, criterion7},
      {8, "hydrodynamic convergence trend", 1800.0, criterion8},
      {9, "spectral suite", 10.0, criterion9},
      {10, "determinism", INFINITY, [&] { return criterion10(cli); }},
  };
  int failures = 0;
  for (const Entry& e : entries) {
    if (!selected.empty() && !selected.count(e.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = e.run();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > e.budget_seconds) o.require(false, fmt("runtime %.1fs over budget", secs));
    std::printf("%s criterion %d (%s) [%.2fs]: %s\n", o.pass ? "PASS" : "FAIL", e.id, e.name, secs, o.detail.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
