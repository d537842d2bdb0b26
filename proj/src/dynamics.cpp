#include "ljsep/dynamics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace ljsep {

ExclusionModel::ExclusionModel(const ModelParams& params)
    : ExclusionModel(params, std::make_shared<const KernelTable>(params.n)) {}

ExclusionModel::ExclusionModel(const ModelParams& params, std::shared_ptr<const KernelTable> kernel)
    : params_(params),
      kernel_(std::move(kernel)),
      sampler_((params.validate(), *kernel_)),
      time_scale_(params.time_acceleration()),
      prefactor_(params.reservoir_prefactor()) {
  if (kernel_->n() != params.n) throw std::invalid_argument("ExclusionModel: kernel built for a different N");
  const int n = params.n;
  rate_empty_.assign(n, 0.0);
  rate_full_.assign(n, 0.0);
  for (int x = 1; x < n; ++x) {
    const double left = kernel_->tail_left(x);
    const double right = kernel_->tail_right(x);
    // c_x(eta; delta) = delta when empty, 1 - delta when occupied
    rate_empty_[x] = prefactor_ * (left * params.alpha + right * params.beta);
    rate_full_[x] = prefactor_ * (left * (1.0 - params.alpha) + right * (1.0 - params.beta));
  }
}

double ExclusionModel::bulk_majorant() const { return 0.5 * (params_.n - 1) * kernel_->bulk_mass(); }

RateBook::RateBook(const ExclusionModel& model, const Configuration& config, bool reservoirs_enabled)
    : bulk_majorant_(model.bulk_majorant()), sites_(model.n() - 1), leaves_(1) {
  while (leaves_ < sites_) leaves_ *= 2;
  tree_.assign(2 * static_cast<std::size_t>(leaves_), 0.0);
  if (reservoirs_enabled) {
    for (int x = 1; x <= sites_; ++x) tree_[leaves_ + x - 1] = model.flip_rate(x, config.occupied(x));
  }
  resum();
}

void RateBook::update(int x, double rate) {
  std::size_t i = static_cast<std::size_t>(leaves_ + x - 1);
  tree_[i] = rate;
  for (i /= 2; i >= 1; i /= 2) tree_[i] = tree_[2 * i] + tree_[2 * i + 1];
}

int RateBook::select(double target) const {
  std::size_t i = 1;
  while (i < static_cast<std::size_t>(leaves_)) {
    const double left = tree_[2 * i];
    if (target < left || tree_[2 * i + 1] <= 0.0) {
      i = 2 * i;
    } else {
      target -= left;
      i = 2 * i + 1;
    }
  }
  return static_cast<int>(i) - leaves_ + 1;
}

void RateBook::resum() {
  for (std::size_t i = static_cast<std::size_t>(leaves_) - 1; i >= 1; --i) tree_[i] = tree_[2 * i] + tree_[2 * i + 1];
}

Simulator::Simulator(const ExclusionModel& model, Configuration initial, CounterRng rng, SimulatorOptions options)
    : model_(model),
      config_(std::move(initial)),
      rng_(rng),
      options_(options),
      rates_(model, config_, options.reservoirs_enabled),
      bulk_site_rate_(0.5 * model.kernel().bulk_mass()) {
  if (config_.n() != model.n()) throw std::invalid_argument("Simulator: configuration size does not match the model");
  clock_.time_scale = model.time_scale();
}

EventKind Simulator::apply_event(double selector) {
  const double bulk = options_.bulk_enabled ? rates_.bulk_majorant() : 0.0;
  if (selector < bulk) {
    const int sites = config_.sites();
    const int x = std::min(sites, 1 + static_cast<int>(selector / bulk_site_rate_));
    const long y = x + model_.sampler().sample(rng_);
    ++stats_.proposals;
    if (y >= 1 && y <= sites && config_.occupied(x) != config_.occupied(static_cast<int>(y))) {
      const int yi = static_cast<int>(y);
      config_.swap(x, yi);
      if (options_.reservoirs_enabled) {
        rates_.update(x, model_.flip_rate(x, config_.occupied(x)));
        rates_.update(yi, model_.flip_rate(yi, config_.occupied(yi)));
      }
      ++stats_.swaps;
      return EventKind::swap;
    }
    return EventKind::null_exchange;
  }
  const int x = rates_.select(selector - bulk);
  config_.flip(x);
  rates_.update(x, model_.flip_rate(x, config_.occupied(x)));
  ++stats_.flips;
  return EventKind::flip;
}

EventKind Simulator::step() {
  const double total = (options_.bulk_enabled ? rates_.bulk_majorant() : 0.0) + rates_.total_flip();
  if (!(total > 0.0)) throw std::logic_error("Simulator::step: configuration is absorbing");
  clock_.micro_time += rng_.exponential() / total;
  ++clock_.event_count;
  return apply_event(rng_.uniform() * total);
}

bool Simulator::advance_to(double macro_time) {
  const double target = macro_time * clock_.time_scale;
  const double bulk = options_.bulk_enabled ? rates_.bulk_majorant() : 0.0;
  // Periodic resummation bounds rounding drift in tree sums over long runs.
  std::uint64_t since_resum = 0;
  while (true) {
    const double total = bulk + rates_.total_flip();
    if (!(total > 0.0)) {
      clock_.micro_time = std::max(clock_.micro_time, target);
      return true;
    }
    const double hold = rng_.exponential() / total;
    if (clock_.micro_time + hold > target) {
      // Memorylessness: the residual holding time is redrawn after the pause.
      clock_.micro_time = std::max(clock_.micro_time, target);
      return true;
    }
    if (clock_.event_count >= options_.event_budget) return false;
    clock_.micro_time += hold;
    ++clock_.event_count;
    apply_event(rng_.uniform() * total);
    if (++since_resum == (1u << 20)) {
      rates_.resum();
      since_resum = 0;
    }
  }
}

TrajectoryRecord run_from(const ExclusionModel& model, Configuration initial, const RunOptions& options,
                          std::uint64_t replica) {
  CounterRng rng(model.params().seed, replica);
  Simulator sim(model, std::move(initial), rng, options.simulator);

  TrajectoryRecord rec;
  rec.replica = replica;
  rec.times = options.report_times;
  if (!std::is_sorted(rec.times.begin(), rec.times.end()))
    throw std::invalid_argument("run: report times must be sorted");
  if (!rec.times.empty() && (rec.times.front() < 0.0 || rec.times.back() > model.params().t_max + 1e-12))
    throw std::invalid_argument("run: report times must lie in [0, t_max]");

  const int n = model.n();
  std::vector<Eigen::VectorXd> weights;
  weights.reserve(options.observables.size());
  for (const auto& g : options.observables) weights.push_back(g.on_lattice(n));
  const bool averages = options.eps > 0.0 && std::floor(options.eps * n) >= 1.0;

  const auto nt = static_cast<Eigen::Index>(rec.times.size());
  const auto no = static_cast<Eigen::Index>(weights.size());
  rec.values = Eigen::MatrixXd::Constant(nt, no, std::numeric_limits<double>::quiet_NaN());
  rec.left_average.assign(rec.times.size(), std::numeric_limits<double>::quiet_NaN());
  rec.right_average.assign(rec.times.size(), std::numeric_limits<double>::quiet_NaN());

  for (Eigen::Index k = 0; k < nt; ++k) {
    if (!sim.advance_to(rec.times[k])) {
      rec.overflow = true;
      break;
    }
    const Configuration& c = sim.config();
    for (Eigen::Index j = 0; j < no; ++j) rec.values(k, j) = empirical_pairing(c, weights[j]);
    if (averages) {
      rec.left_average[k] = boundary_average(c, Side::left, options.eps);
      rec.right_average[k] = boundary_average(c, Side::right, options.eps);
    }
    if (options.snapshots) rec.snapshots.push_back(c);
  }
  rec.stats = sim.stats();
  return rec;
}

TrajectoryRecord run(const ExclusionModel& model, const std::function<double(double)>& profile,
                     const RunOptions& options, std::uint64_t replica) {
  // Initial sample uses a stream disjoint from the dynamics stream of every replica.
  CounterRng init_rng(model.params().seed, replica | (std::uint64_t{1} << 63));
  Configuration initial = sample_product_measure(profile, model.n(), init_rng);
  return run_from(model, std::move(initial), options, replica);
}

std::vector<TrajectoryRecord> run_replicas(const ExclusionModel& model, const std::function<double(double)>& profile,
                                           const RunOptions& options, std::uint64_t replicas, unsigned threads) {
  std::vector<TrajectoryRecord> out(replicas);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(replicas, 1)));
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::uint64_t r = next++; r < replicas; r = next++) out[r] = run(model, profile, options, r);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace ljsep
