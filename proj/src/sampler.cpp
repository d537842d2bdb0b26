#include "ljsep/sampler.hpp"

#include <numeric>
#include <stdexcept>

namespace ljsep {

JumpSampler::JumpSampler(const KernelTable& kernel) {
  const int k = kernel.n() - 2;
  if (k < 1) throw std::invalid_argument("JumpSampler: lattice too small");
  magnitude_prob_.resize(k);
  for (int z = 1; z <= k; ++z) magnitude_prob_[z - 1] = kernel.prob(z);
  const double total = std::accumulate(magnitude_prob_.begin(), magnitude_prob_.end(), 0.0);
  for (double& p : magnitude_prob_) p /= total;

  // Vose's alias construction.
  threshold_.assign(k, 1.0);
  alias_.assign(k, 0);
  std::vector<double> scaled(k);
  std::vector<int> small, large;
  for (int i = 0; i < k; ++i) {
    scaled[i] = magnitude_prob_[i] * k;
    (scaled[i] < 1.0 ? small : large).push_back(i);
  }
  while (!small.empty() && !large.empty()) {
    const int s = small.back();
    small.pop_back();
    const int l = large.back();
    threshold_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] = (scaled[l] + scaled[s]) - 1.0;
    if (scaled[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
  for (int i : large) { threshold_[i] = 1.0; alias_[i] = i; }
  for (int i : small) { threshold_[i] = 1.0; alias_[i] = i; }
}

double JumpSampler::probability(long z) const {
  const long a = z < 0 ? -z : z;
  if (a < 1 || a > max_jump()) return 0.0;
  return 0.5 * magnitude_prob_[a - 1];
}

}  // namespace ljsep
