#ifndef LJSEP_SAMPLER_HPP
#define LJSEP_SAMPLER_HPP

#include <cstdint>
#include <vector>

#include "ljsep/kernel.hpp"
#include "ljsep/rng.hpp"

namespace ljsep {

/// O(1) sampler of signed displacements z in {+-1, ..., +-(N-2)} with
/// probability p(z)/P_N, built on an alias table over |z|.
class JumpSampler {
 public:
  explicit JumpSampler(const KernelTable& kernel);

  long sample(CounterRng& rng) const {
    const std::uint32_t bucket = rng.below(static_cast<std::uint32_t>(threshold_.size()));
    const std::uint64_t bits = rng.next_u64();
    const double coin = static_cast<double>(bits >> 11) * 0x1.0p-53;
    const long magnitude = coin < threshold_[bucket] ? static_cast<long>(bucket) + 1 : alias_[bucket] + 1;
    return (bits & 1u) ? magnitude : -magnitude;
  }

  /// Target probability of displacement z (both signs counted separately).
  double probability(long z) const;

  long max_jump() const { return static_cast<long>(threshold_.size()); }

 private:
  std::vector<double> threshold_;
  std::vector<std::int32_t> alias_;
  std::vector<double> magnitude_prob_;
};

}  // namespace ljsep

#endif  // LJSEP_SAMPLER_HPP
