#pragma once

#include <cstdint>
#include <random>

namespace flatcert {

/// Random stream keyed by (seed, stream, index).
///
/// Every sample loop derives its generator from the sample's own key, so the
/// draws for sample i never depend on which thread ran samples 0..i-1.
class SampleRng {
 public:
  SampleRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

  double uniform() { return unit_(engine_); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal() { return normal_(engine_); }
  std::uint64_t bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace flatcert
