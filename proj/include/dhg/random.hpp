#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace dhg {

// Seedable generator with portable output. std::mt19937_64 has a fully
// specified output sequence; the standard distributions do not, so bounded
// integers and unit reals are derived here.
class Rng {
 public:
  static constexpr std::string_view algorithm_id = "mt19937_64/lemire-bounded/53bit-unit";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform real in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

/// Seed for an independent stream, derived from a master seed and a stream
/// index (splitmix64 finalizer over the combined value).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

}  // namespace dhg
