#pragma once

#include <cstdint>
#include <random>

namespace signet {

/// All randomness flows through one mt19937_64 stream per trial. Trial streams
/// are derived from the master seed with the splitmix64 output function, so
/// results do not depend on how trials are scheduled across threads.
inline std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
  std::uint64_t z = master_seed + (trial_index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Uniform double in [0, 1) from the top 53 bits of one generator word.
/// Used instead of std::uniform_real_distribution to keep draws bit-exact
/// for a given seed.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::mt19937_64 make_trial_rng(std::uint64_t master_seed, std::uint64_t trial_index) {
  return std::mt19937_64(trial_seed(master_seed, trial_index));
}

}  // namespace signet
