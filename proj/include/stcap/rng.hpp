#pragma once

#include <cmath>
#include <cstdint>

namespace stcap::mc {

inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Counter-based stream: the n-th output depends only on (seed, trial, lane,
/// index, n), so any trial can be replayed in isolation on any thread.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t trial, std::uint64_t lane,
             std::uint64_t index = 0) noexcept
      : key_(splitmix64(splitmix64(splitmix64(splitmix64(seed) ^ trial) ^ lane) ^ index)) {}

  std::uint64_t next_u64() noexcept { return splitmix64(key_ + 0x632be59bd9b4e019ULL * ++counter_); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Unit-mean exponential.
  double exponential() noexcept { return -std::log1p(-uniform()); }

  std::uint64_t draws() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace stcap::mc
