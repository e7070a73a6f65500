#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace latticefire {

// Domain-separation tags for the independent randomness sources hanging off
// one master seed. Adding a tag never perturbs existing streams.
enum class StreamPurpose : std::uint64_t {
  kInitial = 1,            // initial occupancy, keyed by site
  kWalk = 2,               // jump times and directions, keyed by particle id
  kRecovery = 3,           // recovery marks, keyed by particle id
  kDistinguishedPath = 4,  // per-cell auxiliary paths, keyed by cell index
  kTrial = 5,              // replica-level seed derivation
  kNuSampler = 6,          // conditioned-cloud sampling
  kSynthetic = 7,          // synthetic data in tests/coverage checks
};

namespace rng_detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace rng_detail

// Deterministic keyed random stream (xoshiro256++ core, splitmix64 keying).
// Streams with equal (master_seed, purpose, key) produce bit-identical
// sequences on every platform; distinct keys give independent-quality
// sequences. Distribution samplers use only inverse-CDF / process
// constructions so outputs are platform-stable as well.
class RngStream {
 public:
  RngStream() : s_{1, 2, 3, 4} {}

  static RngStream from_words(std::uint64_t w0, std::uint64_t w1) {
    RngStream r;
    std::uint64_t acc = w0;
    r.s_[0] = rng_detail::splitmix64(acc);
    r.s_[1] = rng_detail::splitmix64(acc);
    acc ^= w1 * 0xd6e8feb86659fd93ULL;
    r.s_[2] = rng_detail::splitmix64(acc);
    r.s_[3] = rng_detail::splitmix64(acc);
    if ((r.s_[0] | r.s_[1] | r.s_[2] | r.s_[3]) == 0) r.s_[3] = 1;
    return r;
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rng_detail::rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rng_detail::rotl(s_[3], 45);
    return result;
  }

  // Uniform double in [0, 1), 53 significant bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Exp(rate) via inverse CDF; uniform() < 1 keeps the log argument positive.
  double exponential(double rate) {
    return -std::log1p(-uniform()) / rate;
  }

  // Unbiased integer in [0, n) by rejection.
  std::uint64_t uniform_int(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  // Poisson(mean) as the arrival count of a unit-rate process run to `mean`.
  // Monotone in `mean` for a fixed starting state, which the density
  // couplings rely on.
  std::int64_t poisson(double mean) {
    std::int64_t n = 0;
    double acc = exponential(1.0);
    while (acc <= mean) {
      ++n;
      acc += exponential(1.0);
    }
    return n;
  }

  // Sorted arrival times of a rate-`intensity` Poisson process on [0, t_end).
  std::vector<double> poisson_process(double intensity, double t_end) {
    std::vector<double> times;
    double t = exponential(intensity);
    while (t < t_end) {
      times.push_back(t);
      t += exponential(intensity);
    }
    return times;
  }

  const std::array<std::uint64_t, 4>& state() const { return s_; }

 private:
  std::array<std::uint64_t, 4> s_;
};

// Builds the stream for (master_seed, purpose, key). The key tuple is folded
// into the state with per-position tweaks so permuted keys do not collide.
inline RngStream make_stream(std::uint64_t master_seed, StreamPurpose purpose,
                             std::span<const std::int64_t> key) {
  std::uint64_t acc = master_seed ^ 0x8f1bbcdcbfa53e0bULL;
  std::uint64_t h = rng_detail::splitmix64(acc);
  acc ^= static_cast<std::uint64_t>(purpose) * 0xff51afd7ed558ccdULL;
  h ^= rng_detail::splitmix64(acc);
  std::uint64_t pos = 1;
  for (std::int64_t k : key) {
    acc ^= (static_cast<std::uint64_t>(k) + 0x9e3779b97f4a7c15ULL * pos);
    h ^= rng_detail::splitmix64(acc);
    ++pos;
  }
  return RngStream::from_words(h, acc);
}

inline RngStream make_stream(std::uint64_t master_seed, StreamPurpose purpose,
                             std::initializer_list<std::int64_t> key) {
  return make_stream(master_seed, purpose,
                     std::span<const std::int64_t>(key.begin(), key.size()));
}

}  // namespace latticefire
