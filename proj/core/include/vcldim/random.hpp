#pragma once

#include <cstdint>

namespace vcldim {

// Exact rational probability num/den with 0 <= num <= den, den >= 1.
struct Probability {
  std::uint64_t num = 1;
  std::uint64_t den = 2;
};

// Reproducible splitmix64 stream. Substream k of seed s starts from the state
// produced by one splitmix64 step on (s ^ k * 0x9E3779B97F4A7C15), so every
// (seed, stream_index) pair yields the same bits on every platform.
class RandomSource {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit RandomSource(std::uint64_t seed, std::uint64_t stream_index = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

  std::uint64_t next_u64();
  // Top bit of the next output.
  bool next_bit() { return (next_u64() >> 63) != 0; }
  // Uniform in [0, n) by rejection; n must be >= 1.
  std::uint64_t uniform_below(std::uint64_t n);
  // One uniform_below(p.den) draw compared against p.num.
  bool bernoulli(Probability p);

  // Independent stream with the same seed and a different index.
  RandomSource substream(std::uint64_t index) const { return RandomSource(seed_, index); }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_index_;
  std::uint64_t state_;
};

// One splitmix64 step from `state` (state is advanced by the golden gamma).
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace vcldim
