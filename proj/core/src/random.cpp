#include "vcldim/random.hpp"

#include "vcldim/error.hpp"

namespace vcldim {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += RandomSource::kGamma;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

RandomSource::RandomSource(std::uint64_t seed, std::uint64_t stream_index)
    : seed_(seed), stream_index_(stream_index) {
  std::uint64_t init = seed ^ (stream_index * kGamma);
  state_ = splitmix64(init);
}

std::uint64_t RandomSource::next_u64() { return splitmix64(state_); }

std::uint64_t RandomSource::uniform_below(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("uniform_below: n must be positive");
  // 2^64 mod n, computed without 128-bit arithmetic.
  const std::uint64_t rem = (0 - n) % n;
  const std::uint64_t limit = 0 - rem;  // 2^64 - rem; 0 means no rejection
  while (true) {
    const std::uint64_t r = next_u64();
    if (rem == 0 || r < limit) return r % n;
  }
}

bool RandomSource::bernoulli(Probability p) {
  if (p.den == 0 || p.num > p.den) throw InvalidArgument("bernoulli: probability outside [0,1]");
  return uniform_below(p.den) < p.num;
}

}  // namespace vcldim
