#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace privsim {

// splitmix64 finalizer; also used to derive stream seeds from tags.
std::uint64_t mix64(std::uint64_t x);

// Order-dependent combiner for building seeds out of several components.
std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t value);

// FNV-1a over the bytes of a string.
std::uint64_t hash_str(std::string_view s);

// PCG32 (XSH-RR 64/32, O'Neill). All randomness in the simulator goes
// through this generator: the std::* distributions are implementation
// defined, which would break byte-identical replays across toolchains.
class Pcg32 {
 public:
  Pcg32() : Pcg32(0x853c49e6748fea9bULL) {}
  explicit Pcg32(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  // Uniform in [0, 1).
  double next_double();

  // Uniform in [0, bound), bound > 0. Unbiased (rejection sampling).
  std::uint32_t uniform_u32(std::uint32_t bound);

  // Uniform integer in [lo, hi], inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  // Uniform real in [lo, hi).
  double uniform_real(double lo, double hi);

  // Poisson-distributed count. Knuth's product method for small means,
  // normal approximation above 30 (page post rates never get there).
  int poisson(double mean);

  // Index drawn proportionally to non-negative weights. Throws
  // ValidationError if the total weight is not positive.
  std::size_t categorical(const std::vector<double>& weights);

  // Child generator on an independent stream; deterministic in (state, tag).
  Pcg32 fork(std::uint64_t tag) const;

 private:
  std::uint64_t state_;
  std::uint64_t inc_;
};

}  // namespace privsim
