#include "privsim/rng.hpp"

#include <cmath>

#include "privsim/errors.hpp"

namespace privsim {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t value) {
  return mix64(seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2)));
}

std::uint64_t hash_str(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Pcg32::Pcg32(std::uint64_t seed, std::uint64_t stream) {
  inc_ = (stream << 1u) | 1u;
  state_ = 0;
  next_u32();
  state_ += seed;
  next_u32();
}

std::uint32_t Pcg32::next_u32() {
  std::uint64_t old = state_;
  state_ = old * 6364136223846793005ULL + inc_;
  std::uint32_t xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
  std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
  return (xorshifted >> rot) | (xorshifted << ((~rot + 1u) & 31));
}

std::uint64_t Pcg32::next_u64() {
  std::uint64_t hi = next_u32();
  return (hi << 32) | next_u32();
}

double Pcg32::next_double() {
  // 53 random bits scaled to [0,1).
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint32_t Pcg32::uniform_u32(std::uint32_t bound) {
  if (bound == 0) throw ValidationError("uniform_u32: bound must be positive");
  std::uint32_t threshold = (~bound + 1u) % bound;
  for (;;) {
    std::uint32_t r = next_u32();
    if (r >= threshold) return r % bound;
  }
}

std::int64_t Pcg32::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw ValidationError("uniform_int: empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next_u64());  // full 64-bit range
  if (span <= 0xffffffffULL) return lo + uniform_u32(static_cast<std::uint32_t>(span));
  std::uint64_t threshold = (~span + 1) % span;
  for (;;) {
    std::uint64_t r = next_u64();
    if (r >= threshold) return lo + static_cast<std::int64_t>(r % span);
  }
}

double Pcg32::uniform_real(double lo, double hi) {
  return lo + (hi - lo) * next_double();
}

int Pcg32::poisson(double mean) {
  if (mean < 0) throw ValidationError("poisson: mean must be non-negative");
  if (mean == 0) return 0;
  if (mean < 30.0) {
    double limit = std::exp(-mean);
    int k = 0;
    double p = 1.0;
    do {
      ++k;
      p *= next_double();
    } while (p > limit);
    return k - 1;
  }
  // Normal approximation with continuity correction.
  double u1 = next_double();
  double u2 = next_double();
  if (u1 <= 0) u1 = 0x1.0p-53;
  double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  double value = std::floor(mean + std::sqrt(mean) * z + 0.5);
  return value < 0 ? 0 : static_cast<int>(value);
}

std::size_t Pcg32::categorical(const std::vector<double>& weights) {
  double total = 0.0;
  for (double w : weights) {
    if (w < 0) throw ValidationError("categorical: negative weight");
    total += w;
  }
  if (total <= 0) throw ValidationError("categorical: total weight must be positive");
  double x = next_double() * total;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (x < weights[i]) return i;
    x -= weights[i];
  }
  // Rounding can land exactly on the upper edge; return the last nonzero bin.
  for (std::size_t i = weights.size(); i-- > 0;) {
    if (weights[i] > 0) return i;
  }
  return weights.size() - 1;
}

Pcg32 Pcg32::fork(std::uint64_t tag) const {
  return Pcg32(mix64(state_ ^ mix64(tag)), mix64(tag) >> 1);
}

}  // namespace privsim
