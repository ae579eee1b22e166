#pragma once

#include <cstdint>

#include "liecx/rational.hpp"

namespace liecx {

/// Deterministic splitmix64 stream. All randomized routines in the engine
/// draw from this generator so that identical seeds give identical results
/// on every platform.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here.
  long int_in(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

  bool coin() { return (next() & 1) != 0; }

  /// Small random rational, numerator in [-max_num, max_num], denominator in
  /// [1, max_den].
  Rat rational(long max_num, long max_den) {
    return rat(int_in(-max_num, max_num), int_in(1, max_den));
  }

 private:
  std::uint64_t state_;
};

/// Default seed used by the CLI and the verification suite.
inline constexpr std::uint64_t kDefaultSeed = 1729;

}  // namespace liecx
