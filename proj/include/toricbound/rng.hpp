#pragma once

#include <cstdint>

namespace toricbound {

/// Counter-based generator: the stream for (seed, key) is a pure function of
/// both, so trial k can be replayed without generating trials 0..k-1.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t key, std::uint64_t subkey = 0);

  std::uint64_t next();
  /// Uniform on [0, n) without modulo bias; n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform on [lo, hi].
  long uniform(long lo, long hi);

 private:
  std::uint64_t base_;
  std::uint64_t counter_ = 0;
};

std::uint64_t mix64(std::uint64_t z);

}  // namespace toricbound
