// ercbench: ERC-compliance fault injection and auditing benchmark toolkit
// Copyright 2026 The ercbench Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string_view>

namespace ercbench {

inline uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

/// splitmix64 stream. Identical output on every platform, unlike the
/// standard-library distributions; campaign reproducibility depends on that.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  /// Stream for one contract: independent of processing order, so parallel
  /// campaigns with different worker counts draw the same values.
  static Rng for_contract(uint64_t seed, std::string_view contract_id) {
    return Rng(seed ^ fnv1a64(contract_id));
  }

  uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n). Debiased by rejection.
  uint64_t bounded(uint64_t n) {
    if (n < 2) return 0;
    uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % n);
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  /// Uniform in [lo, hi], inclusive.
  uint64_t range(uint64_t lo, uint64_t hi) { return lo + bounded(hi - lo + 1); }

 private:
  uint64_t state_;
};

}  // namespace ercbench
