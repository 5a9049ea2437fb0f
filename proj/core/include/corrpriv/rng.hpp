#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace corrpriv {

/// splitmix64 finalizer; used to whiten seed material.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Every stochastic code path derives its seed from one root seed, a
/// command/purpose tag, and a trial index. Parallel sweeps stay reproducible
/// because trial i never depends on how trials are scheduled.
inline std::uint64_t derive_seed(std::uint64_t root, std::string_view tag,
                                 std::uint64_t index = 0) {
  return mix64(mix64(root ^ fnv1a(tag)) + index);
}

inline std::mt19937_64 make_engine(std::uint64_t seed) {
  return std::mt19937_64(mix64(seed));
}

}  // namespace corrpriv
