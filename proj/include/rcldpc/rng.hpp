#pragma once

#include <cstdint>
#include <random>

namespace rcldpc {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t x = state;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based per-frame stream: frames are reproducible regardless of
// which worker generates them or in what order.
inline std::mt19937_64 frame_rng(std::uint64_t master_seed, std::uint64_t stream_index) {
  std::uint64_t s = master_seed;
  std::uint64_t a = splitmix64(s);
  s ^= stream_index * 0x9e3779b97f4a7c15ULL + 0x853c49e6748fea9bULL;
  std::uint64_t b = splitmix64(s);
  return std::mt19937_64(a ^ (b + 0x2545f4914f6cdd1dULL));
}

// Folds several indices (e.g. rate, snr point, frame) into one stream index.
inline std::uint64_t fold_stream(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0) {
  std::uint64_t s = a * 0x9e3779b97f4a7c15ULL + b;
  std::uint64_t x = splitmix64(s);
  s ^= c + 0xd6e8feb86659fd93ULL;
  return x ^ splitmix64(s);
}

}  // namespace rcldpc
