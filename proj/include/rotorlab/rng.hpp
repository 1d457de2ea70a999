#pragma once

#include <cstdint>
#include <random>

namespace rotorlab {

// Deterministic random stream. mt19937_64 output is specified bit-exactly by
// the standard; bounded draws use plain modulo so results are reproducible
// across platforms (the slight bias is irrelevant here).
struct Rng {
  std::mt19937_64 g;
  explicit Rng(uint64_t seed) : g(seed) {}
  uint64_t next() { return g(); }
  uint64_t below(uint64_t m) { return m ? g() % m : 0; }
  bool bit() { return (g() >> 17) & 1; }
};

// Per-trial seed derivation: hash(master seed, trial index), splitmix64 mix.
inline uint64_t derive_seed(uint64_t master, uint64_t trial) {
  uint64_t z = master + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace rotorlab
