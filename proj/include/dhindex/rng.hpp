#pragma once

#include <cstdint>
#include <random>

namespace dhindex {

// Deterministic RNG for seeded sweeps. mt19937_64 output is fixed by the
// standard, so identical seeds give identical streams on every platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform-ish value in [0, bound); bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) { return eng_() % bound; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace dhindex
