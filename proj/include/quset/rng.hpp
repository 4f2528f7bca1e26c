#pragma once

#include <cstdint>
#include <random>

namespace quset {

// Seeded generator used by every sampler in the library. The engine is
// mt19937_64, whose output sequence is fixed by the C++ standard, and the
// uniform double is derived from the top 53 bits directly, so sequences are
// identical across platforms for a given seed. Seeds are always explicit
// inputs, never wall-clock.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_bits() { return engine_(); }

    // Uniform on [0, 1) with 53-bit resolution.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace quset
