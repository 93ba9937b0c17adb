#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace csumm {

// mt19937_64 with hand-rolled draws. std::uniform_real_distribution and
// std::shuffle are implementation-defined, so every draw here is spelled
// out to keep seeded runs reproducible.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * (1.0 / 9007199254740992.0); }

  float uniform(float lo, float hi) {
    return lo + static_cast<float>(unit() * (static_cast<double>(hi) - static_cast<double>(lo)));
  }

  // Uniform in [0, n). n must be > 0.
  size_t index(size_t n) { return static_cast<size_t>(unit() * static_cast<double>(n)); }

  uint64_t raw() { return engine_(); }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = index(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace csumm
