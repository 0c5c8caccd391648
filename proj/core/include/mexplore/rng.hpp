#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>

namespace mexplore {

// Deterministic RNG facade over mt19937_64. All distributions are derived
// from raw 64-bit draws with fixed arithmetic, so a given seed reproduces
// the same stream on any platform (std:: distribution objects are
// implementation-defined and are deliberately not used).
class Rng {
 public:
  Rng() : gen_(0) {}
  explicit Rng(uint64_t seed) : gen_(seed) {}

  void seed(uint64_t s) { gen_.seed(s); }

  uint64_t next_u64() { return gen_(); }

  // Uniform on [0, 1) with 53 bits of resolution.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform on {0, ..., n-1}, rejection sampled to avoid modulo bias.
  int uniform_int(int n) {
    if (n <= 0) throw std::invalid_argument("uniform_int: n must be positive");
    const uint64_t un = static_cast<uint64_t>(n);
    const uint64_t limit = UINT64_MAX - UINT64_MAX % un;
    uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return static_cast<int>(x % un);
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Box-Muller; draws two uniforms per call.
  double normal(double mu, double sigma) {
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mu + sigma * r * std::cos(2.0 * M_PI * u2);
  }

  // Categorical draw from simplex probabilities. Falls back to the last
  // index on floating-point shortfall of the cumulative sum.
  template <typename T>
  int categorical(std::span<const T> probs) {
    const double u = uniform();
    double acc = 0.0;
    for (size_t k = 0; k < probs.size(); ++k) {
      acc += static_cast<double>(probs[k]);
      if (u < acc) return static_cast<int>(k);
    }
    return static_cast<int>(probs.size()) - 1;
  }

  // Derive an independent child stream; used to split one run seed across
  // env / learner / selector / buffer without correlated draws.
  Rng split(uint64_t salt) {
    std::seed_seq seq{gen_(), gen_(), salt};
    std::mt19937_64 g(seq);
    Rng child;
    child.gen_ = g;
    return child;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace mexplore
