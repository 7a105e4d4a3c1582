#ifndef HYPERHEAT_RNG_HPP
#define HYPERHEAT_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace hyperheat {

// Deterministic random stream. The engine is mt19937_64 (bit-exact across
// standard libraries); the uniform/normal/int transforms are written out here
// instead of using std::*_distribution, whose output is implementation
// defined. Every experiment and test seeds one of these explicitly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Inclusive range, rejection sampled so the distribution is exact.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t draw;
    do {
      draw = next_u64();
    } while (draw >= limit);
    return lo + static_cast<std::int64_t>(draw % range);
  }

  // Box-Muller; consumes exactly two uniforms per call.
  double normal() {
    double u1;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  double normal(double mean, double sigma) { return mean + sigma * normal(); }

  // Independent sub-stream keyed by (seed, stream). Used to hand each trial or
  // restart its own generator so results do not depend on evaluation order.
  Rng fork(std::uint64_t stream) const { return Rng(splitmix(seed_ ^ splitmix(stream))); }

  std::uint64_t seed() const { return seed_; }

 private:
  static std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace hyperheat

#endif  // HYPERHEAT_RNG_HPP
