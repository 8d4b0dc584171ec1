#ifndef DOMCOMB_RNG_HPP_
#define DOMCOMB_RNG_HPP_

#include <cstdint>
#include <random>

namespace domcomb {

// One splitmix64 step; also used to mix seeds for derived generators.
uint64_t splitmix64(uint64_t& state);

// Stateless mix of a seed with a stream index.
uint64_t mix_seed(uint64_t seed, uint64_t stream);

// Seeded generator wrapping std::mt19937_64 (whose output sequence is fully
// specified by the standard) with explicit variate transforms, so identical
// seeds give bit-identical draws on every platform.  std::*_distribution is
// never used: its algorithms are implementation-defined.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), eng_(splitseed(seed)) {}

  // Independent child generator; depends only on (seed, stream), not on
  // draws already made from this generator.
  Rng derive(uint64_t stream) const { return Rng(mix_seed(seed_, stream)); }

  uint64_t seed() const { return seed_; }

  uint64_t next_u64() { return eng_(); }

  // Uniform on the open interval (0,1); safe for quantile transforms.
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Unbiased integer in [0, n).
  uint64_t uniform_index(uint64_t n);

  // Standard normal via Box-Muller, caching the second variate.
  double normal();

  // Gamma(shape, 1) via Marsaglia-Tsang, with the alpha<1 boost.
  double gamma(double shape);

  double chi_square(double df) { return 2.0 * gamma(df / 2.0); }

  double cauchy();

 private:
  static uint64_t splitseed(uint64_t seed) {
    uint64_t s = seed;
    return splitmix64(s);
  }

  uint64_t seed_;
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace domcomb

#endif  // DOMCOMB_RNG_HPP_
