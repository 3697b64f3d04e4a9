#ifndef EVP_RNG_HPP
#define EVP_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace evp {

// Deterministic random source. All distribution transforms are written out
// explicitly so that streams are reproducible across standard libraries;
// std::* distributions are implementation-defined and must not be used here.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), gen_(seed) {}

  uint64_t bits() { return gen_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller, spare value cached.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    // u in (0, 1] so the log is finite
    double u = (static_cast<double>(bits() >> 11) + 1.0) * 0x1.0p-53;
    double v = static_cast<double>(bits() >> 11) * 0x1.0p-53;
    double r = std::sqrt(-2.0 * std::log(u));
    double a = 6.283185307179586476925286766559 * v;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // Uniform index in [0, n). n must be positive.
  int64_t index(int64_t n) { return static_cast<int64_t>(bits() % static_cast<uint64_t>(n)); }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(index(static_cast<int64_t>(i)));
      std::swap(v[i - 1], v[j]);
    }
  }

  // Independent stream derived from (seed, tag). Streams with distinct tags
  // do not interact with this generator's state.
  Rng derive(uint64_t tag) const { return Rng(mix(seed_, tag)); }

  uint64_t seed() const { return seed_; }

  // splitmix64 finalizer over the combined words
  static uint64_t mix(uint64_t a, uint64_t b) {
    uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  uint64_t seed_;
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace evp

#endif  // EVP_RNG_HPP
