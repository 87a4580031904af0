#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace rhd {

// splitmix64 finalizer, used to derive decorrelated sub-seeds (per window,
// per horizon candidate) from the master seed.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return mix64(base ^ mix64(stream + 0x632be59bd9b4e019ULL));
}

// mt19937_64 with hand-rolled draws. The engine's output sequence is fixed by
// the standard, while std::uniform_*_distribution is not, so rolling our own
// keeps runs reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // uniform in [0, 1)
  double uniform01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  // uniform in [lo, hi)
  double uniform_real(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  // uniform in [0, n), unbiased via rejection
  std::size_t uniform_index(std::size_t n) {
    const std::uint64_t bound = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    std::uint64_t x = eng_();
    while (x >= bound) x = eng_();
    return static_cast<std::size_t>(x % n);
  }

  // index drawn proportionally to non-negative weights (sum > 0)
  std::size_t pick_weighted(std::span<const double> weights) {
    double total = 0;
    for (double w : weights) total += w;
    double u = uniform01() * total;
    double acc = 0;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
      acc += weights[i];
      if (u < acc) return i;
    }
    return weights.empty() ? 0 : weights.size() - 1;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace rhd
