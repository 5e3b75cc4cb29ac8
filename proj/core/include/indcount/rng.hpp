#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace indcount {

/// Every random choice in the library goes through this generator so that a
/// single 64-bit seed reproduces a run bit-for-bit on any platform.
///
/// Engine: std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The seed is first scrambled with SplitMix64. Bounded integers use
/// Lemire's multiply-and-reject method and reals take the top 53 bits; the
/// std:: distributions are avoided because their algorithms are
/// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Uniform in [0, 1).
  double uniform_real();

  bool bernoulli(double p) { return uniform_real() < p; }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(uniform_below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Seed for the `index`-th independent sub-experiment of a run seeded with
/// `seed`. Results never depend on the order sub-experiments are executed in.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace indcount
