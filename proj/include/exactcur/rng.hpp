// exactcur - exact CUR decompositions by column and row selection
// SPDX-License-Identifier: Apache-2.0

#ifndef EXACTCUR_RNG_HPP
#define EXACTCUR_RNG_HPP

#include <cstdint>
#include <random>

namespace exactcur {

//
// Seeded, splittable random stream. A stream is identified by its key; the
// key of `split(id)` depends only on the parent key and `id`, never on how
// many numbers the parent has produced, so (master_seed, trial, substream)
// always maps to the same sequence.
//
// Satisfies UniformRandomBitGenerator so it can drive <random> distributions.
//
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit RandomStream(std::uint64_t seed);

  RandomStream split(std::uint64_t id) const;

  std::uint64_t key() const noexcept { return key_; }

  result_type operator()() { return engine_(); }
  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double normal();

 private:
  struct FromKey {};
  RandomStream(FromKey, std::uint64_t key);

  std::uint64_t key_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> gauss_;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

}  // namespace exactcur

#endif
