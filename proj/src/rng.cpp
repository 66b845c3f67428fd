// exactcur - exact CUR decompositions by column and row selection
// SPDX-License-Identifier: Apache-2.0

#include "exactcur/rng.hpp"

namespace exactcur {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RandomStream::RandomStream(std::uint64_t seed) : RandomStream(FromKey{}, mix64(seed)) {}

RandomStream::RandomStream(FromKey, std::uint64_t key) : key_(key), engine_(mix64(key)) {}

RandomStream RandomStream::split(std::uint64_t id) const {
  return RandomStream(FromKey{}, mix64(key_ ^ mix64(id + 0x632be59bd9b4e019ULL)));
}

double RandomStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::normal() { return gauss_(engine_); }

}  // namespace exactcur
