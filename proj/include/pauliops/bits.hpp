#pragma once

#include <bit>
#include <cstdint>

namespace pauliops {

using Word64 = std::uint64_t;
using Word128 = unsigned __int128;

constexpr int popcount_word(Word64 x) noexcept {
  return std::popcount(x);
}

constexpr int popcount_word(Word128 x) noexcept {
  return std::popcount(static_cast<std::uint64_t>(x)) +
         std::popcount(static_cast<std::uint64_t>(x >> 64));
}

template <class W>
constexpr int word_bits() noexcept {
  return static_cast<int>(sizeof(W) * 8);
}

// Mask with the low n bits set. n must be in [0, word_bits].
template <class W>
constexpr W low_mask(int n) noexcept {
  if (n <= 0) return W{0};
  if (n >= word_bits<W>()) return ~W{0};
  return (W{1} << n) - W{1};
}

// Cyclic left rotation restricted to the low n bits; bits >= n must be zero.
template <class W>
constexpr W rotl_bits(W x, int k, int n) noexcept {
  k %= n;
  if (k < 0) k += n;
  if (k == 0) return x;
  const W m = low_mask<W>(n);
  return ((x << k) | (x >> (n - k))) & m;
}

// Reverse the low n bits (bit 0 <-> bit n-1). Used when mapping site order
// onto tensor-product index order.
template <class W>
constexpr W reverse_low_bits(W x, int n) noexcept {
  W r{0};
  for (int i = 0; i < n; ++i) {
    r = (r << 1) | (x & W{1});
    x >>= 1;
  }
  return r;
}

// splitmix64 finalizer; decent avalanche for hash keys.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace pauliops
