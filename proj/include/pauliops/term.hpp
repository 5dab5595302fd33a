#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "pauliops/bits.hpp"

namespace pauliops {

using Coeff = std::complex<double>;

// One Pauli string over N sites, encoded as a pair of bitmasks. Bit i-1 of v
// is the Z-type component of site i, bit i-1 of w the X-type component. The
// string is a tensor product of the real single-site matrices
//   (0,0) -> 1,  (0,1) -> X,  (1,0) -> Z,  (1,1) -> iY,
// so every product of two strings is again a string times a sign.
template <class W>
struct BasicPauliTerm {
  W v{0};
  W w{0};

  constexpr bool is_identity() const noexcept { return v == 0 && w == 0; }

  // Number of non-identity sites.
  constexpr int weight() const noexcept { return popcount_word(static_cast<W>(v | w)); }

  // Number of sites carrying iY; fixes the phase between the stored
  // coefficient and the Pauli-letter coefficient.
  constexpr int y_count() const noexcept { return popcount_word(static_cast<W>(v & w)); }

  friend constexpr bool operator==(const BasicPauliTerm& a, const BasicPauliTerm& b) noexcept {
    return a.v == b.v && a.w == b.w;
  }
  // Lexicographic (v, w); the deterministic tie-break everywhere.
  friend constexpr bool operator<(const BasicPauliTerm& a, const BasicPauliTerm& b) noexcept {
    return a.v != b.v ? a.v < b.v : a.w < b.w;
  }
};

using PauliTerm = BasicPauliTerm<Word64>;
using PauliTerm128 = BasicPauliTerm<Word128>;

template <class W>
struct TermHash {
  std::size_t operator()(const BasicPauliTerm<W>& t) const noexcept {
    if constexpr (sizeof(W) == 8) {
      return mix64(static_cast<std::uint64_t>(t.v) ^ mix64(static_cast<std::uint64_t>(t.w)));
    } else {
      std::uint64_t h = mix64(static_cast<std::uint64_t>(t.v));
      h = mix64(h ^ static_cast<std::uint64_t>(t.v >> 64));
      h = mix64(h ^ static_cast<std::uint64_t>(t.w));
      h = mix64(h ^ static_cast<std::uint64_t>(t.w >> 64));
      return h;
    }
  }
};

// Sign of the string product t1*t2. The bit rule XORs the masks; the sign is
// (-1)^pop(w1 & v2), the parity of X-over-Z crossings. The operand order in
// the popcount is what makes Z*X = +iY rather than -iY; the unit tests lock
// it against dense 2x2 products.
template <class W>
constexpr int product_phase(const BasicPauliTerm<W>& t1, const BasicPauliTerm<W>& t2) noexcept {
  return (popcount_word(static_cast<W>(t1.w & t2.v)) & 1) ? -1 : 1;
}

// Sign of the commutator [t1, t2]: difference of the two product
// orientations, in {-2, 0, +2}. Zero exactly when the strings commute.
template <class W>
constexpr int commutator_phase(const BasicPauliTerm<W>& t1, const BasicPauliTerm<W>& t2) noexcept {
  return product_phase(t1, t2) - product_phase(t2, t1);
}

template <class W>
constexpr BasicPauliTerm<W> term_bits(const BasicPauliTerm<W>& t1, const BasicPauliTerm<W>& t2) noexcept {
  return {static_cast<W>(t1.v ^ t2.v), static_cast<W>(t1.w ^ t2.w)};
}

template <class W>
constexpr std::pair<BasicPauliTerm<W>, int> term_product(const BasicPauliTerm<W>& t1,
                                                         const BasicPauliTerm<W>& t2) noexcept {
  return {term_bits(t1, t2), product_phase(t1, t2)};
}

template <class W>
constexpr std::pair<BasicPauliTerm<W>, int> term_commutator(const BasicPauliTerm<W>& t1,
                                                            const BasicPauliTerm<W>& t2) noexcept {
  return {term_bits(t1, t2), commutator_phase(t1, t2)};
}

// Cyclic shift by k sites on a ring of n sites (site s -> site s+k).
template <class W>
constexpr BasicPauliTerm<W> translate(const BasicPauliTerm<W>& t, int k, int n) noexcept {
  return {rotl_bits(t.v, k, n), rotl_bits(t.w, k, n)};
}

// Canonical translate anchored on site 1: among all cyclic shifts whose
// first non-identity site is site 1, the lexicographically smallest (v, w).
// The identity has no anchor and maps to itself.
template <class W>
constexpr BasicPauliTerm<W> shift_left(const BasicPauliTerm<W>& t, int n) noexcept {
  if (t.is_identity()) return t;
  BasicPauliTerm<W> best{};
  bool have = false;
  for (int k = 0; k < n; ++k) {
    const BasicPauliTerm<W> cand = translate(t, k, n);
    if ((static_cast<W>(cand.v | cand.w) & W{1}) == 0) continue;
    if (!have || cand < best) {
      best = cand;
      have = true;
    }
  }
  return best;
}

// Smallest p > 0 with translate(t, p) == t; divides n.
template <class W>
constexpr int translation_period(const BasicPauliTerm<W>& t, int n) noexcept {
  for (int p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    if (translate(t, p, n) == t) return p;
  }
  return n;
}

// i^k, k mod 4.
inline Coeff ipow(int k) noexcept {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// Multiplier taking the stored coefficient of a string to its Pauli-letter
// coefficient (each iY site contributes one factor of i).
template <class W>
inline Coeff display_factor(const BasicPauliTerm<W>& t) noexcept {
  return ipow(t.y_count());
}

// Inverse of display_factor: (-i) per Y letter.
template <class W>
inline Coeff storage_factor(const BasicPauliTerm<W>& t) noexcept {
  return ipow(-t.y_count());
}

// One user-facing Pauli letter on a 1-based site.
struct SiteLetter {
  char op;
  int site;
};

// Builds the bit pair for a list of letters and returns the factor that
// multiplies the user's coefficient to produce the stored coefficient.
template <class W>
std::pair<BasicPauliTerm<W>, Coeff> parse_term(std::span<const SiteLetter> letters, int n_sites) {
  BasicPauliTerm<W> t{};
  W seen{0};
  for (const auto& [op, site] : letters) {
    if (site < 1 || site > n_sites)
      throw std::invalid_argument("site " + std::to_string(site) + " out of range 1.." +
                                  std::to_string(n_sites));
    const W bit = W{1} << (site - 1);
    if (seen & bit) throw std::invalid_argument("duplicate site " + std::to_string(site));
    seen |= bit;
    switch (op) {
      case '1': break;
      case 'X': t.w |= bit; break;
      case 'Y': t.v |= bit; t.w |= bit; break;
      case 'Z': t.v |= bit; break;
      default:
        throw std::invalid_argument(std::string("unknown Pauli letter '") + op + "'");
    }
  }
  return {t, storage_factor(t)};
}

// N-character label, site 1 leftmost, alphabet {1, X, Y, Z}.
template <class W>
std::string to_label(const BasicPauliTerm<W>& t, int n_sites) {
  std::string s(static_cast<std::size_t>(n_sites), '1');
  for (int i = 0; i < n_sites; ++i) {
    const bool zb = (t.v >> i) & W{1};
    const bool xb = (t.w >> i) & W{1};
    if (zb && xb)
      s[i] = 'Y';
    else if (zb)
      s[i] = 'Z';
    else if (xb)
      s[i] = 'X';
  }
  return s;
}

// Inverse of to_label.
template <class W>
BasicPauliTerm<W> from_label(const std::string& label) {
  if (label.size() > static_cast<std::size_t>(word_bits<W>()))
    throw std::invalid_argument("label longer than supported site count");
  BasicPauliTerm<W> t{};
  for (std::size_t i = 0; i < label.size(); ++i) {
    const W bit = W{1} << i;
    switch (label[i]) {
      case '1': break;
      case 'X': t.w |= bit; break;
      case 'Y': t.v |= bit; t.w |= bit; break;
      case 'Z': t.v |= bit; break;
      default:
        throw std::invalid_argument(std::string("unknown Pauli letter '") + label[i] + "'");
    }
  }
  return t;
}

}  // namespace pauliops
