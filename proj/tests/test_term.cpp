#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <complex>
#include <random>

#include "pauliops/term.hpp"

using namespace pauliops;

namespace {

// Independent 2x2 oracle: literal matrices for the four single-site strings,
// multiplied by hand. Never touches the bitwise phase rule.
using Mat2 = std::array<std::array<Coeff, 2>, 2>;

Mat2 tau_matrix(int v, int w) {
  const Coeff o{1.0, 0.0}, z{0.0, 0.0};
  if (!v && !w) return {{{o, z}, {z, o}}};   // identity
  if (!v && w) return {{{z, o}, {o, z}}};    // X
  if (v && !w) return {{{o, z}, {z, -o}}};   // Z
  return {{{z, o}, {-o, z}}};                // iY
}

Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Mat2 scale(const Mat2& a, Coeff s) {
  Mat2 c = a;
  for (auto& row : c)
    for (auto& x : row) x *= s;
  return c;
}

Mat2 sub(const Mat2& a, const Mat2& b) {
  Mat2 c = a;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] -= b[i][j];
  return c;
}

bool approx_equal(const Mat2& a, const Mat2& b, double tol = 1e-14) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (std::abs(a[i][j] - b[i][j]) > tol) return false;
  return true;
}

PauliTerm single(int v, int w) { return {static_cast<Word64>(v), static_cast<Word64>(w)}; }

}  // namespace

TEST_CASE("single-site products reproduce the 2x2 matrix algebra exactly") {
  for (int v1 = 0; v1 < 2; ++v1)
    for (int w1 = 0; w1 < 2; ++w1)
      for (int v2 = 0; v2 < 2; ++v2)
        for (int w2 = 0; w2 < 2; ++w2) {
          const auto [t, alpha] = term_product(single(v1, w1), single(v2, w2));
          const Mat2 expect = mul(tau_matrix(v1, w1), tau_matrix(v2, w2));
          const Mat2 got = scale(tau_matrix(static_cast<int>(t.v), static_cast<int>(t.w)),
                                 static_cast<double>(alpha));
          CAPTURE(v1);
          CAPTURE(w1);
          CAPTURE(v2);
          CAPTURE(w2);
          CHECK(approx_equal(expect, got));
        }
}

TEST_CASE("single-site commutators reproduce the 2x2 matrix algebra exactly") {
  for (int v1 = 0; v1 < 2; ++v1)
    for (int w1 = 0; w1 < 2; ++w1)
      for (int v2 = 0; v2 < 2; ++v2)
        for (int w2 = 0; w2 < 2; ++w2) {
          const auto [t, alpha] = term_commutator(single(v1, w1), single(v2, w2));
          const Mat2 expect = sub(mul(tau_matrix(v1, w1), tau_matrix(v2, w2)),
                                  mul(tau_matrix(v2, w2), tau_matrix(v1, w1)));
          const Mat2 got = scale(tau_matrix(static_cast<int>(t.v), static_cast<int>(t.w)),
                                 static_cast<double>(alpha));
          CHECK(approx_equal(expect, got));
        }
}

TEST_CASE("pinned product orientation") {
  // X*X = identity
  CHECK(term_product(single(0, 1), single(0, 1)) == std::pair{single(0, 0), 1});
  // Z*X = +iY: the result bit pair is exactly the iY string with sign +1
  CHECK(term_product(single(1, 0), single(0, 1)) == std::pair{single(1, 1), 1});
  // X*Z = -iY
  CHECK(term_product(single(0, 1), single(1, 0)) == std::pair{single(1, 1), -1});
  // [Z, X] = 2iY, [X, X] = 0
  CHECK(term_commutator(single(1, 0), single(0, 1)) == std::pair{single(1, 1), 2});
  CHECK(term_commutator(single(0, 1), single(0, 1)).second == 0);
}

TEST_CASE("two-site product X1 Z2 * Z1 Z2 matches the 4x4 oracle") {
  // Hand 4x4 product via per-site factors: (X Z)x(Z Z) = (XZ) x (ZZ) = -iY1.
  const PauliTerm a{0b10, 0b01};  // X1 Z2
  const PauliTerm b{0b11, 0b00};  // Z1 Z2
  const auto [t, alpha] = term_product(a, b);
  CHECK(t == PauliTerm{0b01, 0b01});  // iY on site 1 only
  // site 1: X*Z = -iY = -tau11, site 2: Z*Z = 1
  CHECK(alpha == -1);
  // cross-check per-site with the 2x2 oracle
  const Mat2 s1 = mul(tau_matrix(0, 1), tau_matrix(1, 0));
  CHECK(approx_equal(s1, scale(tau_matrix(1, 1), -1.0)));
}

TEST_CASE("strings overlapping on an even number of anticommuting sites commute") {
  const PauliTerm zz{0b11, 0b00};
  const PauliTerm xx{0b00, 0b11};
  CHECK(term_commutator(zz, xx).second == 0);
}

TEST_CASE("weight") {
  CHECK(PauliTerm{0, 0}.weight() == 0);
  // Z1 Y3 over N=4
  CHECK(PauliTerm{0b101, 0b100}.weight() == 2);
  // full Y string on N=10
  const Word64 m = (1u << 10) - 1;
  CHECK(PauliTerm{m, m}.weight() == 10);
}

TEST_CASE("translate") {
  CHECK(translate(PauliTerm{0, 0b0001}, 1, 4) == PauliTerm{0, 0b0010});   // X1 -> X2
  CHECK(translate(PauliTerm{0b1000, 0}, 1, 4) == PauliTerm{0b0001, 0});   // Z4 wraps to Z1
  const PauliTerm a{0b0110, 0b0011};
  CHECK(translate(a, 0, 4) == a);
  std::mt19937 rng(7);
  std::uniform_int_distribution<Word64> bits(0, (1u << 6) - 1);
  std::uniform_int_distribution<int> shift(0, 5);
  for (int i = 0; i < 1000; ++i) {
    const PauliTerm t{bits(rng), bits(rng)};
    const int j = shift(rng), k = shift(rng);
    CHECK(translate(translate(t, j, 6), k, 6) == translate(t, (j + k) % 6, 6));
  }
}

TEST_CASE("shift_left") {
  CHECK(shift_left(PauliTerm{0, 0b00100}, 5) == PauliTerm{0, 0b00001});     // X3 -> X1
  CHECK(shift_left(PauliTerm{0b0110, 0}, 4) == PauliTerm{0b0011, 0});       // Z2 Z3 -> Z1 Z2
  CHECK(shift_left(PauliTerm{0, 0}, 4) == PauliTerm{0, 0});                 // identity
  // X1 X4 at N=4 has two site-1 anchors; the smaller (v, w) wins
  CHECK(shift_left(PauliTerm{0, 0b1001}, 4) == PauliTerm{0, 0b0011});
  std::mt19937 rng(11);
  std::uniform_int_distribution<Word64> bits(0, (1u << 7) - 1);
  for (int i = 0; i < 1000; ++i) {
    const PauliTerm t{bits(rng), bits(rng)};
    const PauliTerm c = shift_left(t, 7);
    CHECK(shift_left(c, 7) == c);
    if (!t.is_identity()) CHECK(((c.v | c.w) & 1) == 1);
  }
}

TEST_CASE("translation period") {
  CHECK(translation_period(PauliTerm{0, 0}, 4) == 1);
  CHECK(translation_period(PauliTerm{0b0101, 0}, 4) == 2);  // Z1 Z3
  CHECK(translation_period(PauliTerm{0, 0b0011}, 4) == 4);  // X1 X2
}

TEST_CASE("parse_term") {
  const SiteLetter x1[] = {{'X', 1}};
  auto [t1, f1] = parse_term<Word64>(x1, 3);
  CHECK(t1 == PauliTerm{0, 0b001});
  CHECK(f1 == Coeff{1.0, 0.0});

  const SiteLetter y2[] = {{'Y', 2}};
  auto [t2, f2] = parse_term<Word64>(y2, 3);
  CHECK(t2 == PauliTerm{0b010, 0b010});
  // stored coefficient (-i) times iY gives back Y
  CHECK(f2 == Coeff{0.0, -1.0});
  CHECK(std::abs(f2 * Coeff{0.0, 1.0} - Coeff{1.0, 0.0}) < 1e-15);

  const SiteLetter zz[] = {{'Z', 1}, {'Z', 2}};
  auto [t3, f3] = parse_term<Word64>(zz, 3);
  CHECK(t3 == PauliTerm{0b011, 0});
  CHECK(f3 == Coeff{1.0, 0.0});

  const SiteLetter bad_site[] = {{'X', 4}};
  CHECK_THROWS_AS((parse_term<Word64>(bad_site, 3)), std::invalid_argument);
  const SiteLetter dup[] = {{'X', 2}, {'Z', 2}};
  CHECK_THROWS_AS((parse_term<Word64>(dup, 3)), std::invalid_argument);
  const SiteLetter bad_op[] = {{'Q', 1}};
  CHECK_THROWS_AS((parse_term<Word64>(bad_op, 3)), std::invalid_argument);
}

TEST_CASE("labels") {
  CHECK(to_label(PauliTerm{0, 1}, 10) == "X111111111");
  CHECK(to_label(PauliTerm{0, 0}, 4) == "1111");
  CHECK(to_label(PauliTerm{0b1111, 0b1111}, 10) == "YYYY111111");
  std::mt19937 rng(3);
  std::uniform_int_distribution<Word64> bits(0, (1u << 9) - 1);
  for (int i = 0; i < 200; ++i) {
    const PauliTerm t{bits(rng), bits(rng)};
    CHECK(from_label<Word64>(to_label(t, 9)) == t);
  }
}

TEST_CASE("product associativity over random triples") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<Word64> bits(0, (1u << 8) - 1);
  for (int i = 0; i < 10000; ++i) {
    const PauliTerm a{bits(rng), bits(rng)}, b{bits(rng), bits(rng)}, c{bits(rng), bits(rng)};
    const auto [ab, p_ab] = term_product(a, b);
    const auto [ab_c, p_ab_c] = term_product(ab, c);
    const auto [bc, p_bc] = term_product(b, c);
    const auto [a_bc, p_a_bc] = term_product(a, bc);
    CHECK(ab_c == a_bc);
    CHECK(p_ab * p_ab_c == p_bc * p_a_bc);
  }
}

TEST_CASE("commutator phase vanishes iff the crossing parities agree") {
  std::mt19937 rng(43);
  std::uniform_int_distribution<Word64> bits(0, (1u << 8) - 1);
  for (int i = 0; i < 10000; ++i) {
    const PauliTerm a{bits(rng), bits(rng)}, b{bits(rng), bits(rng)};
    const bool same_parity = (popcount_word(a.v & b.w) & 1) == (popcount_word(a.w & b.v) & 1);
    CHECK((commutator_phase(a, b) == 0) == same_parity);
    CHECK(term_product(a, b).first.weight() <= a.weight() + b.weight());
  }
}

TEST_CASE("128-bit terms behave like 64-bit terms shifted to high sites") {
  // Same local pattern placed at sites 90.. via the wide encoding.
  const int lo = 1, hi = 90;
  const SiteLetter low_a[] = {{'X', lo}, {'Z', lo + 1}};
  const SiteLetter low_b[] = {{'Y', lo}, {'X', lo + 1}};
  const auto [la, fa] = parse_term<Word64>(low_a, 8);
  const auto [lb, fb] = parse_term<Word64>(low_b, 8);
  const SiteLetter high_a[] = {{'X', hi}, {'Z', hi + 1}};
  const SiteLetter high_b[] = {{'Y', hi}, {'X', hi + 1}};
  const auto [ha, ga] = parse_term<Word128>(high_a, 100);
  const auto [hb, gb] = parse_term<Word128>(high_b, 100);
  CHECK(fa == ga);
  CHECK(fb == gb);
  CHECK(product_phase(la, lb) == product_phase(ha, hb));
  CHECK(commutator_phase(la, lb) == commutator_phase(ha, hb));
  CHECK(term_product(ha, hb).first.weight() == term_product(la, lb).first.weight());
  // translation across the 64-bit boundary
  const auto t = translate(ha, 20, 100);
  CHECK(t.weight() == ha.weight());
  CHECK(translate(t, 80, 100) == ha);
  CHECK(to_label(ha, 100).substr(hi - 1, 2) == "XZ");
}
