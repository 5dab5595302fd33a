#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pauliops/dense.hpp"
#include "pauliops/models.hpp"
#include "test_util.hpp"

using namespace pauliops;
using testutil::max_abs_diff;
using testutil::random_operator;

TEST_CASE("single-site matrices are the literal tau set") {
  Operator x(1), z(1), iy(1), id(1);
  x.add(1.0, 'X', 1);
  z.add(1.0, 'Z', 1);
  iy.accumulate(PauliTerm{1, 1}, 1.0);
  id.add(1.0, '1', 1);

  DenseMatrix mx(2, 2), mz(2, 2), miy(2, 2), mid(2, 2);
  mx << 0, 1, 1, 0;
  mz << 1, 0, 0, -1;
  miy << 0, 1, -1, 0;
  mid << 1, 0, 0, 1;
  CHECK(max_abs_diff(to_dense(x), mx) == 0.0);
  CHECK(max_abs_diff(to_dense(z), mz) == 0.0);
  CHECK(max_abs_diff(to_dense(iy), miy) == 0.0);
  CHECK(max_abs_diff(to_dense(id), mid) == 0.0);
}

TEST_CASE("site 1 is the leftmost tensor factor") {
  Operator x1(2);
  x1.add(1.0, 'X', 1);
  DenseMatrix expect(4, 4);
  expect.setZero();
  // X (x) 1 in the site-1-major index ordering
  expect(0, 2) = 1;
  expect(1, 3) = 1;
  expect(2, 0) = 1;
  expect(3, 1) = 1;
  CHECK(max_abs_diff(to_dense(x1), expect) == 0.0);
}

TEST_CASE("round trip through the dense basis is exact at N = 2") {
  // exhaustive: every one-string operator survives decode/encode
  for (Word64 v = 0; v < 4; ++v)
    for (Word64 w = 0; w < 4; ++w) {
      Operator a(2);
      a.accumulate(PauliTerm{v, w}, Coeff{0.8, -0.3});
      const Operator back = from_dense(to_dense(a), 2);
      CHECK(back.size() == 1);
      CHECK(std::abs(back.coeff(PauliTerm{v, w}) - Coeff{0.8, -0.3}) < 1e-14);
    }
  std::mt19937 rng(13);
  for (int i = 0; i < 50; ++i) {
    const Operator a = random_operator(rng, 3, 20);
    const Operator back = from_dense(to_dense(a), 3);
    Operator diff = a;
    diff.add_scaled(back, Coeff{-1.0, 0.0});
    CHECK(norm_lanczos(diff) < 1e-13);
  }
}

TEST_CASE("decode is a homomorphism") {
  std::mt19937 rng(101);
  for (int i = 0; i < 100; ++i) {
    const Operator a = random_operator(rng, 4, 16);
    const Operator b = random_operator(rng, 4, 16);
    CHECK(max_abs_diff(to_dense(product(a, b)), to_dense(a) * to_dense(b)) < 1e-12);
    CHECK(std::abs(dense_trace_normalized(to_dense(a)) - trace_normalized(a)) < 1e-12);
  }
}

TEST_CASE("heisenberg rotation of X under Z") {
  Operator h(1), x(1);
  h.add(1.0, 'Z', 1);
  x.add(1.0, 'X', 1);
  CHECK(max_abs_diff(dense_heisenberg(h, x, 0.0), to_dense(x)) < 1e-12);
  for (const double t : {0.3, 1.0, 1.4}) {
    const DenseMatrix xt = dense_heisenberg(h, x, t);
    const Coeff overlap = dense_trace_product_normalized(xt, to_dense(x));
    CHECK(std::abs(overlap.real() - std::cos(2 * t)) < 1e-12);
    CHECK(std::abs(overlap.imag()) < 1e-12);
  }
  // commuting pair stays put
  Operator z(1);
  z.add(1.0, 'Z', 1);
  CHECK(max_abs_diff(dense_heisenberg(h, z, 0.7), to_dense(z)) < 1e-12);
}

TEST_CASE("overlap series agrees with single-time evolution") {
  const Operator h = models::xx_chain(4);
  Operator o(4);
  o.add(1.0, 'X', 1);
  const std::vector<double> times{0.0, 0.4, 1.1};
  const auto series = dense_heisenberg_overlaps(h, o, o, times);
  for (std::size_t i = 0; i < times.size(); ++i) {
    const DenseMatrix ot = dense_heisenberg(h, o, times[i]);
    const Coeff direct = dense_trace_product_normalized(ot, to_dense(o).adjoint());
    CHECK(std::abs(series[i] - direct) < 1e-11);
  }
}

TEST_CASE("two-level recursion terminates with b = [2]") {
  Operator h(1), x(1);
  h.add(1.0, 'Z', 1);
  x.add(1.0, 'X', 1);
  const auto b = dense_lanczos(h, x, 5);
  REQUIRE(b.size() == 1);
  CHECK(b[0] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("site caps are enforced") {
  Operator big(13);
  big.add(1.0, 'X', 1);
  CHECK_THROWS_AS(to_dense(big), std::invalid_argument);
  Operator mid(11);
  mid.add(1.0, 'X', 1);
  CHECK_THROWS_AS(dense_heisenberg(mid, mid, 1.0), std::invalid_argument);
  Operator nine(9);
  nine.add(1.0, 'X', 1);
  CHECK_THROWS_AS(dense_lanczos(nine, nine, 3), std::invalid_argument);
}
