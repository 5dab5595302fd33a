#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "pauliops/io.hpp"
#include "pauliops/models.hpp"
#include "test_util.hpp"

using namespace pauliops;
using testutil::random_operator;

TEST_CASE("text round trip is bit exact") {
  std::mt19937 rng(271);
  for (int i = 0; i < 30; ++i) {
    const Operator a = random_operator(rng, 7, 24);
    std::stringstream ss;
    save_text(ss, a);
    const LoadedOperator back = load_text(ss);
    CHECK(!back.translation_symmetric);
    CHECK(back.op.n_sites() == 7);
    REQUIRE(back.op.size() == a.size());
    for (const auto& [t, h] : a.terms()) CHECK(back.op.coeff(t) == h);
    // serialized form is itself reproducible
    std::stringstream ss2;
    save_text(ss2, back.op);
    std::stringstream ss3;
    save_text(ss3, a);
    CHECK(ss2.str() == ss3.str());
  }
}

TEST_CASE("translation-symmetric header flag") {
  const Operator h = models::ising_chain(6, 1.0, 0.5, models::Boundary::periodic);
  const SymOperator1D s = SymOperator1D::from_operator(h);
  std::stringstream ss;
  save_text(ss, s);
  const std::string text = ss.str();
  CHECK(text.rfind("pauliop N=6 ts=1", 0) == 0);
  std::stringstream in(text);
  const LoadedOperator back = load_text(in);
  CHECK(back.translation_symmetric);
  for (const auto& [t, hh] : s.rep().terms()) CHECK(back.op.coeff(t) == hh);
}

TEST_CASE("json round trip is bit exact") {
  std::mt19937 rng(277);
  for (int i = 0; i < 30; ++i) {
    const Operator a = random_operator(rng, 5, 16);
    const LoadedOperator back = from_json(to_json(a));
    CHECK(!back.translation_symmetric);
    REQUIRE(back.op.size() == a.size());
    for (const auto& [t, h] : a.terms()) CHECK(back.op.coeff(t) == h);
  }
  const SymOperator1D s =
      SymOperator1D::from_operator(models::xx_chain(5, models::Boundary::periodic));
  const LoadedOperator back = from_json(to_json(s));
  CHECK(back.translation_symmetric);
  CHECK(back.op.size() == s.size());
}

TEST_CASE("labels serialize in pauli letter space") {
  Operator a(2);
  a.add(Coeff{0.0, -0.5}, 'Y', 1);  // stored coefficient differs by a factor of i
  std::stringstream ss;
  save_text(ss, a);
  std::string header, label;
  double re = 0, im = 0;
  std::getline(ss, header);
  ss >> label >> re >> im;
  CHECK(label == "Y1");
  CHECK(re == 0.0);
  CHECK(im == -0.5);
}

TEST_CASE("format helpers") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_coeff(Coeff{0.7071067812, 0.0}) == "(0.7071067812 + 0.0im)");
  CHECK(format_coeff(Coeff{-0.0, -0.4082482905}) == "(-0.0 - 0.4082482905im)");
  const Operator h = models::xx_chain(3);
  const auto lines = to_string(h);
  CHECK(lines.find("XX1") != std::string::npos);
  CHECK(lines.find("1YY") != std::string::npos);
  CHECK(lines.find("(1.0 + 0.0im)") != std::string::npos);
}

TEST_CASE("bad inputs are rejected") {
  std::stringstream empty;
  CHECK_THROWS_AS(load_text(empty), std::invalid_argument);
  std::stringstream bad_header("nonsense\n");
  CHECK_THROWS_AS(load_text(bad_header), std::invalid_argument);
  std::stringstream bad_label("pauliop N=3 ts=0\nXQX 1 0\n");
  CHECK_THROWS_AS(load_text(bad_label), std::invalid_argument);
  std::stringstream short_label("pauliop N=3 ts=0\nXX 1 0\n");
  CHECK_THROWS_AS(load_text(short_label), std::invalid_argument);
}

TEST_CASE("display ordering is by magnitude then label") {
  Operator a(2);
  a.add(0.25, 'X', 1);
  a.add(-0.5, 'Z', 2);
  a.add(0.25, 'Z', 1);
  const auto lt = labeled_terms(a);
  REQUIRE(lt.size() == 3);
  CHECK(lt[0].label == "1Z");
  CHECK(lt[1].label == "X1");
  CHECK(lt[2].label == "Z1");
}
