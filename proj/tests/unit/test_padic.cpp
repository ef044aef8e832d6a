#include <doctest.h>

#include "../oracles.hpp"
#include "fpp/padic.hpp"

using namespace fpp;

TEST_CASE("Hensel root of t^2 + t + 2 matches exhaustive search") {
  const auto roots = oracle::roots_mod_2k(16);
  REQUIRE(roots.size() == 2);
  const PadicInt r = hensel_root_lambda(16);
  const std::uint64_t expected = roots[0] % 2 == 0 ? roots[0] : roots[1];
  CHECK(r.residue() == Integer(std::to_string(expected)));
  CHECK(r.residue() % 16 == 10);
  CHECK(r.valuation() == 1);
}

TEST_CASE("Hensel root is consistent across precisions") {
  const PadicInt a = hensel_root_lambda(64), b = hensel_root_lambda(256);
  CHECK(a.congruent(b, 64));
  const PadicInt two(2, 256);
  CHECK((b * b + b + two).valuation_floor() == 256);
}

TEST_CASE("precision bookkeeping") {
  const PadicInt x(12, 10), y(5, 6);
  CHECK((x + y).precision() == 6);
  CHECK((x * y).precision() == 8);  // min(10 + v(y), 6 + v(x))
  CHECK(x.valuation() == 2);
  CHECK(x.shift_down(2).residue() == 3);
  CHECK(x.shift_down(2).precision() == 8);
  CHECK(x.shift_up(3).precision() == 13);
  CHECK_THROWS_AS(PadicInt(0, 8).valuation(), PrecisionError);
  CHECK(PadicInt(0, 8).valuation_floor() == 8);
  CHECK_THROWS_AS(x.congruent(y, 7), PrecisionError);
  CHECK((PadicInt(3, 20) * PadicInt(3, 20).unit_inverse()).residue() == 1);
}

TEST_CASE("embedding K into Q_2") {
  const int n = 64;
  const Padic2 l = embed_K_2adic(KElt::lambda(), Place::lambda(), n);
  const Padic2 lb = embed_K_2adic(KElt::lambda(), Place::lambda_bar(), n);
  CHECK(l.valuation() == 1);
  CHECK(lb.valuation() == 0);
  CHECK((l * lb).congruent(embed_K_2adic(KElt(2), Place::lambda(), n), 60));
  const Padic2 half = embed_K_2adic(KElt(Rational(1, 2)), Place::lambda(), n);
  CHECK(half.valuation() == -1);
  // The two embeddings are exchanged by conjugation.
  const KElt x(Rational(3), Rational(-5));
  CHECK(embed_K_2adic(x, Place::lambda_bar(), n).congruent(embed_K_2adic(x.conj(), Place::lambda(), n), 60));
}

TEST_CASE("matrix embedding is multiplicative") {
  MatK a, b;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      a(i, j) = KElt(Rational(i + 2 * j), Rational(j - i));
      b(i, j) = KElt(Rational(1 - i * j), Rational(i + 1));
    }
  const auto pa = embed_matrix(a, Place::lambda(), 64), pb = embed_matrix(b, Place::lambda(), 64);
  CHECK((pa * pb).congruent(embed_matrix(a * b, Place::lambda(), 64), 50));
  CHECK(pa.transpose()(0, 1).residue() == pa(1, 0).residue());
}
