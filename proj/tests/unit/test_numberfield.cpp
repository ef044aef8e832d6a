#include <doctest.h>

#include "fpp/errors.hpp"
#include "fpp/numberfield.hpp"
#include "fpp/sampling.hpp"

using namespace fpp;

TEST_CASE("lambda satisfies t^2 + t + 2") {
  const KElt l = KElt::lambda();
  CHECK(l * l + l + KElt(2) == KElt());
  CHECK(l * KElt::lambda_bar() == KElt(2));
  CHECK(l.conj() == KElt::lambda_bar());
  CHECK(KElt::sqrt_minus7() == l - KElt::lambda_bar());
  CHECK(KElt::sqrt_minus7() * KElt::sqrt_minus7() == KElt(-7));
}

TEST_CASE("lambda is zeta + zeta^2 + zeta^4 inside L") {
  const LElt s = LElt::zeta(1) + LElt::zeta(2) + LElt::zeta(4);
  CHECK(s == KElt::lambda().to_L());
  REQUIRE(s.to_K().has_value());
  CHECK(*s.to_K() == KElt::lambda());
  CHECK_FALSE(LElt::zeta(1).to_K().has_value());
}

TEST_CASE("zeta^7 = 1 and the power basis reduction") {
  LElt z = LElt(1);
  for (int i = 0; i < 7; ++i) z *= LElt::zeta(1);
  CHECK(z == LElt(1));
  CHECK(LElt::zeta(6) == -(LElt(1) + LElt::zeta(1) + LElt::zeta(2) + LElt::zeta(3) + LElt::zeta(4) + LElt::zeta(5)));
}

TEST_CASE("sigma has order 3 and fixes K") {
  Sampler rng(11);
  for (int s = 0; s < 20; ++s) {
    const LElt x = rng.l_elt();
    CHECK(x.galois(3) == x);
    CHECK(x.galois(1).galois(2) == x);
    const KElt k = rng.k_elt();
    CHECK(k.to_L().galois(1) == k.to_L());
    CHECK(x.conj().conj() == x);
  }
  CHECK(LElt::zeta(1).galois(1) == LElt::zeta(2));
  CHECK(LElt::zeta(1).conj() == LElt::zeta(6));
}

TEST_CASE("field operations in L and K") {
  Sampler rng(12);
  for (int s = 0; s < 20; ++s) {
    const LElt x = rng.l_elt(), y = rng.l_elt();
    CHECK((x + y) * y == x * y + y * y);
    if (!x.is_zero()) CHECK(x * x.inverse() == LElt(1));
    CHECK((x * y).norm() == x.norm() * y.norm());
    const KElt k = rng.k_fraction();
    if (!k.is_zero()) CHECK(k * k.inverse() == KElt(1));
    CHECK(k.norm() == (k * k.conj()).a());
  }
  CHECK(LElt::zeta(1).norm() == 1);
  CHECK(LElt::zeta(1).trace() == -1);
  CHECK(LElt(1).trace_to_K() == KElt(3));
}

TEST_CASE("valuations at the places over 2") {
  CHECK(valuation(KElt::lambda(), Place::lambda()) == 1);
  CHECK(valuation(KElt::lambda(), Place::lambda_bar()) == 0);
  CHECK(valuation(KElt(8), Place::lambda_bar()) == 3);
  CHECK(valuation(KElt::mu(), Place::lambda()) == 1);
  CHECK(valuation(KElt::mu(), Place::lambda_bar()) == -1);
  CHECK(valuation(KElt(), Place::lambda()) == kInfinity);
  CHECK(valuation(KElt(Rational(1, 4)), Place::lambda()) == -2);
}

TEST_CASE("valuations at odd places") {
  CHECK(valuation(KElt(7), Place::seven()) == 2);
  CHECK(valuation(KElt::sqrt_minus7(), Place::seven()) == 1);
  CHECK(valuation(KElt(9), Place::rational(3)) == 2);  // 3 is inert
  CHECK_FALSE(Place::rational(3).is_split());
  CHECK(Place::rational(11).is_split());
  CHECK(Place::rational(3).norm() == 9);
  // 11 = (a + b lambda)(conj); exactly one place over 11 sees each factor.
  const KElt f(Rational(3), Rational(1));  // norm 9 - 3 + 2 = 8, unrelated to 11
  CHECK(valuation(f, Place::rational(11)) == 0);
  CHECK_THROWS_AS(Place::rational(7), DomainError);
  CHECK_THROWS_AS(Place::rational(9), DomainError);
}

TEST_CASE("complex embeddings") {
  const auto l = embed_complex(KElt::lambda(), Place::epsilon());
  CHECK(l.real() == doctest::Approx(-0.5));
  CHECK(l.imag() == doctest::Approx(1.3228756555));
  const auto z = embed_complex(KElt::lambda().to_L(), Place::theta());
  CHECK(z.real() == doctest::Approx(-0.5));
  CHECK(z.imag() == doctest::Approx(1.3228756555));
  CHECK_THROWS_AS(embed_complex(LElt::zeta(1), Place::epsilon()), DomainError);
  CHECK_THROWS_AS(embed_complex(KElt(1), Place::lambda()), DomainError);
}

TEST_CASE("IntK agrees with KElt") {
  Sampler rng(13);
  for (int s = 0; s < 50; ++s) {
    const IntK x = rng.int_k(), y = rng.int_k();
    CHECK((x * y).to_K() == x.to_K() * y.to_K());
    CHECK(x.conj().to_K() == x.to_K().conj());
    CHECK(Rational(x.norm()) == x.to_K().norm());
  }
}
