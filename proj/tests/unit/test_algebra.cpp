#include <doctest.h>

#include "fpp/algebra.hpp"
#include "fpp/errors.hpp"
#include "fpp/hermitian.hpp"
#include "fpp/sampling.hpp"

using namespace fpp;

TEST_CASE("defining relations") {
  const DElt pi = DElt::pi();
  CHECK(pi * power(pi, 2) == DElt::scalar(KElt::mu()));
  CHECK(pi * DElt(LElt::zeta(1)) == DElt(LElt::zeta(2)) * pi);
  CHECK(DElt::one() * pi == pi);
}

TEST_CASE("inverses") {
  CHECK(inverse(DElt::pi()) == DElt::monomial(KElt::mu_bar().to_L(), 2));
  CHECK(inverse(DElt::one()) == DElt::one());
  CHECK(inverse(DElt::scalar(KElt::lambda())) == DElt::scalar(KElt::lambda_bar() * Rational(1, 2)));
  CHECK_THROWS_AS(inverse(DElt()), DomainError);
  Sampler rng(21);
  for (int s = 0; s < 20; ++s) {
    const DElt x = rng.d_elt(2);
    if (!x.is_zero()) CHECK(x * inverse(x) == DElt::one());
  }
}

TEST_CASE("phi is a ring homomorphism with inverse") {
  CHECK(phi(DElt::pi()) == to_L(pi_matrix()));
  Sampler rng(22);
  for (int s = 0; s < 30; ++s) {
    const DElt x = rng.d_elt(), y = rng.d_elt();
    CHECK(phi(x * y) == phi(x) * phi(y));
    CHECK(phi(x + y) == phi(x) + phi(y));
    CHECK(phi_inverse(phi(x)) == x);
  }
  CHECK_THROWS_AS(phi_inverse(MatL::diagonal(LElt(1), LElt(2), LElt(3))), DomainError);
}

TEST_CASE("reduced trace and norm lie in K") {
  Sampler rng(23);
  for (int s = 0; s < 20; ++s) {
    const DElt x = rng.d_elt(2), y = rng.d_elt(2);
    CHECK(reduced_norm(x * y) == reduced_norm(x) * reduced_norm(y));
    CHECK(reduced_trace(x + y) == reduced_trace(x) + reduced_trace(y));
  }
  CHECK(reduced_norm(DElt::pi()) == KElt::mu());
  CHECK(reduced_trace(DElt::one()) == KElt(3));
}

TEST_CASE("involutions") {
  CHECK(star(DElt::pi()) == DElt::monomial(KElt::mu_bar().to_L(), 2));
  CHECK(star(DElt(LElt::zeta(1))) == DElt(LElt::zeta(6)));
  CHECK(star(build_b()) == -build_b());
  Sampler rng(24);
  for (int s = 0; s < 20; ++s) {
    const DElt x = rng.d_elt(2), y = rng.d_elt(2);
    CHECK(star(star(x)) == x);
    CHECK(bigstar(bigstar(x)) == x);
    CHECK(star(x * y) == star(y) * star(x));
    CHECK(bigstar(x * y) == bigstar(y) * bigstar(x));
  }
}

TEST_CASE("phi(b) is the tabulated matrix") {
  const KElt l = KElt::lambda(), lb = KElt::lambda_bar(), d = l - lb;
  const MatK expected(std::array<KElt, 9>{d, l, -l, -lb, d, l, lb, -lb, d});
  CHECK(to_K(phi(build_b())) == expected);
  CHECK(phi_b_matrix().matrix() == expected);
}

TEST_CASE("psi") {
  Sampler rng(25);
  for (int s = 0; s < 20; ++s) {
    const DElt a = rng.d_elt(1), x = rng.d_elt(1), y = rng.d_elt(1);
    CHECK(psi(x, y) == -psi(y, x));
    CHECK(psi(a * x, y) == psi(x, star(a) * y));
  }
  CHECK(psi(DElt(), DElt::pi()) == 0);
  const auto g = psi_gram();
  CHECK(g.size() == 18);
  CHECK(determinant(g) != 0);
}

TEST_CASE("order O_D") {
  const LElt lb = KElt::lambda_bar().to_L();
  CHECK(in_order(DElt::one()));
  CHECK(in_order(DElt::monomial(lb, 1)));
  CHECK_FALSE(in_order(DElt::pi()));
  CHECK(in_order(DElt::pi(), Place::lambda()));
  CHECK_FALSE(in_order(DElt::pi(), Place::lambda_bar()));
  CHECK(in_order(DElt::monomial(KElt::mu_bar().to_L(), 2), Place::lambda_bar()));
  CHECK_FALSE(in_order(DElt(LElt(Rational(1, 2)))));
  CHECK(in_order(DElt(LElt(Rational(1, 3))), Place::lambda()));
}

TEST_CASE("Hasse invariants") {
  CHECK(local_invariant(Place::lambda()) == Rational(1, 3));
  CHECK(local_invariant(Place::lambda_bar()) == Rational(-1, 3));
  CHECK(local_invariant(Place::rational(3)) == 0);
  CHECK_THROWS_AS(local_invariant(Place::seven()), DomainError);
  Rational sum = 0;
  bool seven = false;
  for (const auto& inv : hasse_invariants()) {
    sum += inv.value;
    if (inv.from_reciprocity) seven = inv.place == Place::seven() && inv.value == 0;
  }
  CHECK(sum == 0);
  CHECK(seven);
}

TEST_CASE("group G membership") {
  const auto one = in_group_G(DElt::one());
  REQUIRE(one);
  CHECK(*one == 1);
  const auto l = in_group_G(DElt::scalar(KElt::lambda()));
  REQUIRE(l);
  CHECK(*l == 2);
  CHECK_FALSE(in_group_G(DElt(LElt::zeta(1) + LElt(2))).has_value());
}

TEST_CASE("inner form identities") {
  const auto r = check_inner_form_data(5, 3);
  CHECK(r.galois_twist_fixes_phi);
  CHECK(r.phi_b_commutes_with_q);
  CHECK(r.conjugation_transport);
  CHECK(r.ok());
}
