#include <doctest.h>

#include <set>

#include "../oracles.hpp"
#include "fpp/errors.hpp"
#include "fpp/hermitian.hpp"
#include "fpp/lattice_group.hpp"
#include "fpp/levels.hpp"
#include "fpp/sampling.hpp"

using namespace fpp;

TEST_CASE("reduction modulo sqrt(-7)") {
  CHECK(reduce_mod_sqrt7(KElt::lambda()) == 3);
  CHECK(reduce_mod_sqrt7(KElt::lambda_bar()) == 3);
  CHECK(reduce_mod_sqrt7(KElt::sqrt_minus7()) == 0);
  CHECK(reduce_mod_sqrt7(KElt(Rational(1, 2))) == 4);
  CHECK_THROWS_AS(reduce_mod_sqrt7(KElt(Rational(1, 7))), DomainError);
  const FqMat h = reduce_mod_sqrt7(build_H().matrix());
  CHECK(h == FqMat(3, {3, 3, 3, 3, 3, 3, 3, 3, 3}));
  CHECK(h.rank() == 1);
  CHECK(reduce_mod_sqrt7(MatK::identity()) == FqMat::identity(3));
  Sampler rng(41);
  for (int s = 0; s < 30; ++s) {
    const KElt x = rng.k_elt(), y = rng.k_elt();
    CHECK(reduce_mod_sqrt7(x * y) == mod7(reduce_mod_sqrt7(x) * reduce_mod_sqrt7(y)));
    CHECK(reduce_mod_sqrt7(x + y) == mod7(reduce_mod_sqrt7(x) + reduce_mod_sqrt7(y)));
  }
}

TEST_CASE("null space and varpi") {
  const auto& ns = null_space_basis();
  CHECK(ns[0] == std::array<int, 3>{6, 1, 0});
  CHECK(ns[1] == std::array<int, 3>{6, 0, 1});
  CHECK(varpi(MatK::identity()) == FqMat::identity(2));
  CHECK(varpi(MatK::scalar(KElt(3))) == FqMat::scalar(2, 3));
  CHECK_THROWS_AS(varpi(FqMat(3, {1, 0, 0, 0, 0, 0, 0, 0, 0})), DomainError);
}

TEST_CASE("GL_2(F_7) matches brute force") {
  const auto [all, pm] = oracle::gl2_counts();
  const auto g = general_linear_group_2();
  CHECK(static_cast<int>(g.size()) == all);
  CHECK(all == 2016);
  std::size_t n = 0;
  for (const auto& m : g) n += m.det() == 1 || m.det() == 6;
  CHECK(static_cast<int>(n) == pm);
  CHECK(std::set<FqMat>(g.begin(), g.end()).size() == g.size());
}

TEST_CASE("Sylow subgroup") {
  const SylowP p = sylow2_P(0);
  CHECK(p.order() == 32);  // 672 = 2^5 * 21
  CHECK(p.contains(FqMat::scalar(2, 6)));
  CHECK(p.contains(FqMat::identity(2)));
  for (const auto& g : p.elements()) {
    CHECK((g.det() == 1 || g.det() == 6));
    CHECK(p.contains(g.inverse()));
    const int o = g.order();
    CHECK((o & (o - 1)) == 0);
  }
  CHECK(generated_subgroup(p.generators()).size() == 32);
  std::size_t up_to_scalar = 0;
  for (const auto& g : general_linear_group_2()) up_to_scalar += p.contains_up_to_scalar(g);
  CHECK(up_to_scalar == 96);
  for (std::uint64_t seed : {1u, 2u, 3u, 17u}) {
    const SylowP q = sylow2_P(seed);
    CHECK(q.order() == 32);
    const auto c = conjugator(p, q);
    REQUIRE(c.has_value());
    for (const auto& g : p.elements()) CHECK(q.contains(*c * g * c->inverse()));
  }
}

TEST_CASE("theta") {
  CHECK(theta_of(MatK::identity()) == KElt(1));
  CHECK(theta_of(MatK::scalar(KElt(5))) == KElt(5));
  CHECK_THROWS_AS(theta_of(MatK::diagonal(KElt(1), KElt(2), KElt(1))), DomainError);
  const auto list = enumerate_similitudes(2);
  for (std::size_t i = 0; i + 1 < list.size(); i += 97) {
    const MatK a = to_K(list[i].matrix), b = to_K(list[i + 1].matrix);
    CHECK(theta_of(a * b) == theta_of(a) * theta_of(b));
  }
}

TEST_CASE("C_7 membership") {
  const SylowP p = sylow2_P(0);
  CHECK(in_C7(MatK::identity(), p));
  // 1 + sqrt(-7) reduces to the identity.
  CHECK(in_C7(MatK::scalar(KElt(1) + KElt::sqrt_minus7()), p));
  // An order-7 image lies in no 2-group.
  const FqMat u(2, {1, 1, 0, 1});
  CHECK(u.order() == 7);
  CHECK_FALSE(p.contains(u));
  CHECK_FALSE(p.contains_up_to_scalar(u));
}

TEST_CASE("component count") {
  CHECK(component_count() == 3);
  CHECK(component_count({1, 2, 3, 4, 5, 6}) == 1);
  CHECK(component_count({1}) == 3);
  CHECK(6 % component_count({1, 2, 4}) == 0);
}
