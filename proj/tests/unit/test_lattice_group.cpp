#include <doctest.h>

#include <sstream>

#include "../oracles.hpp"
#include "fpp/errors.hpp"
#include "fpp/hermitian.hpp"
#include "fpp/lattice_group.hpp"

using namespace fpp;

namespace {

oracle::Vec to_oracle(const VecOK& v) { return {oracle::Ok{v[0].a, v[0].b}, oracle::Ok{v[1].a, v[1].b}, oracle::Ok{v[2].a, v[2].b}}; }

oracle::Mat to_oracle(const MatOK& m) {
  oracle::Mat out;
  for (int k = 0; k < 9; ++k) out[static_cast<std::size_t>(k)] = {m(k / 3, k % 3).a, m(k / 3, k % 3).b};
  return out;
}

}  // namespace

TEST_CASE("real Gram matrix is positive definite") {
  const auto g = real_gram_matrix();
  CHECK(g.size() == 6);
  CHECK(is_positive_definite(g));
  CHECK(g[0][0] == 3);
}

TEST_CASE("short vectors agree with box search") {
  CHECK(enumerate_short_vectors(0).size() == 1);
  for (std::int64_t n = 1; n <= 12; ++n) {
    const auto fast = enumerate_short_vectors(n);
    const auto slow = oracle::short_vectors(n);
    REQUIRE(fast.size() == slow.size());
    for (std::size_t i = 0; i < fast.size(); ++i) CHECK(to_oracle(fast[i].v) == slow[i]);
  }
  CHECK(enumerate_short_vectors(3).size() == 14);
  CHECK(enumerate_short_vectors(6).size() == 70);
  CHECK(enumerate_short_vectors(24).size() == 1190);
}

TEST_CASE("isometries agree with unpruned search") {
  const auto fast = enumerate_similitudes(1);
  const auto slow = oracle::isometries();
  REQUIRE(fast.size() == slow.size());
  CHECK(fast.size() == 42);
  for (std::size_t i = 0; i < fast.size(); ++i) CHECK(to_oracle(fast[i].matrix) == slow[i]);
  bool plus = false, minus = false;
  for (const auto& s : fast) {
    plus = plus || s.matrix == MatOK::identity();
    minus = minus || s.matrix == MatOK::scalar(IntK{-1, 0});
  }
  CHECK(plus);
  CHECK(minus);
}

TEST_CASE("similitude counts and identities") {
  CHECK(enumerate_similitudes(2).size() == 672);
  CHECK(enumerate_similitudes(4).size() == 5418);
  CHECK_THROWS_AS(enumerate_similitudes(3), DomainError);
  for (const auto& s : enumerate_similitudes(2)) {
    CHECK(s.det.norm() == 8);
    const auto kt = normalize_k_theta(s);
    CHECK(kt.theta * dagger(kt.theta) == MatK::identity());
    CHECK(kt.theta.scaled(kt.k) == to_K(s.matrix));
  }
}

TEST_CASE("group closure of products") {
  const auto one = enumerate_similitudes(1);
  const auto two = enumerate_similitudes(2);
  const auto four = enumerate_similitudes(4);
  for (std::size_t i = 0; i < two.size(); i += 61)
    for (std::size_t j = 0; j < two.size(); j += 83) {
      const MatOK p = two[i].matrix * two[j].matrix;
      const Similitude s = make_similitude(p);
      CHECK(s.factor == 4);
      CHECK(std::binary_search(four.begin(), four.end(), s, [](const Similitude& a, const Similitude& b) {
        return a.matrix.entries() < b.matrix.entries();
      }));
    }
  for (const auto& a : one) CHECK(make_similitude(a.matrix * one[5].matrix).factor == 1);
  CHECK_THROWS_AS(make_similitude(MatOK::diagonal(IntK{1, 0}, IntK{1, 0}, IntK{2, 0})), DomainError);
}

TEST_CASE("k theta normalization") {
  const auto id = normalize_k_theta(make_similitude(MatOK::identity()));
  CHECK(id.k == KElt(1));
  CHECK(id.theta == MatK::identity());
  const auto two = normalize_k_theta(make_similitude(MatOK::scalar(IntK{2, 0})));
  CHECK(two.k == KElt(2));
  CHECK(two.theta == MatK::identity());
}

TEST_CASE("group membership predicates agree") {
  const SylowP p = sylow2_P(0);
  CHECK(in_gamma_mum(make_similitude(MatOK::identity()), p));
  std::size_t members = 0;
  for (const auto& s : enumerate_similitudes(2)) {
    CHECK(in_gamma_mum(s, p) == in_gamma_mum_unitary(s, p));
    members += in_gamma_mum(s, p);
  }
  CHECK(members == 32);
  std::size_t isometries = 0;
  for (const auto& s : enumerate_similitudes(1)) isometries += in_gamma_mum(s, p);
  CHECK(isometries == 2);
}

TEST_CASE("similitude text format round trip") {
  const auto list = enumerate_similitudes(2);
  std::ostringstream os;
  write_similitudes(os, 2, list);
  std::istringstream is(os.str());
  std::int64_t factor = 0;
  const auto back = read_similitudes(is, &factor);
  CHECK(factor == 2);
  REQUIRE(back.size() == list.size());
  for (std::size_t i = 0; i < list.size(); ++i) CHECK(back[i].matrix == list[i].matrix);

  std::istringstream bad_header("# something else\nfactor 1\ncount 0\n");
  CHECK_THROWS_AS(read_similitudes(bad_header), DomainError);
  std::istringstream bad_count("# fpp similitudes v1\nfactor 1\ncount 2\n1,0 0,0 0,0 0,0 1,0 0,0 0,0 0,0 1,0\n");
  CHECK_THROWS_AS(read_similitudes(bad_count), DomainError);
  std::istringstream not_similitude("# fpp similitudes v1\nfactor 1\ncount 1\n1,0 0,0 0,0 0,0 1,0 0,0 0,0 0,0 2,0\n");
  CHECK_THROWS_AS(read_similitudes(not_similitude), DomainError);
}
