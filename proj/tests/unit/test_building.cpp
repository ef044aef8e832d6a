#include <doctest.h>

#include <set>

#include "../oracles.hpp"
#include "fpp/building.hpp"
#include "fpp/errors.hpp"
#include "fpp/lattice_group.hpp"

using namespace fpp;

namespace {

oracle::LatticeBits to_bits(const BuildingVertex& v, int k) {
  std::vector<std::array<long, 3>> gens;
  for (const auto& r : v.rows()) gens.push_back({r[0].get_si(), r[1].get_si(), r[2].get_si()});
  return oracle::LatticeBits::span(k, gens);
}

}  // namespace

TEST_CASE("normal form") {
  const BuildingVertex o = standard_vertex();
  CHECK(o.type() == 0);
  CHECK(o.exponents() == std::array<int, 3>{0, 0, 0});
  // Homothety and row operations do not change the class.
  CHECK(BuildingVertex::from_rows({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}, 16) == o);
  CHECK(BuildingVertex::from_rows({{1, 1, 0}, {0, 1, 0}, {3, 5, 1}}, 16) == o);
  const BuildingVertex v = BuildingVertex::from_rows({{2, 0, 0}, {1, 1, 0}, {0, 0, 4}}, 16);
  CHECK(BuildingVertex::from_rows(v.rows(), 16) == v);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < i; ++j) CHECK(v(i, j) == 0);
  CHECK_THROWS_AS(BuildingVertex::from_rows({{1, 0, 0}, {0, 1, 0}}, 16), PrecisionError);
}

TEST_CASE("neighbors") {
  const BuildingVertex o = standard_vertex();
  const auto n = neighbors(o);
  CHECK(n.size() == 14);
  std::set<int> types;
  for (const auto& w : n) {
    types.insert(w.type());
    CHECK(neighbors(w).size() == 14);
    const auto back = neighbors(w);
    CHECK(std::find(back.begin(), back.end(), o) != back.end());
  }
  CHECK(types == std::set<int>{1, 2});
}

TEST_CASE("balls agree with the bitset oracle") {
  const auto [sizes, vertices] = oracle::ball(2);
  CHECK(sizes == std::vector<std::size_t>{1, 15, 113});
  const auto b = ball(standard_vertex(), 2);
  REQUIRE(b.size() == vertices.size());
  std::set<oracle::LatticeBits> mine;
  for (const auto& e : b) mine.insert(to_bits(e.vertex, 5));
  CHECK(mine == vertices);
  CHECK(ball(standard_vertex(), 0).size() == 1);
  CHECK(ball(standard_vertex(), 1).size() == 15);
  CHECK(ball(standard_vertex(), 3).size() == 673);
  CHECK_THROWS_AS(ball(standard_vertex(), -1), DomainError);
}

TEST_CASE("action") {
  const BuildingVertex o = standard_vertex();
  CHECK(act(MatK::identity(), o) == o);
  CHECK(act(MatK::scalar(KElt(2)), o) == o);
  CHECK(act(MatK::scalar(KElt::lambda()), o) == o);
  CHECK_THROWS_AS(act(MatK(), o), DomainError);
  const auto two = enumerate_similitudes(2);
  const auto n = neighbors(o);
  for (std::size_t i = 0; i < two.size(); i += 17) {
    const BuildingVertex u = act(two[i], o);
    // Factor-2 similitudes move o to a neighbor or fix it.
    CHECK((u == o || std::find(n.begin(), n.end(), u) != n.end()));
    CHECK(u.type() == valuation(two[i].det.to_K(), Place::lambda()) % 3);
  }
  // act is a left action and preserves adjacency.
  for (std::size_t i = 0; i + 1 < two.size(); i += 53) {
    const MatK g = to_K(two[i].matrix), h = to_K(two[i + 1].matrix);
    CHECK(act(g * h, o) == act(g, act(h, o)));
    const BuildingVertex a = act(h, o);
    if (a == o) continue;
    const auto na = neighbors(act(g, o));
    CHECK(std::find(na.begin(), na.end(), act(g, a)) != na.end());
  }
}

TEST_CASE("transitivity at small radius") {
  const SylowP p = sylow2_P(0);
  std::map<std::int64_t, std::vector<Similitude>> lists;
  for (std::int64_t c : {1, 2, 4, 8}) lists.emplace(c, enumerate_similitudes(c));
  const auto r1 = check_transitivity(1, lists, p);
  CHECK(r1.ok());
  CHECK(r1.reached == 15);
  const auto r2 = check_transitivity(2, lists, p);
  CHECK(r2.ok());
  CHECK(r2.reached == 113);
  CHECK(r2.stabilizers.empty());
  // Isometries alone only fix the standard vertex.
  std::map<std::int64_t, std::vector<Similitude>> only_one{{1, lists.at(1)}};
  const auto r0 = check_transitivity(1, only_one, p);
  CHECK(r0.reached == 1);
  CHECK(r0.unreached.size() == 14);
}
