#pragma once

// Vertices of the Bruhat-Tits building of PGL_3(Q_2): homothety classes of
// Z_2-lattices in Q_2^3, with the action of similitudes through the place
// lambda.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fpp/lattice_group.hpp"
#include "fpp/levels.hpp"
#include "fpp/linalg.hpp"

namespace fpp {

using LatticeRow = std::array<Integer, 3>;

/// Row-style Hermite normal form of a primitive lattice L (L in Z_2^3, not in
/// 2 Z_2^3): upper triangular, diagonal 2^a_i, entries above the diagonal in
/// [0, 2^a_j). Every homothety class has exactly one such representative.
class BuildingVertex {
 public:
  /// The class of the row span of `rows`, computed modulo 2^precision.
  /// Throws PrecisionError unless the pivots certify the result.
  static BuildingVertex from_rows(const std::vector<LatticeRow>& rows, int precision);

  const std::array<Integer, 9>& rep() const { return rep_; }
  const Integer& operator()(int i, int j) const { return rep_[static_cast<std::size_t>(3 * i + j)]; }
  /// Exponents a_i of the diagonal.
  std::array<int, 3> exponents() const;
  /// (a_0 + a_1 + a_2) mod 3.
  int type() const;
  std::vector<LatticeRow> rows() const;
  std::string str() const;

  bool operator==(const BuildingVertex& o) const { return rep_ == o.rep_; }
  bool operator<(const BuildingVertex& o) const;

 private:
  std::array<Integer, 9> rep_;
};

BuildingVertex standard_vertex();

/// Classes [M] with 2L < M < L, sorted.
std::vector<BuildingVertex> neighbors(const BuildingVertex& v);

struct BallEntry {
  BuildingVertex vertex;
  int distance = 0;
};
/// Vertices at distance <= radius from v, ordered by (distance, rep).
std::vector<BallEntry> ball(const BuildingVertex& v, int radius);

inline constexpr int kMaxActPrecision = 1024;

/// [gamma_lambda L] for the image gamma_lambda of gamma at the place lambda.
/// Starts at `precision` bits and doubles up to kMaxActPrecision.
BuildingVertex act(const MatK& gamma, const BuildingVertex& v, int precision = 64);
BuildingVertex act(const Similitude& gamma, const BuildingVertex& v, int precision = 64);

struct Witness {
  std::int64_t factor = 0;
  std::size_t index = 0;  // position in the similitude list for that factor
};

struct TransitivityReport {
  int radius = 0;
  std::size_t ball_size = 0;
  std::size_t reached = 0;
  std::size_t elements_tested = 0;   // members of the group among the lists
  std::vector<BuildingVertex> unreached;
  std::map<BuildingVertex, Witness> witnesses;  // first witness per reached ball vertex
  /// Non-scalar group members fixing the standard vertex.
  std::vector<Witness> stabilizers;
  /// type(gamma . o) == v_lambda(det gamma) mod 3 for every tested element.
  bool type_audit_ok = true;
  bool ok() const { return unreached.empty() && stabilizers.empty() && type_audit_ok; }
};

/// Images of the standard vertex under the members of the group found in
/// `lists` (keyed by factor), compared with the ball of the given radius.
TransitivityReport check_transitivity(int radius, const std::map<std::int64_t, std::vector<Similitude>>& lists,
                                      const SylowP& p, int precision = 64);

}  // namespace fpp
