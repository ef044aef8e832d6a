#pragma once

// Level structure at 7: reduction modulo sqrt(-7), the representation on the
// null space of H mod sqrt(-7), and a 2-Sylow subgroup of the determinant +-1
// part of GL_2(F_7).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fpp/matrix.hpp"
#include "fpp/numberfield.hpp"

namespace fpp {

inline constexpr int kFieldSeven = 7;

/// Residue in [0, 7).
int mod7(long v);
int inverse_mod7(int a);

/// n x n matrix over F_7, n in {2, 3}.
class FqMat {
 public:
  FqMat() = default;
  FqMat(int n, std::vector<int> entries);
  static FqMat identity(int n);
  static FqMat scalar(int n, int s);

  int size() const { return n_; }
  int operator()(int i, int j) const { return e_[static_cast<std::size_t>(n_ * i + j)]; }
  const std::vector<int>& entries() const { return e_; }

  FqMat operator*(const FqMat& o) const;
  int det() const;
  bool invertible() const { return det() != 0; }
  FqMat inverse() const;
  int rank() const;
  /// Multiplicative order; throws DomainError for a singular matrix.
  int order() const;

  auto operator<=>(const FqMat& o) const = default;
  std::string str() const;

 private:
  int n_ = 0;
  std::vector<int> e_;
};

/// Ring map O_K -> F_7 with lambda -> 3; throws DomainError if x is not 7-integral.
int reduce_mod_sqrt7(const KElt& x);
FqMat reduce_mod_sqrt7(const MatK& a);
FqMat reduce_mod_sqrt7(const MatOK& a);

/// Rows spanning the left null space of H mod sqrt(-7), by elimination with
/// smallest-index pivots: (6, 1, 0) and (6, 0, 1).
const std::array<std::array<int, 3>, 2>& null_space_basis();

/// Matrix of u -> u * (gamma mod sqrt(-7)) on null_space_basis(). Throws
/// DomainError when the null space is not preserved.
FqMat varpi(const FqMat& gamma_mod);
FqMat varpi(const MatK& gamma);
FqMat varpi(const MatOK& gamma);

/// All elements of GL_2(F_7), in lexicographic order of entries.
std::vector<FqMat> general_linear_group_2();
/// Subgroup generated by `generators`.
std::vector<FqMat> generated_subgroup(const std::vector<FqMat>& generators);

class SylowP {
 public:
  SylowP(std::vector<FqMat> elements, std::vector<FqMat> generators, std::uint64_t seed);

  const std::vector<FqMat>& elements() const { return elements_; }
  const std::vector<FqMat>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }
  std::uint64_t seed() const { return seed_; }
  bool contains(const FqMat& m) const;
  /// Whether m lies in F_7^x * P.
  bool contains_up_to_scalar(const FqMat& m) const;

 private:
  std::vector<FqMat> elements_;  // sorted
  std::vector<FqMat> generators_;
  std::uint64_t seed_;
};

/// A 2-Sylow subgroup of {g in GL_2(F_7) : det g = +-1}: shuffle the group with
/// mt19937_64(seed) and greedily add elements while the generated subgroup
/// stays a 2-group.
SylowP sylow2_P(std::uint64_t seed = 0);

/// Some g in GL_2(F_7) with g A g^{-1} = B, if A and B are conjugate.
std::optional<FqMat> conjugator(const SylowP& a, const SylowP& b);

/// gamma in C_7, i.e. varpi(gamma) in P.
bool in_C7(const MatK& gamma, const SylowP& p);

/// (gamma gamma^dagger)^{-1} det(gamma); throws DomainError when
/// gamma gamma^dagger is not scalar.
KElt theta_of(const MatK& gamma);

/// |F_7^x / <level, -1>|: the number of components for a level whose image of
/// theta mod sqrt(-7) is generated by `level_residues`. Units of O_K are +-1
/// and the class number is 1.
int component_count(const std::vector<int>& level_residues = {1, 6});

}  // namespace fpp
