#pragma once

// Integral similitudes of the hermitian lattice (O_K^3, H): gamma H gamma* = c H
// with gamma in M_3(O_K).

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fpp/levels.hpp"
#include "fpp/matrix.hpp"
#include "fpp/numberfield.hpp"

namespace fpp {

using VecOK = std::array<IntK, 3>;

/// u H v* for row vectors over O_K.
IntK hermitian_product(const VecOK& u, const VecOK& v);

struct ShortVector {
  VecOK v;
  std::int64_t norm = 0;  // h(v, v)
};

/// The rank-6 rational Gram matrix of Re h on the Z-basis
/// (e_0, lambda e_0, e_1, lambda e_1, e_2, lambda e_2) of O_K^3.
RationalMatrix real_gram_matrix();

/// Every v in O_K^3 with h(v, v) = n, sorted lexicographically on
/// (a_0, b_0, a_1, b_1, a_2, b_2). Exact Fincke-Pohst enumeration.
std::vector<ShortVector> enumerate_short_vectors(std::int64_t n);

struct Similitude {
  MatOK matrix;
  std::int64_t factor = 0;  // gamma H gamma* = factor * H
  IntK det;
  FqMat level_image;        // varpi(gamma)
};

/// Validates gamma H gamma* = c H for some c > 0; throws DomainError otherwise.
Similitude make_similitude(const MatOK& gamma);

/// All similitudes with factor c = 2^k, rows drawn from the vectors of norm 3c
/// and pruned by the off-diagonal entries of c H. Lexicographic order.
std::vector<Similitude> enumerate_similitudes(std::int64_t c);

struct KThetaDecomposition {
  KElt k;       // (gamma gamma^dagger)^{-1} det gamma
  MatK theta;   // gamma / k, with theta theta^dagger = 1
};
KThetaDecomposition normalize_k_theta(const Similitude& gamma);

/// Image in PGL_3(Q_2) lies in the group: some +-2^j gamma is in C_7, i.e.
/// varpi(gamma) in F_7^x P.
bool in_gamma_mum(const Similitude& gamma, const SylowP& p);
/// The same membership through the unitary part: varpi(theta) in P.
bool in_gamma_mum_unitary(const Similitude& gamma, const SylowP& p);

/// Line format: a header `# fpp similitudes v1`, `factor <c>`, `count <n>`,
/// then one line per matrix with nine `a,b` pairs (a + b lambda) row-major.
void write_similitudes(std::ostream& os, std::int64_t factor, const std::vector<Similitude>& list);
/// Parses and re-validates every matrix; throws DomainError on malformed input.
std::vector<Similitude> read_similitudes(std::istream& is, std::int64_t* factor = nullptr);

}  // namespace fpp
