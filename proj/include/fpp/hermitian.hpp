#pragma once

// The hermitian form h(x, y) = tr_{L/K}(x conj(y)) on L viewed over K, its
// matrix H on the basis 1, zeta, zeta^2, and related forms.

#include <complex>
#include <utility>

#include "fpp/matrix.hpp"
#include "fpp/numberfield.hpp"
#include "fpp/padic.hpp"

namespace fpp {

/// A 3x3 matrix over K known to be hermitian or anti-hermitian.
class HermMat {
 public:
  enum class Kind { Hermitian, AntiHermitian };

  /// Throws DomainError when m does not have the claimed symmetry.
  HermMat(const MatK& m, Kind kind);

  const MatK& matrix() const { return m_; }
  Kind kind() const { return kind_; }
  KElt det() const { return m_.det(); }

 private:
  MatK m_;
  Kind kind_;
};

HermMat build_H();
MatK build_W();
/// sqrt(-7) * phi(b), the hermitian form attached to the algebra side.
HermMat build_H_prime();
/// phi(b) as an anti-hermitian matrix over K.
HermMat phi_b_matrix();

/// h(x, y) = tr_{L/K}(x conj(y)).
KElt gram_h(const LElt& x, const LElt& y);

/// A^dagger = H A* H^{-1}.
MatK dagger(const MatK& a);

/// Monic t^3 + c2 t^2 + c1 t + c0.
struct CharPoly {
  KElt c2, c1, c0;
  bool operator==(const CharPoly&) const = default;
};
CharPoly char_poly(const MatK& a);
/// The cubic t^3 - 3 sqrt(-7) t^2 - 15 t - sqrt(-7).
CharPoly reference_char_poly_phi_b();

using ComplexMatrix3 = std::array<std::complex<double>, 9>;

/// Entrywise image under epsilon, or under its complex conjugate.
ComplexMatrix3 embed(const MatK& a, bool conjugate_embedding = false);

/// Eigenvalues (ascending) of a hermitian complex matrix.
std::array<double, 3> hermitian_eigenvalues(const ComplexMatrix3& a);

struct Signature {
  int positive = 0;
  int negative = 0;
  /// Smallest |eigenvalue| seen; the count is trusted only above the threshold.
  double margin = 0;
  bool operator==(const Signature& o) const { return positive == o.positive && negative == o.negative; }
};

/// Signature of the hermitian matrix a / i. Throws DomainError when an
/// eigenvalue lies within `zero_threshold` of 0.
Signature signature_antihermitian(const ComplexMatrix3& a, double zero_threshold = 1e-6);
Signature signature_antihermitian(const HermMat& a, bool conjugate_embedding = false,
                                  double zero_threshold = 1e-6);
/// Signature that P* phi(b) P = diag(-i, -i, i) prescribes for phi(b) / i.
Signature reference_signature_phi_b();

/// Whether det(a) / det(b) is a norm from K_l (l odd). Throws DomainError for
/// l = 2 and for non-hermitian input.
bool locally_equivalent(const HermMat& a, const HermMat& b, long ell);

/// (A at lambda, transpose of A at lambda_bar): the two factors of
/// M_3(K) (x) Q_2 = M_3(Q_2) x M_3(Q_2)^op.
std::pair<PadicMat, PadicMat> split_at_2(const MatK& a, int precision);

}  // namespace fpp
