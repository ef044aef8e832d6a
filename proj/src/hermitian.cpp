#include "fpp/hermitian.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "fpp/algebra.hpp"
#include "fpp/errors.hpp"

namespace fpp {

HermMat::HermMat(const MatK& m, Kind kind) : m_(m), kind_(kind) {
  const MatK c = conj_transpose(m);
  const bool ok = kind == Kind::Hermitian ? c == m : c == -m;
  if (!ok)
    throw DomainError(std::string("matrix is not ") +
                      (kind == Kind::Hermitian ? "hermitian" : "anti-hermitian"));
}

HermMat build_H() {
  const KElt l = KElt::lambda(), lb = KElt::lambda_bar(), three(3);
  return HermMat(MatK({three, lb, lb, l, three, lb, l, l, three}), HermMat::Kind::Hermitian);
}

MatK build_W() {
  const KElt l = KElt::lambda(), one(1), zero;
  return MatK({l, one, zero, zero, l, one, KElt::mu(), zero, l});
}

HermMat phi_b_matrix() { return HermMat(to_K(phi(build_b())), HermMat::Kind::AntiHermitian); }

HermMat build_H_prime() {
  return HermMat(phi_b_matrix().matrix().scaled(KElt::sqrt_minus7()), HermMat::Kind::Hermitian);
}

KElt gram_h(const LElt& x, const LElt& y) { return (x * y.conj()).trace_to_K(); }

MatK dagger(const MatK& a) {
  static const MatK h = build_H().matrix();
  static const MatK h_inv = inverse(h);
  return h * conj_transpose(a) * h_inv;
}

CharPoly char_poly(const MatK& a) { return {-a.trace(), a.minor_sum(), -a.det()}; }

CharPoly reference_char_poly_phi_b() {
  const KElt s = KElt::sqrt_minus7();
  return {s * Rational(-3), KElt(-15), -s};
}

ComplexMatrix3 embed(const MatK& a, bool conjugate_embedding) {
  ComplexMatrix3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      auto z = embed_complex(a(i, j), Place::epsilon());
      out[3 * i + j] = conjugate_embedding ? std::conj(z) : z;
    }
  return out;
}

std::array<double, 3> hermitian_eigenvalues(const ComplexMatrix3& a) {
  Eigen::Matrix3cd m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = a[3 * i + j];
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw DomainError("eigenvalue computation did not converge");
  const auto& ev = solver.eigenvalues();
  return {ev(0), ev(1), ev(2)};
}

Signature signature_antihermitian(const ComplexMatrix3& a, double zero_threshold) {
  ComplexMatrix3 over_i;
  const std::complex<double> i(0, 1);
  for (int k = 0; k < 9; ++k) over_i[k] = a[k] / i;
  Signature s;
  s.margin = INFINITY;
  for (double ev : hermitian_eigenvalues(over_i)) {
    if (std::abs(ev) <= zero_threshold)
      throw DomainError("eigenvalue within " + std::to_string(zero_threshold) + " of zero");
    (ev > 0 ? s.positive : s.negative)++;
    s.margin = std::min(s.margin, std::abs(ev));
  }
  return s;
}

Signature signature_antihermitian(const HermMat& a, bool conjugate_embedding, double zero_threshold) {
  if (a.kind() != HermMat::Kind::AntiHermitian) throw DomainError("signature_antihermitian needs an anti-hermitian matrix");
  return signature_antihermitian(embed(a.matrix(), conjugate_embedding), zero_threshold);
}

Signature reference_signature_phi_b() {
  // diag(-i, -i, i) / i = diag(-1, -1, 1).
  return {1, 2, 1.0};
}

bool locally_equivalent(const HermMat& a, const HermMat& b, long ell) {
  if (ell == 2) throw DomainError("local equivalence at 2 is not decided by the determinant");
  if (ell < 3 || !is_prime(ell)) throw DomainError("locally_equivalent needs an odd prime");
  if (a.kind() != HermMat::Kind::Hermitian || b.kind() != HermMat::Kind::Hermitian)
    throw DomainError("locally_equivalent needs hermitian forms");
  const KElt da = a.det(), db = b.det();
  if (!da.is_rational() || !db.is_rational() || da.is_zero() || db.is_zero())
    throw DomainError("degenerate hermitian form");
  const Rational ratio = da.a() / db.a();
  const auto p = static_cast<unsigned long>(ell);
  const int v = valuation(ratio, p);
  if (ell != 7) {
    // Split: every element of Q_l is a norm. Inert: norms have even valuation.
    return splits_in_K(ell) || v % 2 == 0;
  }
  // K_7 = Q_7(sqrt(-7)): 7 is a norm, and a unit is a norm iff it is a square mod 7.
  Rational u = ratio;
  Integer seven_v;
  mpz_ui_pow_ui(seven_v.get_mpz_t(), 7, static_cast<unsigned long>(std::abs(v)));
  u = v >= 0 ? Rational(u / Rational(seven_v)) : Rational(u * Rational(seven_v));
  Integer num = u.get_num(), den = u.get_den(), den_inv;
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), Integer(7).get_mpz_t());
  Integer r = num * den_inv;
  mpz_fdiv_r_ui(r.get_mpz_t(), r.get_mpz_t(), 7);
  const long res = r.get_si();
  return res == 1 || res == 2 || res == 4;
}

std::pair<PadicMat, PadicMat> split_at_2(const MatK& a, int precision) {
  return {embed_matrix(a, Place::lambda(), precision),
          embed_matrix(a, Place::lambda_bar(), precision).transpose()};
}

}  // namespace fpp
