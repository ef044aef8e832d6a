#pragma once

// The cyclic division algebra D = L + L*Pi + L*Pi^2 over K with
// Pi^3 = mu and Pi*z = sigma(z)*Pi, its involutions, and the matrix
// presentation Phi : D -> M_3(L).

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fpp/matrix.hpp"
#include "fpp/numberfield.hpp"

namespace fpp {

class DElt {
 public:
  DElt() = default;
  explicit DElt(const LElt& x0) : x_{x0, LElt(), LElt()} {}
  DElt(const LElt& x0, const LElt& x1, const LElt& x2) : x_{x0, x1, x2} {}

  static DElt one() { return DElt(LElt(1)); }
  static DElt pi() { return DElt(LElt(), LElt(1), LElt()); }
  static DElt scalar(const KElt& k) { return DElt(k.to_L()); }
  /// Element z * Pi^i.
  static DElt monomial(const LElt& z, int i);

  /// Coefficient of Pi^i.
  const LElt& operator[](int i) const { return x_[i]; }

  DElt operator+(const DElt& o) const;
  DElt operator-(const DElt& o) const;
  DElt operator-() const;
  DElt operator*(const DElt& o) const;
  DElt operator*(const Rational& q) const;
  bool operator==(const DElt& o) const { return x_ == o.x_; }

  bool is_zero() const;
  std::string str() const;

 private:
  std::array<LElt, 3> x_{};
};

/// x^{-1}; throws DomainError for x = 0.
DElt inverse(const DElt& x);
DElt power(const DElt& x, int n);

/// z -> diag(z, sigma^2 z, sigma z), Pi -> [[0,0,mu],[1,0,0],[0,1,0]].
MatL phi(const DElt& x);
/// Inverse of phi on its image; throws DomainError when m is not in phi(D).
DElt phi_inverse(const MatL& m);
/// Q = phi(Pi), a matrix over K.
MatK pi_matrix();

/// Reduced trace and norm, tr o phi and det o phi; both lie in K.
KElt reduced_trace(const DElt& x);
KElt reduced_norm(const DElt& x);

/// The involution with z* = conj(z), Pi* = mu_bar Pi^2.
DElt star(const DElt& x);

/// b = (lambda - lambda_bar) - lambda_bar Pi + lambda_bar Pi^2.
DElt build_b();
/// x -> b x* b^{-1}.
DElt bigstar(const DElt& x);

/// tr_{D/Q}(y b x*).
Rational psi(const DElt& x, const DElt& y);

/// The 18 elements zeta^k Pi^i (k < 6, i < 3), a Q-basis of D.
std::vector<DElt> q_basis();
/// Gram matrix of psi on q_basis().
RationalMatrix psi_gram();

/// Membership in O_D = O_L + O_L lambda_bar Pi + O_L lambda_bar Pi^2, or in its
/// completion at `localized_at` (lambda or lambda_bar) when given.
bool in_order(const DElt& x, std::optional<Place> localized_at = std::nullopt);

struct LocalInvariant {
  Place place;
  Rational value;  // normalized to (-1/2, 1/2]
  bool from_reciprocity = false;
};

/// Invariant of D at one finite place: v(mu)/3 where L/K is unramified.
/// Throws DomainError at the ramified place 7.
Rational local_invariant(const Place& place);
/// Invariants at lambda, lambda_bar, the odd primes 3, 5, 11, 13, and 7,
/// the last one assigned so that the sum vanishes.
std::vector<LocalInvariant> hasse_invariants();

/// Similitude factor c with x x^bigstar = c when x is in G(Q).
std::optional<Rational> in_group_G(const DElt& x);

/// Finite-dimensional identities linking D to its inner form.
struct InnerFormReport {
  bool galois_twist_fixes_phi = true;   // Q^{-1} sigma(phi(x)) Q = phi(x) on q_basis()
  bool phi_b_commutes_with_q = true;    // phi(b) Q = Q phi(b)
  bool conjugation_transport = true;    // (1,u)-conjugation carries i_u to i_1
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
/// `samples` random pairs for the conjugation transport with u in {H, phi(b)}.
InnerFormReport check_inner_form_data(int samples, unsigned long seed);

/// Involution i_u(x, y) = (u y u^{-1}, u^{-1} x u) on M_3(L) x M_3(L)^op.
std::pair<MatL, MatL> involution_twisted(const MatL& u, const MatL& x, const MatL& y);
/// Conjugation by (1, u), read in M_3(L): (x, y) -> (x, u y u^{-1}).
std::pair<MatL, MatL> conjugate_by_one_u(const MatL& u, const MatL& x, const MatL& y);

}  // namespace fpp
