#include "fpp/algebra.hpp"

#include "fpp/errors.hpp"
#include "fpp/hermitian.hpp"
#include "fpp/sampling.hpp"

namespace fpp {

namespace {

LElt mu_L() { return KElt::mu().to_L(); }

// Number of factors lambda (or lambda_bar) dividing z in O_L, capped at `cap`.
// The primes over 2 of K stay prime in L.
int divisibility_over_2(LElt z, bool by_bar, int cap) {
  const LElt other = (by_bar ? KElt::lambda() : KElt::lambda_bar()).to_L();
  int v = 0;
  while (v < cap && !z.is_zero()) {
    LElt q = z * other * Rational(1, 2);
    if (!q.is_integral()) break;
    z = q;
    ++v;
  }
  return z.is_zero() ? cap : v;
}

bool integral_at(const LElt& y, const Place& place) {
  if (place.kind() != Place::Kind::Lambda && place.kind() != Place::Kind::LambdaBar)
    throw DomainError("order membership is localized only at lambda or lambda_bar");
  const Integer d = y.denominator();
  const int e = valuation(d, 2);
  if (e == 0) return true;
  const LElt z = y * Rational(d);
  return divisibility_over_2(z, place.kind() == Place::Kind::LambdaBar, e) >= e;
}

MatL galois_entrywise(const MatL& m, int power) {
  return m.map<LElt>([power](const LElt& x) { return x.galois(power); });
}

Rational normalize_mod_one(Rational q) {
  q.canonicalize();
  // Representative in (-1/2, 1/2].
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  q -= f;
  if (q > Rational(1, 2)) q -= 1;
  return q;
}

}  // namespace

// ---------------------------------------------------------------- DElt

DElt DElt::monomial(const LElt& z, int i) {
  DElt r;
  r.x_[((i % 3) + 3) % 3] = z;
  return r;
}

DElt DElt::operator+(const DElt& o) const {
  return DElt(x_[0] + o.x_[0], x_[1] + o.x_[1], x_[2] + o.x_[2]);
}

DElt DElt::operator-(const DElt& o) const {
  return DElt(x_[0] - o.x_[0], x_[1] - o.x_[1], x_[2] - o.x_[2]);
}

DElt DElt::operator-() const { return DElt(-x_[0], -x_[1], -x_[2]); }

DElt DElt::operator*(const DElt& o) const {
  // (a Pi^i)(c Pi^j) = a sigma^i(c) Pi^{i+j}, and Pi^3 = mu is central.
  static const LElt mu = mu_L();
  DElt r;
  for (int i = 0; i < 3; ++i) {
    if (x_[i].is_zero()) continue;
    for (int j = 0; j < 3; ++j) {
      if (o.x_[j].is_zero()) continue;
      LElt t = x_[i] * o.x_[j].galois(i);
      if (i + j >= 3) t *= mu;
      r.x_[(i + j) % 3] += t;
    }
  }
  return r;
}

DElt DElt::operator*(const Rational& q) const { return DElt(x_[0] * q, x_[1] * q, x_[2] * q); }

bool DElt::is_zero() const { return x_[0].is_zero() && x_[1].is_zero() && x_[2].is_zero(); }

std::string DElt::str() const {
  return x_[0].str() + " + " + x_[1].str() + "*Pi + " + x_[2].str() + "*Pi^2";
}

DElt inverse(const DElt& x) {
  if (x.is_zero()) throw DomainError("inverse of zero in D");
  return phi_inverse(inverse(phi(x)));
}

DElt power(const DElt& x, int n) {
  if (n < 0) return power(inverse(x), -n);
  DElt r = DElt::one();
  for (int i = 0; i < n; ++i) r = r * x;
  return r;
}

// ---------------------------------------------------------------- Phi

MatK pi_matrix() {
  MatK q;
  q(0, 2) = KElt::mu();
  q(1, 0) = KElt(1);
  q(2, 1) = KElt(1);
  return q;
}

MatL phi(const DElt& x) {
  static const MatL q = to_L(pi_matrix());
  static const MatL q2 = q * q;
  auto diag = [](const LElt& z) { return MatL::diagonal(z, z.galois(2), z.galois(1)); };
  return diag(x[0]) + diag(x[1]) * q + diag(x[2]) * q2;
}

DElt phi_inverse(const MatL& m) {
  // First column of phi(y) is (y0, sigma^2 y1, sigma y2).
  DElt y(m(0, 0), m(1, 0).galois(1), m(2, 0).galois(2));
  if (!(phi(y) == m)) throw DomainError("matrix is not in the image of phi");
  return y;
}

KElt reduced_trace(const DElt& x) { return x[0].trace_to_K(); }

KElt reduced_norm(const DElt& x) {
  auto k = phi(x).det().to_K();
  if (!k) throw std::logic_error("reduced norm left K");
  return *k;
}

// ---------------------------------------------------------------- involutions

DElt star(const DElt& x) {
  static const DElt pi_star = DElt::monomial(KElt::mu_bar().to_L(), 2);
  static const DElt pi_star2 = pi_star * pi_star;
  return DElt(x[0].conj()) + pi_star * DElt(x[1].conj()) + pi_star2 * DElt(x[2].conj());
}

DElt build_b() {
  const LElt lam = KElt::lambda().to_L();
  const LElt lam_bar = KElt::lambda_bar().to_L();
  return DElt(lam - lam_bar, -lam_bar, lam_bar);
}

DElt bigstar(const DElt& x) {
  static const DElt b = build_b();
  static const DElt b_inv = inverse(b);
  return b * star(x) * b_inv;
}

Rational psi(const DElt& x, const DElt& y) {
  static const DElt b = build_b();
  return (y * b * star(x))[0].trace();
}

std::vector<DElt> q_basis() {
  std::vector<DElt> out;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < LElt::kDegree; ++k) out.push_back(DElt::monomial(LElt::zeta(k), i));
  return out;
}

RationalMatrix psi_gram() {
  const auto basis = q_basis();
  RationalMatrix g(basis.size(), std::vector<Rational>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g[i][j] = psi(basis[i], basis[j]);
  return g;
}

// ---------------------------------------------------------------- orders, invariants

bool in_order(const DElt& x, std::optional<Place> localized_at) {
  const LElt over_bar = KElt::lambda().to_L() * Rational(1, 2);  // 1 / lambda_bar
  const LElt y1 = x[1] * over_bar, y2 = x[2] * over_bar;
  if (!localized_at) return x[0].is_integral() && y1.is_integral() && y2.is_integral();
  return integral_at(x[0], *localized_at) && integral_at(y1, *localized_at) &&
         integral_at(y2, *localized_at);
}

Rational local_invariant(const Place& place) {
  if (place.kind() == Place::Kind::Seven)
    throw DomainError("the invariant at the ramified place 7 is fixed by reciprocity");
  if (!place.is_finite()) throw DomainError("local invariant at an infinite place");
  // sigma is the Frobenius at every place of K unramified in L.
  return normalize_mod_one(Rational(valuation(KElt::mu(), place), 3));
}

std::vector<LocalInvariant> hasse_invariants() {
  std::vector<LocalInvariant> out;
  Rational sum = 0;
  std::vector<Place> places{Place::lambda(), Place::lambda_bar()};
  for (long ell : {3L, 5L, 11L, 13L}) places.push_back(Place::rational(ell));
  for (const auto& p : places) {
    Rational v = local_invariant(p);
    sum += v;
    out.push_back({p, v, false});
  }
  out.push_back({Place::seven(), normalize_mod_one(-sum), true});
  return out;
}

std::optional<Rational> in_group_G(const DElt& x) {
  if (x.is_zero()) return std::nullopt;
  DElt y = x * bigstar(x);
  if (!y[1].is_zero() || !y[2].is_zero() || !y[0].is_rational()) return std::nullopt;
  return y[0].coeffs()[0];
}

// ---------------------------------------------------------------- inner form

std::pair<MatL, MatL> involution_twisted(const MatL& u, const MatL& x, const MatL& y) {
  const MatL u_inv = inverse(u);
  return {u * y * u_inv, u_inv * x * u};
}

std::pair<MatL, MatL> conjugate_by_one_u(const MatL& u, const MatL& x, const MatL& y) {
  return {x, u * y * inverse(u)};
}

InnerFormReport check_inner_form_data(int samples, unsigned long seed) {
  InnerFormReport rep;
  const MatL q = to_L(pi_matrix());
  const MatL q_inv = inverse(q);
  for (const auto& x : q_basis()) {
    const MatL m = phi(x);
    if (!(q_inv * galois_entrywise(m, 1) * q == m)) {
      rep.galois_twist_fixes_phi = false;
      rep.failures.push_back("Q^-1 sigma(phi(x)) Q != phi(x) for x = " + x.str());
    }
  }
  const MatL pb = phi(build_b());
  if (!(pb * q == q * pb)) {
    rep.phi_b_commutes_with_q = false;
    rep.failures.push_back("phi(b) Q != Q phi(b)");
  }
  Sampler rng(seed);
  for (const MatL& u : {to_L(build_H().matrix()), pb}) {
    for (int s = 0; s < samples; ++s) {
      const MatL x = rng.mat_l(), y = rng.mat_l();
      auto lhs = involution_twisted(u, x, y);
      lhs = conjugate_by_one_u(u, lhs.first, lhs.second);
      const auto f = conjugate_by_one_u(u, x, y);
      // i_1 swaps the factors.
      if (!(lhs.first == f.second && lhs.second == f.first)) {
        rep.conjugation_transport = false;
        rep.failures.push_back("conjugation by (1,u) does not carry i_u to i_1");
        break;
      }
    }
  }
  return rep;
}

}  // namespace fpp
