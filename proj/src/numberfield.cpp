#include "fpp/numberfield.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "fpp/errors.hpp"

namespace fpp {

namespace {

int mod7(long k) {
  long r = k % 7;
  return static_cast<int>(r < 0 ? r + 7 : r);
}

// Coefficients on zeta^0..zeta^6 reduced by zeta^6 = -(1 + ... + zeta^5).
std::array<Rational, 6> reduce_cyclic(const std::array<Rational, 7>& t) {
  std::array<Rational, 6> out;
  for (int k = 0; k < 6; ++k) out[k] = t[k] - t[6];
  return out;
}

// Root of t^2 + t + 2 modulo ell^k lifting the root r0 modulo ell (ell odd, split).
Integer lift_root(long ell, long r0, int k) {
  Integer m;
  mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(ell), static_cast<unsigned long>(k));
  Integer r = r0;
  for (int i = 0; i < k + 1; ++i) {
    Integer f = r * r + r + 2;
    Integer fp = 2 * r + 1;
    Integer inv;
    if (!mpz_invert(inv.get_mpz_t(), fp.get_mpz_t(), m.get_mpz_t()))
      throw DomainError("Hensel lift failed: derivative not a unit");
    r = r - f * inv;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  }
  return r;
}

// Least root of t^2 + t + 2 mod ell.
long least_root_mod(long ell) {
  for (long r = 0; r < ell; ++r)
    if ((r * r + r + 2) % ell == 0) return r;
  throw DomainError("t^2 + t + 2 has no root modulo " + std::to_string(ell));
}

// Exact division of the O_K element (a + b lambda) by lambda (or lambda_bar);
// returns false when the quotient is not integral.
bool divide_by(Integer& a, Integer& b, bool by_bar) {
  // x / lambda = x * lambda_bar / 2 and x / lambda_bar = x * lambda / 2.
  KElt x{Rational(a), Rational(b)};
  KElt q = (by_bar ? x * KElt::lambda() : x * KElt::lambda_bar()) * Rational(1, 2);
  if (!q.is_integral()) return false;
  a = q.a().get_num();
  b = q.b().get_num();
  return true;
}

}  // namespace

// ---------------------------------------------------------------- Place

bool splits_in_K(long ell) {
  if (ell == 2) return true;
  if (ell == 7) return false;
  int r = mod7(ell);
  return r == 1 || r == 2 || r == 4;
}

Place Place::rational(long ell) {
  if (ell == 2 || ell == 7 || !is_prime(ell))
    throw DomainError("Place::rational needs an odd prime other than 7, got " + std::to_string(ell));
  return Place(Kind::Rational, ell);
}

bool Place::is_split() const {
  switch (kind_) {
    case Kind::Lambda:
    case Kind::LambdaBar:
      return true;
    case Kind::Rational:
      return splits_in_K(prime_);
    default:
      return false;
  }
}

long Place::norm() const {
  if (!is_finite()) throw DomainError("norm of an infinite place");
  if (kind_ == Kind::Rational && !is_split()) return prime_ * prime_;
  return prime_;
}

std::string Place::name() const {
  switch (kind_) {
    case Kind::Lambda: return "lambda";
    case Kind::LambdaBar: return "lambda_bar";
    case Kind::Seven: return "7";
    case Kind::Rational: return std::to_string(prime_);
    case Kind::InfiniteEpsilon: return "epsilon";
    case Kind::InfiniteTheta: return "theta";
  }
  return "?";
}

// ---------------------------------------------------------------- LElt

LElt LElt::zeta(int k) {
  std::array<Rational, 7> t{};
  t[mod7(k)] = 1;
  return LElt(reduce_cyclic(t));
}

LElt LElt::operator+(const LElt& o) const {
  LElt r = *this;
  for (int i = 0; i < kDegree; ++i) r.c_[i] += o.c_[i];
  return r;
}

LElt LElt::operator-(const LElt& o) const {
  LElt r = *this;
  for (int i = 0; i < kDegree; ++i) r.c_[i] -= o.c_[i];
  return r;
}

LElt LElt::operator-() const {
  LElt r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

LElt LElt::operator*(const LElt& o) const {
  std::array<Rational, 7> t{};
  for (int i = 0; i < kDegree; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < kDegree; ++j) {
      if (o.c_[j] == 0) continue;
      t[(i + j) % 7] += c_[i] * o.c_[j];
    }
  }
  return LElt(reduce_cyclic(t));
}

LElt LElt::operator*(const Rational& q) const {
  LElt r = *this;
  for (auto& c : r.c_) c *= q;
  return r;
}

bool LElt::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool LElt::is_rational() const {
  for (int i = 1; i < kDegree; ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool LElt::is_integral() const {
  for (const auto& c : c_)
    if (c.get_den() != 1) return false;
  return true;
}

Integer LElt::denominator() const { return common_denominator({c_.begin(), c_.end()}); }

LElt LElt::automorphism(int a) const {
  if (mod7(a) == 0) throw DomainError("automorphism exponent must be prime to 7");
  std::array<Rational, 7> t{};
  for (int i = 0; i < kDegree; ++i) t[mod7(static_cast<long>(a) * i)] += c_[i];
  return LElt(reduce_cyclic(t));
}

LElt LElt::galois(int power) const {
  static constexpr int kPowersOfTwo[3] = {1, 2, 4};
  int p = power % 3;
  if (p < 0) p += 3;
  return automorphism(kPowersOfTwo[p]);
}

Rational LElt::norm() const {
  LElt prod(1);
  for (int a = 1; a < 7; ++a) prod *= automorphism(a);
  return prod.c_[0];
}

Rational LElt::trace() const {
  // tr(1) = 6, tr(zeta^i) = -1 for i = 1..5.
  Rational t = 6 * c_[0];
  for (int i = 1; i < kDegree; ++i) t -= c_[i];
  return t;
}

KElt LElt::trace_to_K() const {
  LElt t = *this + galois(1) + galois(2);
  auto k = t.to_K();
  if (!k) throw std::logic_error("relative trace left K");
  return *k;
}

LElt LElt::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in L");
  LElt others(1);
  for (int a = 2; a < 7; ++a) others *= automorphism(a);
  Rational n = (*this * others).c_[0];
  return others * (1 / n);
}

std::optional<KElt> LElt::to_K() const {
  // K-elements have the shape a + b(zeta + zeta^2 + zeta^4).
  KElt k(c_[0], c_[1]);
  if (k.to_L() == *this) return k;
  return std::nullopt;
}

std::string LElt::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < kDegree; ++i) os << (i ? "," : "") << c_[i].get_str();
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------- KElt

KElt KElt::mu() { return lambda() / lambda_bar(); }
KElt KElt::mu_bar() { return lambda_bar() / lambda(); }

KElt KElt::operator*(const KElt& o) const {
  // lambda^2 = -lambda - 2
  Rational bd = b_ * o.b_;
  return KElt(a_ * o.a_ - 2 * bd, a_ * o.b_ + b_ * o.a_ - bd);
}

KElt KElt::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in K");
  Rational n = norm();
  KElt c = conj();
  return KElt(c.a_ / n, c.b_ / n);
}

Integer KElt::denominator() const { return common_denominator({a_, b_}); }

LElt KElt::to_L() const {
  return LElt(std::array<Rational, 6>{a_, b_, b_, 0, b_, 0});
}

std::string KElt::str() const {
  std::ostringstream os;
  os << a_.get_str();
  if (b_ != 0) os << (b_ > 0 ? "+" : "-") << Rational(abs(b_)).get_str() << "*l";
  return os.str();
}

// ---------------------------------------------------------------- embeddings

std::complex<double> embed_complex(const LElt& x, const Place& place) {
  if (place.kind() == Place::Kind::InfiniteEpsilon) {
    auto k = x.to_K();
    if (!k) throw DomainError("epsilon is only defined on K");
    return embed_complex(*k, place);
  }
  if (place.kind() != Place::Kind::InfiniteTheta)
    throw DomainError("embed_complex needs an infinite place");
  std::complex<double> z = 0;
  for (int i = 0; i < LElt::kDegree; ++i)
    z += x.coeffs()[i].get_d() * std::polar(1.0, 2.0 * std::numbers::pi * i / 7.0);
  return z;
}

std::complex<double> embed_complex(const KElt& x, const Place& place) {
  if (place.kind() != Place::Kind::InfiniteEpsilon && place.kind() != Place::Kind::InfiniteTheta)
    throw DomainError("embed_complex needs an infinite place");
  const std::complex<double> lam(-0.5, std::sqrt(7.0) / 2.0);
  return x.a().get_d() + x.b().get_d() * lam;
}

// ---------------------------------------------------------------- valuations

int valuation(const KElt& x, const Place& place) {
  if (!place.is_finite()) throw DomainError("valuation at an infinite place");
  if (x.is_zero()) return kInfinity;
  switch (place.kind()) {
    case Place::Kind::Seven:
      return valuation(x.norm(), 7);
    case Place::Kind::Rational:
      if (!place.is_split()) return valuation(x.norm(), static_cast<unsigned long>(place.prime())) / 2;
      break;
    default:
      break;
  }
  const Integer d = x.denominator();
  Integer a = Integer(x.a() * d), b = Integer(x.b() * d);
  if (place.kind() == Place::Kind::Lambda || place.kind() == Place::Kind::LambdaBar) {
    const bool bar = place.kind() == Place::Kind::LambdaBar;
    int v = -valuation(d, 2);
    while (divide_by(a, b, bar)) ++v;
    return v;
  }
  // Odd split prime: embed into Q_l with enough precision to see the valuation.
  const long ell = place.prime();
  KElt y{Rational(a), Rational(b)};
  const int bound = valuation(y.norm(), static_cast<unsigned long>(ell)) + 1;
  Integer r = lift_root(ell, least_root_mod(ell), bound);
  Integer m;
  mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(ell), static_cast<unsigned long>(bound));
  Integer img = a + b * r;
  mpz_mod(img.get_mpz_t(), img.get_mpz_t(), m.get_mpz_t());
  return valuation(img, static_cast<unsigned long>(ell)) - valuation(d, static_cast<unsigned long>(ell));
}

}  // namespace fpp
