#pragma once

// Exact arithmetic in L = Q(zeta_7) and its quadratic subfield
// K = Q(lambda), lambda = zeta + zeta^2 + zeta^4, lambda^2 + lambda + 2 = 0.

#include <array>
#include <complex>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "fpp/linalg.hpp"

namespace fpp {

class KElt;

/// Places of K used by the library. Rational(l) is an odd prime l != 7; when
/// l splits in K it denotes the place where lambda maps to the least root of
/// t^2 + t + 2 modulo l.
class Place {
 public:
  enum class Kind { Lambda, LambdaBar, Rational, Seven, InfiniteEpsilon, InfiniteTheta };

  static Place lambda() { return Place(Kind::Lambda, 2); }
  static Place lambda_bar() { return Place(Kind::LambdaBar, 2); }
  static Place seven() { return Place(Kind::Seven, 7); }
  static Place rational(long ell);
  static Place epsilon() { return Place(Kind::InfiniteEpsilon, 0); }
  static Place theta() { return Place(Kind::InfiniteTheta, 0); }

  Kind kind() const { return kind_; }
  /// Rational prime below the place (0 for infinite places).
  long prime() const { return prime_; }
  bool is_finite() const { return prime_ != 0; }
  /// True when the rational prime below splits in K.
  bool is_split() const;
  /// Norm of the place: l for split / ramified places, l^2 for inert ones.
  long norm() const;
  std::string name() const;

  auto operator<=>(const Place&) const = default;

 private:
  Place(Kind k, long p) : kind_(k), prime_(p) {}
  Kind kind_;
  long prime_;
};

/// Whether the odd prime l != 7 splits in K (-7 is a square mod l).
bool splits_in_K(long ell);

class LElt {
 public:
  static constexpr int kDegree = 6;

  LElt() = default;
  explicit LElt(long n) { c_[0] = n; }
  explicit LElt(const Rational& q) { c_[0] = q; }
  explicit LElt(const std::array<Rational, kDegree>& coeffs) : c_(coeffs) {}

  /// zeta^k for any integer k.
  static LElt zeta(int k = 1);

  const std::array<Rational, kDegree>& coeffs() const { return c_; }

  LElt operator+(const LElt& o) const;
  LElt operator-(const LElt& o) const;
  LElt operator-() const;
  LElt operator*(const LElt& o) const;
  LElt operator*(const Rational& q) const;
  LElt& operator+=(const LElt& o) { return *this = *this + o; }
  LElt& operator-=(const LElt& o) { return *this = *this - o; }
  LElt& operator*=(const LElt& o) { return *this = *this * o; }
  bool operator==(const LElt& o) const { return c_ == o.c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Membership in O_L = Z[zeta] (the power basis is integral).
  bool is_integral() const;
  Integer denominator() const;

  /// The automorphism zeta -> zeta^a, a prime to 7.
  LElt automorphism(int a) const;
  /// sigma^power with sigma: zeta -> zeta^2. sigma has order 3 and fixes K.
  LElt galois(int power) const;
  /// Complex conjugation, zeta -> zeta^6.
  LElt conj() const { return automorphism(6); }

  Rational norm() const;       // N_{L/Q}
  Rational trace() const;      // tr_{L/Q}
  KElt trace_to_K() const;     // x + sigma(x) + sigma^2(x)
  LElt inverse() const;

  std::optional<KElt> to_K() const;
  std::string str() const;

 private:
  std::array<Rational, kDegree> c_{};
};

inline LElt operator*(const Rational& q, const LElt& x) { return x * q; }

/// Element a + b*lambda of K.
class KElt {
 public:
  KElt() = default;
  explicit KElt(long n) : a_(n) {}
  explicit KElt(const Rational& a) : a_(a) {}
  KElt(const Rational& a, const Rational& b) : a_(a), b_(b) {}

  static KElt lambda() { return KElt(0, 1); }
  static KElt lambda_bar() { return KElt(-1, -1); }
  /// mu = lambda / lambda_bar.
  static KElt mu();
  static KElt mu_bar();
  /// sqrt(-7) = lambda - lambda_bar = 1 + 2*lambda.
  static KElt sqrt_minus7() { return KElt(1, 2); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  KElt operator+(const KElt& o) const { return KElt(a_ + o.a_, b_ + o.b_); }
  KElt operator-(const KElt& o) const { return KElt(a_ - o.a_, b_ - o.b_); }
  KElt operator-() const { return KElt(-a_, -b_); }
  KElt operator*(const KElt& o) const;
  KElt operator*(const Rational& q) const { return KElt(a_ * q, b_ * q); }
  KElt operator/(const KElt& o) const { return *this * o.inverse(); }
  KElt& operator+=(const KElt& o) { return *this = *this + o; }
  KElt& operator-=(const KElt& o) { return *this = *this - o; }
  KElt& operator*=(const KElt& o) { return *this = *this * o; }
  bool operator==(const KElt& o) const { return a_ == o.a_ && b_ == o.b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  bool is_integral() const { return a_.get_den() == 1 && b_.get_den() == 1; }
  Integer denominator() const;

  KElt conj() const { return KElt(a_ - b_, -b_); }
  Rational norm() const { return a_ * a_ - a_ * b_ + 2 * b_ * b_; }
  Rational trace() const { return 2 * a_ - b_; }
  KElt inverse() const;

  LElt to_L() const;
  std::string str() const;

 private:
  Rational a_{};
  Rational b_{};
};

inline KElt operator*(const Rational& q, const KElt& x) { return x * q; }

/// Integral element a + b*lambda of O_K on machine integers, for searches.
struct IntK {
  std::int64_t a = 0;
  std::int64_t b = 0;

  IntK operator+(IntK o) const { return {a + o.a, b + o.b}; }
  IntK operator-(IntK o) const { return {a - o.a, b - o.b}; }
  IntK operator-() const { return {-a, -b}; }
  IntK operator*(IntK o) const { return {a * o.a - 2 * b * o.b, a * o.b + b * o.a - b * o.b}; }
  IntK operator*(std::int64_t s) const { return {a * s, b * s}; }
  IntK conj() const { return {a - b, -b}; }
  std::int64_t norm() const { return a * a - a * b + 2 * b * b; }
  KElt to_K() const { return KElt(Rational(a), Rational(b)); }
  bool is_zero() const { return a == 0 && b == 0; }

  auto operator<=>(const IntK&) const = default;
};

/// Image under theta: zeta -> exp(2 pi i / 7), or under epsilon on K.
/// Throws DomainError for epsilon on an element outside K and for finite places.
std::complex<double> embed_complex(const LElt& x, const Place& place);
std::complex<double> embed_complex(const KElt& x, const Place& place);

/// Normalized additive valuation at a finite place of K; kInfinity for 0.
int valuation(const KElt& x, const Place& place);

}  // namespace fpp
