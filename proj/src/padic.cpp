#include "fpp/padic.hpp"

#include <algorithm>

namespace fpp {

namespace {

Integer pow2(int k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return r;
}

int v2_nonzero(const Integer& x) { return static_cast<int>(mpz_scan1(x.get_mpz_t(), 0)); }

}  // namespace

// ---------------------------------------------------------------- PadicInt

PadicInt::PadicInt(const Integer& value, int precision) : precision_(precision) {
  if (precision < 1) throw DomainError("p-adic precision must be positive");
  mpz_fdiv_r_2exp(value_.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(precision));
}

int PadicInt::valuation_floor() const { return value_ == 0 ? precision_ : v2_nonzero(value_); }

int PadicInt::valuation() const {
  if (value_ == 0)
    throw PrecisionError("valuation undecidable: zero modulo 2^" + std::to_string(precision_));
  return v2_nonzero(value_);
}

PadicInt PadicInt::operator+(const PadicInt& o) const {
  return PadicInt(value_ + o.value_, std::min(precision_, o.precision_));
}

PadicInt PadicInt::operator-(const PadicInt& o) const {
  return PadicInt(value_ - o.value_, std::min(precision_, o.precision_));
}

PadicInt PadicInt::operator-() const { return PadicInt(-value_, precision_); }

PadicInt PadicInt::operator*(const PadicInt& o) const {
  const int p = std::min(precision_ + o.valuation_floor(), o.precision_ + valuation_floor());
  return PadicInt(value_ * o.value_, p);
}

PadicInt PadicInt::unit_inverse() const {
  if (!is_unit()) throw DomainError("unit_inverse of a non-unit");
  Integer inv;
  Integer m = pow2(precision_);
  mpz_invert(inv.get_mpz_t(), value_.get_mpz_t(), m.get_mpz_t());
  return PadicInt(inv, precision_);
}

PadicInt PadicInt::shift_down(int k) const {
  if (k == 0) return *this;
  if (k >= precision_) throw PrecisionError("shift_down consumes all known bits");
  if (valuation_floor() < k) throw DomainError("shift_down of an element not divisible by 2^k");
  Integer q;
  mpz_fdiv_q_2exp(q.get_mpz_t(), value_.get_mpz_t(), static_cast<unsigned long>(k));
  return PadicInt(q, precision_ - k);
}

PadicInt PadicInt::shift_up(int k) const {
  Integer q;
  mpz_mul_2exp(q.get_mpz_t(), value_.get_mpz_t(), static_cast<unsigned long>(k));
  return PadicInt(q, precision_ + k);
}

PadicInt PadicInt::with_precision(int precision) const {
  if (precision > precision_) throw PrecisionError("cannot raise precision of a known value");
  return PadicInt(value_, precision);
}

bool PadicInt::congruent(const PadicInt& o, int bits) const {
  if (bits > precision_ || bits > o.precision_)
    throw PrecisionError("congruence modulo 2^" + std::to_string(bits) + " exceeds known precision");
  Integer d = value_ - o.value_;
  return mpz_divisible_2exp_p(d.get_mpz_t(), static_cast<unsigned long>(bits)) != 0;
}

std::string PadicInt::str() const {
  return value_.get_str() + " + O(2^" + std::to_string(precision_) + ")";
}

// ---------------------------------------------------------------- Padic2

Padic2 Padic2::operator+(const Padic2& o) const {
  const int e = std::min(exponent, o.exponent);
  PadicInt x = mantissa.shift_up(exponent - e);
  PadicInt y = o.mantissa.shift_up(o.exponent - e);
  return {e, x + y};
}

bool Padic2::congruent(const Padic2& o, int bits) const {
  const int e = std::min(exponent, o.exponent);
  PadicInt x = mantissa.shift_up(exponent - e);
  PadicInt y = o.mantissa.shift_up(o.exponent - e);
  const int rel = bits - e;
  if (rel <= 0) return true;
  return x.congruent(y, rel);
}

// ---------------------------------------------------------------- PadicMat

PadicMat PadicMat::from_entries(const std::array<Padic2, 9>& entries) {
  int s = entries[0].exponent;
  for (const auto& x : entries) s = std::min(s, x.exponent);
  std::array<PadicInt, 9> e;
  for (int k = 0; k < 9; ++k) e[k] = entries[k].mantissa.shift_up(entries[k].exponent - s);
  return PadicMat(s, e);
}

PadicMat PadicMat::operator*(const PadicMat& o) const {
  std::array<PadicInt, 9> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      PadicInt s = (*this)(i, 0) * o(0, j);
      s = s + (*this)(i, 1) * o(1, j);
      s = s + (*this)(i, 2) * o(2, j);
      r[3 * i + j] = s;
    }
  return PadicMat(scale_ + o.scale_, r);
}

PadicMat PadicMat::transpose() const {
  std::array<PadicInt, 9> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[3 * i + j] = e_[3 * j + i];
  return PadicMat(scale_, r);
}

int PadicMat::min_precision() const {
  int p = e_[0].precision();
  for (const auto& x : e_) p = std::min(p, x.precision());
  return p;
}

bool PadicMat::congruent(const PadicMat& o, int bits) const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!entry(i, j).congruent(o.entry(i, j), bits)) return false;
  return true;
}

// ---------------------------------------------------------------- embeddings

PadicInt hensel_root_lambda(int precision) {
  if (precision < 2) throw DomainError("hensel_root_lambda needs precision >= 2");
  const Integer m = pow2(precision);
  Integer r = 2;
  // f(r) = r^2 + r + 2 has odd derivative 2r + 1, so Newton doubles the correct bits.
  for (int bits = 2; bits < 2 * precision; bits *= 2) {
    Integer f = r * r + r + 2;
    Integer fp = 2 * r + 1, inv;
    mpz_invert(inv.get_mpz_t(), fp.get_mpz_t(), m.get_mpz_t());
    r -= f * inv;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  }
  return PadicInt(r, precision);
}

Padic2 embed_K_2adic(const KElt& x, const Place& place, int precision) {
  if (place.kind() != Place::Kind::Lambda && place.kind() != Place::Kind::LambdaBar)
    throw DomainError("embed_K_2adic needs the place lambda or lambda_bar");
  if (precision < 2) throw DomainError("embed_K_2adic needs precision >= 2");
  PadicInt r = hensel_root_lambda(precision);
  if (place.kind() == Place::Kind::LambdaBar) r = PadicInt(-1, precision) - r;
  const Integer d = x.denominator();
  const int e = valuation(d, 2);
  Integer odd = d;
  mpz_fdiv_q_2exp(odd.get_mpz_t(), odd.get_mpz_t(), static_cast<unsigned long>(e));
  PadicInt a(Integer(x.a() * d), precision), b(Integer(x.b() * d), precision);
  PadicInt num = a + b * r;
  PadicInt m = num * PadicInt(odd, precision).unit_inverse();
  return {-e, m.with_precision(std::min(m.precision(), precision))};
}

PadicMat embed_matrix(const MatK& m, const Place& place, int precision) {
  std::array<Padic2, 9> e;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) e[3 * i + j] = embed_K_2adic(m(i, j), place, precision);
  return PadicMat::from_entries(e);
}

}  // namespace fpp
