#pragma once

// Fixed-precision 2-adic arithmetic and the two embeddings K -> Q_2.
//
// PadicInt is an element of Z_2 known modulo 2^precision. Results never claim
// more precision than their inputs justify, and questions the stored bits
// cannot answer (valuation of something that looks like zero, congruence
// beyond the known bits) raise PrecisionError.

#include <array>
#include <string>

#include "fpp/errors.hpp"
#include "fpp/linalg.hpp"
#include "fpp/matrix.hpp"
#include "fpp/numberfield.hpp"

namespace fpp {

inline constexpr int kDefaultPrecision = 64;

class PadicInt {
 public:
  PadicInt() = default;
  /// `value` reduced modulo 2^precision; precision >= 1.
  PadicInt(const Integer& value, int precision);

  int precision() const { return precision_; }
  /// Canonical residue in [0, 2^precision).
  const Integer& residue() const { return value_; }

  /// Known lower bound for the valuation (precision when the residue is 0).
  int valuation_floor() const;
  /// Exact valuation; throws PrecisionError when the residue is 0.
  int valuation() const;
  bool is_unit() const { return mpz_odd_p(value_.get_mpz_t()) != 0; }

  PadicInt operator+(const PadicInt& o) const;
  PadicInt operator-(const PadicInt& o) const;
  PadicInt operator-() const;
  PadicInt operator*(const PadicInt& o) const;

  /// Inverse of a unit, at the same precision.
  PadicInt unit_inverse() const;
  /// Exact division by 2^k; loses k bits of precision.
  PadicInt shift_down(int k) const;
  /// Multiplication by 2^k; gains k bits.
  PadicInt shift_up(int k) const;
  PadicInt with_precision(int precision) const;

  /// x == y modulo 2^bits; throws PrecisionError if bits exceeds either precision.
  bool congruent(const PadicInt& o, int bits) const;

  std::string str() const;

 private:
  Integer value_{0};
  int precision_ = 1;
};

/// Element 2^exponent * mantissa of Q_2.
struct Padic2 {
  int exponent = 0;
  PadicInt mantissa;

  /// Absolute precision: the value is known modulo 2^(exponent + mantissa precision).
  int absolute_precision() const { return exponent + mantissa.precision(); }
  int valuation() const { return exponent + mantissa.valuation(); }
  Padic2 operator*(const Padic2& o) const { return {exponent + o.exponent, mantissa * o.mantissa}; }
  Padic2 operator+(const Padic2& o) const;
  Padic2 operator-() const { return {exponent, -mantissa}; }
  Padic2 operator-(const Padic2& o) const { return *this + (-o); }
  /// Equality modulo 2^bits (absolute); throws PrecisionError when not decidable.
  bool congruent(const Padic2& o, int bits) const;
};

/// 3x3 matrix over Q_2 stored as 2^scale times a matrix over Z_2.
class PadicMat {
 public:
  PadicMat() = default;
  PadicMat(int scale, const std::array<PadicInt, 9>& entries) : scale_(scale), e_(entries) {}

  int scale() const { return scale_; }
  const PadicInt& operator()(int i, int j) const { return e_[3 * i + j]; }
  Padic2 entry(int i, int j) const { return {scale_, e_[3 * i + j]}; }

  PadicMat operator*(const PadicMat& o) const;
  PadicMat transpose() const;
  int min_precision() const;
  /// Entrywise equality modulo 2^bits in Q_2; throws PrecisionError if undecidable.
  bool congruent(const PadicMat& o, int bits) const;
  /// The homothety-invariant part: all entries at the shared scale.
  static PadicMat from_entries(const std::array<Padic2, 9>& entries);

 private:
  int scale_ = 0;
  std::array<PadicInt, 9> e_{};
};

/// Root r of t^2 + t + 2 with r = 2 (mod 4), to precision bits (>= 2).
/// It is the image of lambda at the place lambda; -1 - r is the image at lambda_bar.
PadicInt hensel_root_lambda(int precision);

/// Image of x in Q_2 at the place lambda or lambda_bar; mantissa precision `precision`.
Padic2 embed_K_2adic(const KElt& x, const Place& place, int precision);

/// Entrywise embedding of a K-matrix.
PadicMat embed_matrix(const MatK& m, const Place& place, int precision);

}  // namespace fpp
