#pragma once

#include <array>
#include <functional>
#include <string>

#include "fpp/errors.hpp"
#include "fpp/numberfield.hpp"

namespace fpp {

/// 3x3 matrix over a commutative ring T (LElt, KElt, IntK, ...).
/// T{} must be zero and T(1) one.
template <class T>
class Mat3 {
 public:
  Mat3() = default;
  explicit Mat3(const std::array<T, 9>& entries) : e_(entries) {}

  static Mat3 identity() { return scalar(T(1)); }
  static Mat3 scalar(const T& s) {
    Mat3 m;
    for (int i = 0; i < 3; ++i) m(i, i) = s;
    return m;
  }
  static Mat3 diagonal(const T& a, const T& b, const T& c) {
    Mat3 m;
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    return m;
  }

  T& operator()(int i, int j) { return e_[3 * i + j]; }
  const T& operator()(int i, int j) const { return e_[3 * i + j]; }
  const std::array<T, 9>& entries() const { return e_; }

  Mat3 operator+(const Mat3& o) const {
    Mat3 r;
    for (int k = 0; k < 9; ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
  }
  Mat3 operator-(const Mat3& o) const {
    Mat3 r;
    for (int k = 0; k < 9; ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
  }
  Mat3 operator-() const {
    Mat3 r;
    for (int k = 0; k < 9; ++k) r.e_[k] = -e_[k];
    return r;
  }
  Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        T s = (*this)(i, 0) * o(0, j);
        s = s + (*this)(i, 1) * o(1, j);
        s = s + (*this)(i, 2) * o(2, j);
        r(i, j) = s;
      }
    return r;
  }
  Mat3 scaled(const T& s) const {
    Mat3 r;
    for (int k = 0; k < 9; ++k) r.e_[k] = s * e_[k];
    return r;
  }
  bool operator==(const Mat3& o) const { return e_ == o.e_; }

  Mat3 transpose() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
    return r;
  }
  T trace() const { return e_[0] + e_[4] + e_[8]; }
  T det() const {
    const auto& m = *this;
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  }
  /// Sum of the principal 2x2 minors.
  T minor_sum() const {
    const auto& m = *this;
    return (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) + (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) +
           (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1));
  }
  Mat3 adjugate() const {
    const auto& m = *this;
    Mat3 a;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
        a(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
      }
    return a;
  }

  template <class U, class F>
  Mat3<U> map(F&& f) const {
    std::array<U, 9> out;
    for (int k = 0; k < 9; ++k) out[k] = f(e_[k]);
    return Mat3<U>(out);
  }

  bool is_scalar() const {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j && !((*this)(i, j) == T{})) return false;
    return e_[0] == e_[4] && e_[0] == e_[8];
  }

 private:
  std::array<T, 9> e_{};
};

using MatL = Mat3<LElt>;
using MatK = Mat3<KElt>;
using MatOK = Mat3<IntK>;

/// Entrywise conjugate transpose (a_ij)* = (conj a_ji).
template <class T>
Mat3<T> conj_transpose(const Mat3<T>& m) {
  Mat3<T> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = m(j, i).conj();
  return r;
}

/// Inverse over a field; throws DomainError when singular.
template <class T>
Mat3<T> inverse(const Mat3<T>& m) {
  T d = m.det();
  if (d.is_zero()) throw DomainError("singular 3x3 matrix");
  return m.adjugate().scaled(d.inverse());
}

inline MatK to_K(const MatOK& m) {
  return m.map<KElt>([](const IntK& x) { return x.to_K(); });
}

inline MatL to_L(const MatK& m) {
  return m.map<LElt>([](const KElt& x) { return x.to_L(); });
}

/// Entrywise descent to K; throws DomainError when an entry lies outside K.
inline MatK to_K(const MatL& m) {
  return m.map<KElt>([](const LElt& x) {
    auto k = x.to_K();
    if (!k) throw DomainError("matrix entry not in K");
    return *k;
  });
}

template <class T>
std::string to_string(const Mat3<T>& m) {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) {
    s += i ? "; " : "";
    for (int j = 0; j < 3; ++j) s += (j ? ", " : "") + m(i, j).str();
  }
  return s + "]";
}

}  // namespace fpp
