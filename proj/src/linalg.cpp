#include "fpp/linalg.hpp"

#include <cmath>
#include <utility>

#include "fpp/errors.hpp"

namespace fpp {

int valuation(const Integer& n, unsigned long p) {
  if (n == 0) return kInfinity;
  Integer m = abs(n);
  int v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++v;
  }
  return v;
}

int valuation(const Rational& q, unsigned long p) {
  if (q == 0) return kInfinity;
  return valuation(Integer(q.get_num()), p) - valuation(Integer(q.get_den()), p);
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Integer common_denominator(const std::vector<Rational>& values) {
  Integer d = 1;
  for (const auto& v : values) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den_mpz_t());
  return d;
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

// Row echelon form in place; returns (rank, sign-adjusted product of pivots).
std::pair<std::size_t, Rational> eliminate(RationalMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  Rational det = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) {
      det = 0;
      continue;
    }
    if (piv != r) {
      std::swap(m[piv], m[r]);
      det = -det;
    }
    det *= m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  if (r < rows) det = 0;
  return {r, det};
}

}  // namespace

Rational determinant(RationalMatrix m) {
  if (m.empty()) return 1;
  if (m.size() != m[0].size()) throw DomainError("determinant of a non-square matrix");
  return eliminate(m).second;
}

std::size_t rank(RationalMatrix m) { return eliminate(m).first; }

RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DomainError("inverse of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw DomainError("matrix is singular");
    std::swap(a[piv], a[c]);
    Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  RationalMatrix out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

bool is_positive_definite(const RationalMatrix& m) {
  RationalMatrix a = m;
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return true;
}

Integer floor_sqrt(const Rational& q) {
  if (q < 0) throw DomainError("floor_sqrt of a negative number");
  // floor(sqrt(num/den)) = floor(sqrt(floor(num*den)) / den) refined exactly.
  Integer num = q.get_num(), den = q.get_den();
  Integer s = sqrt(Integer(num * den)) / den;
  while (Rational((s + 1) * (s + 1)) <= q) ++s;
  while (s > 0 && Rational(s * s) > q) --s;
  return s;
}

}  // namespace fpp
