#pragma once

// Exact arithmetic primitives over Z and Q shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace fpp {

using Integer = mpz_class;
using Rational = mpq_class;

/// Sentinel returned by additive valuations of zero.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

int valuation(const Integer& n, unsigned long p);
int valuation(const Rational& q, unsigned long p);

bool is_prime(long n);

/// Least common multiple of the denominators.
Integer common_denominator(const std::vector<Rational>& values);

std::string to_string(const Rational& q);

/// Dense rational matrix, row-major vector of rows.
using RationalMatrix = std::vector<std::vector<Rational>>;

Rational determinant(RationalMatrix m);
std::size_t rank(RationalMatrix m);
RationalMatrix inverse(const RationalMatrix& m);

/// Exact LDL^T test for a symmetric matrix.
bool is_positive_definite(const RationalMatrix& m);

/// Largest integer s with s*s <= q (q >= 0).
Integer floor_sqrt(const Rational& q);

}  // namespace fpp
