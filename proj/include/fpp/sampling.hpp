#pragma once

// Seeded generators for property checks. The draws use only the raw
// mt19937_64 stream so samples are identical across standard libraries.

#include <cstdint>
#include <random>

#include "fpp/algebra.hpp"
#include "fpp/matrix.hpp"
#include "fpp/numberfield.hpp"

namespace fpp {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform integer in [-bound, bound].
  long integer(long bound) { return static_cast<long>(rng_() % static_cast<std::uint64_t>(2 * bound + 1)) - bound; }
  /// Uniform index in [0, n).
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

  LElt l_elt(long bound = 3) {
    std::array<Rational, LElt::kDegree> c;
    for (auto& x : c) x = integer(bound);
    return LElt(c);
  }
  KElt k_elt(long bound = 5) { return KElt(Rational(integer(bound)), Rational(integer(bound))); }
  /// Element with nonzero denominators drawn from 1..bound.
  KElt k_fraction(long bound = 5) {
    const long d1 = 1 + static_cast<long>(index(static_cast<std::size_t>(bound)));
    const long d2 = 1 + static_cast<long>(index(static_cast<std::size_t>(bound)));
    Rational a(integer(bound), d1), b(integer(bound), d2);
    a.canonicalize();
    b.canonicalize();
    return KElt(a, b);
  }
  IntK int_k(long bound = 5) { return {integer(bound), integer(bound)}; }
  DElt d_elt(long bound = 3) { return DElt(l_elt(bound), l_elt(bound), l_elt(bound)); }
  MatK mat_k(long bound = 5) {
    std::array<KElt, 9> e;
    for (auto& x : e) x = k_elt(bound);
    return MatK(e);
  }
  MatL mat_l(long bound = 2) {
    std::array<LElt, 9> e;
    for (auto& x : e) x = l_elt(bound);
    return MatL(e);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace fpp
