#pragma once

// Brute-force reference implementations used only by the tests. They share no
// code with the library beyond plain integers and gmpxx.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

// a + b*lambda with lambda^2 = -lambda - 2.
struct Ok {
  std::int64_t a = 0, b = 0;
  friend Ok operator+(Ok x, Ok y) { return {x.a + y.a, x.b + y.b}; }
  friend Ok operator*(Ok x, Ok y) { return {x.a * y.a - 2 * x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b}; }
  Ok bar() const { return {a - b, -b}; }
  bool operator==(const Ok&) const = default;
  auto operator<=>(const Ok&) const = default;
};

using Vec = std::array<Ok, 3>;
using Mat = std::array<Ok, 9>;

inline const Mat& H() {
  static const Mat h{Ok{3, 0}, Ok{-1, -1}, Ok{-1, -1}, Ok{0, 1}, Ok{3, 0}, Ok{-1, -1}, Ok{0, 1}, Ok{0, 1}, Ok{3, 0}};
  return h;
}

inline Ok form(const Vec& u, const Vec& v) {
  Ok s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s = s + u[i] * H()[3 * i + j] * v[j].bar();
  return s;
}

// Box search for h(v, v) = n. For a positive definite Gram matrix G,
// x_i^2 <= n (G^-1)_ii; the inverse is taken by exact Gauss-Jordan.
inline std::vector<Vec> short_vectors(std::int64_t n) {
  std::array<Vec, 6> basis{};
  for (int i = 0; i < 3; ++i) {
    basis[2 * i][i] = {1, 0};
    basis[2 * i + 1][i] = {0, 1};
  }
  std::array<std::array<mpq_class, 12>, 6> aug;
  for (int p = 0; p < 6; ++p) {
    for (int q = 0; q < 6; ++q) {
      const Ok x = form(basis[p], basis[q]);
      aug[p][q] = mpq_class(2 * x.a - x.b, 2);
      aug[p][q].canonicalize();
      aug[p][6 + q] = p == q ? 1 : 0;
    }
  }
  for (int c = 0; c < 6; ++c) {
    int piv = c;
    while (aug[piv][c] == 0) ++piv;
    std::swap(aug[piv], aug[c]);
    const mpq_class d = aug[c][c];
    for (auto& x : aug[c]) x /= d;
    for (int r = 0; r < 6; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      const mpq_class f = aug[r][c];
      for (int k = 0; k < 12; ++k) aug[r][k] -= f * aug[c][k];
    }
  }
  std::array<std::int64_t, 6> box{};
  for (int i = 0; i < 6; ++i) {
    const mpq_class b2 = aug[i][6 + i] * n;
    std::int64_t s = 0;
    while (mpq_class((s + 1) * (s + 1)) <= b2) ++s;
    box[i] = s;
  }
  std::vector<Vec> out;
  std::array<std::int64_t, 6> x{};
  for (x[0] = -box[0]; x[0] <= box[0]; ++x[0])
    for (x[1] = -box[1]; x[1] <= box[1]; ++x[1])
      for (x[2] = -box[2]; x[2] <= box[2]; ++x[2])
        for (x[3] = -box[3]; x[3] <= box[3]; ++x[3])
          for (x[4] = -box[4]; x[4] <= box[4]; ++x[4])
            for (x[5] = -box[5]; x[5] <= box[5]; ++x[5]) {
              const Vec v{Ok{x[0], x[1]}, Ok{x[2], x[3]}, Ok{x[4], x[5]}};
              const Ok q = form(v, v);
              if (q.b == 0 && q.a == n) out.push_back(v);
            }
  std::sort(out.begin(), out.end());
  return out;
}

// Every gamma with rows of norm 3 and gamma H gamma* = H, without pruning.
inline std::vector<Mat> isometries() {
  const auto s = short_vectors(3);
  std::vector<Mat> out;
  for (const auto& r0 : s)
    for (const auto& r1 : s)
      for (const auto& r2 : s) {
        const std::array<Vec, 3> rows{r0, r1, r2};
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i)
          for (int j = 0; j < 3 && ok; ++j) ok = form(rows[i], rows[j]) == H()[3 * i + j];
        if (ok) out.push_back({r0[0], r0[1], r0[2], r1[0], r1[1], r1[2], r2[0], r2[1], r2[2]});
      }
  std::sort(out.begin(), out.end());
  return out;
}

// Lattices 2^K Z^3 <= L <= Z^3 as subgroups of (Z/2^K)^3, one bit per element.
class LatticeBits {
 public:
  explicit LatticeBits(int k) : k_(k), m_(1 << k), bits_(static_cast<std::size_t>(m_) * m_ * m_) {}

  static LatticeBits span(int k, const std::vector<std::array<long, 3>>& gens) {
    LatticeBits l(k);
    l.bits_[0] = true;
    std::vector<int> todo{0};
    while (!todo.empty()) {
      const int e = todo.back();
      todo.pop_back();
      for (const auto& g : gens) {
        const int f = l.add(e, l.index(g));
        if (!l.bits_[static_cast<std::size_t>(f)]) {
          l.bits_[static_cast<std::size_t>(f)] = true;
          todo.push_back(f);
        }
      }
    }
    return l;
  }

  bool operator<(const LatticeBits& o) const { return bits_ < o.bits_; }
  bool operator==(const LatticeBits& o) const { return bits_ == o.bits_; }

  // All [M] with 2L < M < L, each scaled back to a primitive lattice.
  std::vector<LatticeBits> neighbors() const {
    const std::size_t n = bits_.size();
    std::vector<bool> twice(n);
    for (std::size_t e = 0; e < n; ++e)
      if (bits_[e]) twice[static_cast<std::size_t>(add(static_cast<int>(e), static_cast<int>(e)))] = true;
    // Coset representatives of L / 2L.
    std::vector<int> reps;
    for (std::size_t e = 0; e < n && reps.size() < 8; ++e) {
      if (!bits_[e]) continue;
      bool fresh = true;
      for (int r : reps) fresh = fresh && !twice[static_cast<std::size_t>(sub(static_cast<int>(e), r))];
      if (fresh) reps.push_back(static_cast<int>(e));
    }
    std::set<LatticeBits> out;
    auto shifted = [&](const std::vector<int>& shifts) {
      LatticeBits m(k_);
      for (std::size_t e = 0; e < n; ++e)
        if (twice[e])
          for (int s : shifts) m.bits_[static_cast<std::size_t>(add(static_cast<int>(e), s))] = true;
      return m.primitive();
    };
    for (std::size_t i = 1; i < reps.size(); ++i) {
      out.insert(shifted({0, reps[i]}));
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        out.insert(shifted({0, reps[i], reps[j], add(reps[i], reps[j])}));
      }
    }
    return {out.begin(), out.end()};
  }

 private:
  int index(const std::array<long, 3>& v) const {
    int e = 0;
    for (long c : v) e = e * m_ + static_cast<int>(((c % m_) + m_) % m_);
    return e;
  }
  std::array<int, 3> coords(int e) const { return {e / (m_ * m_), (e / m_) % m_, e % m_}; }
  int add(int x, int y) const {
    const auto a = coords(x), b = coords(y);
    return index({a[0] + b[0], a[1] + b[1], a[2] + b[2]});
  }
  int sub(int x, int y) const {
    const auto a = coords(x), b = coords(y);
    return index({a[0] - b[0], a[1] - b[1], a[2] - b[2]});
  }
  // Divide by 2 while every element is even.
  LatticeBits primitive() const {
    LatticeBits cur = *this;
    while (true) {
      bool even = true;
      for (std::size_t e = 0; e < cur.bits_.size() && even; ++e)
        if (cur.bits_[e])
          for (int c : coords(static_cast<int>(e))) even = even && c % 2 == 0;
      if (!even) return cur;
      LatticeBits half(k_);
      for (std::size_t e = 0; e < cur.bits_.size(); ++e)
        half.bits_[e] = cur.bits_[static_cast<std::size_t>(add(static_cast<int>(e), static_cast<int>(e)))];
      cur = half;
    }
  }

  int k_;
  int m_;
  std::vector<bool> bits_;
};

// Sizes of the balls of radius 0..r around Z^3, and the vertex set itself.
inline std::pair<std::vector<std::size_t>, std::set<LatticeBits>> ball(int r) {
  const int k = r + 3;
  const LatticeBits origin = LatticeBits::span(k, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  std::set<LatticeBits> seen{origin};
  std::vector<LatticeBits> frontier{origin};
  std::vector<std::size_t> sizes{1};
  for (int d = 1; d <= r; ++d) {
    std::vector<LatticeBits> next;
    for (const auto& v : frontier)
      for (auto& w : v.neighbors())
        if (seen.insert(w).second) next.push_back(std::move(w));
    frontier = std::move(next);
    sizes.push_back(seen.size());
  }
  return {sizes, seen};
}

// GL_2(F_7) by exhaustion: (order, number with det +-1).
inline std::pair<int, int> gl2_counts() {
  int all = 0, pm = 0;
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      for (int c = 0; c < 7; ++c)
        for (int d = 0; d < 7; ++d) {
          const int det = ((a * d - b * c) % 7 + 7) % 7;
          all += det != 0;
          pm += det == 1 || det == 6;
        }
  return {all, pm};
}

// Roots of t^2 + t + 2 modulo 2^bits.
inline std::vector<std::uint64_t> roots_mod_2k(int bits) {
  std::vector<std::uint64_t> out;
  const std::uint64_t m = std::uint64_t{1} << bits;
  for (std::uint64_t t = 0; t < m; ++t)
    if ((t * t + t + 2) % m == 0) out.push_back(t);
  return out;
}

}  // namespace oracle
