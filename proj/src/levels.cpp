#include "fpp/levels.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "fpp/errors.hpp"
#include "fpp/hermitian.hpp"

namespace fpp {

int mod7(long v) {
  long r = v % kFieldSeven;
  return static_cast<int>(r < 0 ? r + kFieldSeven : r);
}

int inverse_mod7(int a) {
  a = mod7(a);
  if (a == 0) throw DomainError("0 has no inverse in F_7");
  for (int x = 1; x < kFieldSeven; ++x)
    if (a * x % kFieldSeven == 1) return x;
  return 0;
}

// ---------------------------------------------------------------- FqMat

FqMat::FqMat(int n, std::vector<int> entries) : n_(n), e_(std::move(entries)) {
  if (n < 1 || static_cast<int>(e_.size()) != n * n) throw DomainError("FqMat: wrong number of entries");
  for (auto& x : e_) x = mod7(x);
}

FqMat FqMat::identity(int n) { return scalar(n, 1); }

FqMat FqMat::scalar(int n, int s) {
  std::vector<int> e(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(n * i + i)] = s;
  return FqMat(n, e);
}

FqMat FqMat::operator*(const FqMat& o) const {
  if (n_ != o.n_) throw DomainError("FqMat size mismatch");
  std::vector<int> r(e_.size(), 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      int s = 0;
      for (int k = 0; k < n_; ++k) s += (*this)(i, k) * o(k, j);
      r[static_cast<std::size_t>(n_ * i + j)] = s;
    }
  return FqMat(n_, r);
}

int FqMat::det() const {
  const auto& m = *this;
  if (n_ == 2) return mod7(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
  if (n_ == 3)
    return mod7(m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0)));
  throw DomainError("FqMat::det supports n = 2, 3");
}

FqMat FqMat::inverse() const {
  const int d = det();
  if (d == 0) throw DomainError("singular matrix over F_7");
  const int di = inverse_mod7(d);
  const auto& m = *this;
  if (n_ == 2) return FqMat(2, {m(1, 1) * di, -m(0, 1) * di, -m(1, 0) * di, m(0, 0) * di});
  std::vector<int> r(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      r[static_cast<std::size_t>(3 * i + j)] = (m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0)) * di;
    }
  return FqMat(3, r);
}

int FqMat::rank() const {
  std::vector<int> a = e_;
  int rank = 0;
  for (int col = 0; col < n_ && rank < n_; ++col) {
    int piv = -1;
    for (int r = rank; r < n_; ++r)
      if (a[static_cast<std::size_t>(n_ * r + col)]) { piv = r; break; }
    if (piv < 0) continue;
    for (int k = 0; k < n_; ++k) std::swap(a[static_cast<std::size_t>(n_ * piv + k)], a[static_cast<std::size_t>(n_ * rank + k)]);
    const int inv = inverse_mod7(a[static_cast<std::size_t>(n_ * rank + col)]);
    for (int r = 0; r < n_; ++r) {
      if (r == rank) continue;
      const int f = a[static_cast<std::size_t>(n_ * r + col)] * inv;
      for (int k = 0; k < n_; ++k)
        a[static_cast<std::size_t>(n_ * r + k)] = mod7(a[static_cast<std::size_t>(n_ * r + k)] - f * a[static_cast<std::size_t>(n_ * rank + k)]);
    }
    ++rank;
  }
  return rank;
}

int FqMat::order() const {
  if (!invertible()) throw DomainError("order of a singular matrix");
  const FqMat id = identity(n_);
  FqMat p = *this;
  for (int k = 1;; ++k) {
    if (p == id) return k;
    p = p * *this;
  }
}

std::string FqMat::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < n_; ++j) os << (j ? " " : "") << (*this)(i, j);
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------- reduction

int reduce_mod_sqrt7(const KElt& x) {
  // O_K = Z[lambda] and lambda = (-1 + sqrt(-7)) / 2 -> -1/2 = 3.
  auto red = [](const Rational& q) {
    Integer den = q.get_den();
    if (mpz_divisible_ui_p(den.get_mpz_t(), 7)) throw DomainError("element is not integral at 7");
    Integer num = q.get_num();
    const int n = static_cast<int>(mpz_fdiv_ui(num.get_mpz_t(), 7));
    const int d = static_cast<int>(mpz_fdiv_ui(den.get_mpz_t(), 7));
    return mod7(n * inverse_mod7(d));
  };
  return mod7(red(x.a()) + 3 * red(x.b()));
}

FqMat reduce_mod_sqrt7(const MatK& a) {
  std::vector<int> e;
  for (const auto& x : a.entries()) e.push_back(reduce_mod_sqrt7(x));
  return FqMat(3, e);
}

FqMat reduce_mod_sqrt7(const MatOK& a) {
  std::vector<int> e;
  for (const auto& x : a.entries()) e.push_back(mod7(x.a + 3 * x.b));
  return FqMat(3, e);
}

namespace {

struct NullSpace {
  std::array<std::array<int, 3>, 2> basis;
  std::array<int, 2> free_columns;
};

// Left null space of H mod sqrt(-7) via row reduction of its transpose.
NullSpace compute_null_space() {
  const FqMat h = reduce_mod_sqrt7(build_H().matrix());
  // Solve u * h = 0, i.e. h^T u^T = 0.
  int a[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a[i][j] = h(j, i);
  int rank = 0;
  std::array<int, 3> pivot_col{-1, -1, -1};
  for (int col = 0; col < 3 && rank < 3; ++col) {
    int piv = -1;
    for (int r = rank; r < 3; ++r)
      if (a[r][col]) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    const int inv = inverse_mod7(a[rank][col]);
    for (int k = 0; k < 3; ++k) a[rank][k] = mod7(a[rank][k] * inv);
    for (int r = 0; r < 3; ++r) {
      if (r == rank || !a[r][col]) continue;
      const int f = a[r][col];
      for (int k = 0; k < 3; ++k) a[r][k] = mod7(a[r][k] - f * a[rank][k]);
    }
    pivot_col[rank++] = col;
  }
  if (rank != 1) throw std::logic_error("H mod sqrt(-7) does not have rank 1");
  NullSpace ns{};
  int idx = 0;
  for (int col = 0; col < 3; ++col) {
    if (col == pivot_col[0]) continue;
    std::array<int, 3> v{0, 0, 0};
    v[col] = 1;
    v[pivot_col[0]] = mod7(-a[0][col]);
    ns.basis[idx] = v;
    ns.free_columns[idx] = col;
    ++idx;
  }
  return ns;
}

const NullSpace& null_space() {
  static const NullSpace ns = compute_null_space();
  return ns;
}

}  // namespace

const std::array<std::array<int, 3>, 2>& null_space_basis() { return null_space().basis; }

FqMat varpi(const FqMat& g) {
  if (g.size() != 3) throw DomainError("varpi needs a 3x3 matrix");
  const auto& ns = null_space();
  std::vector<int> m;
  for (const auto& n : ns.basis) {
    std::array<int, 3> w{};
    for (int j = 0; j < 3; ++j) w[static_cast<std::size_t>(j)] = mod7(n[0] * g(0, j) + n[1] * g(1, j) + n[2] * g(2, j));
    // Coordinates are read off the free columns, where the basis is the identity.
    const int a = w[static_cast<std::size_t>(ns.free_columns[0])], b = w[static_cast<std::size_t>(ns.free_columns[1])];
    for (int j = 0; j < 3; ++j)
      if (mod7(a * ns.basis[0][static_cast<std::size_t>(j)] + b * ns.basis[1][static_cast<std::size_t>(j)]) != w[static_cast<std::size_t>(j)])
        throw DomainError("matrix does not preserve the null space of H mod sqrt(-7)");
    m.push_back(a);
    m.push_back(b);
  }
  return FqMat(2, m);
}

FqMat varpi(const MatK& gamma) { return varpi(reduce_mod_sqrt7(gamma)); }
FqMat varpi(const MatOK& gamma) { return varpi(reduce_mod_sqrt7(gamma)); }

// ---------------------------------------------------------------- GL_2(F_7)

std::vector<FqMat> general_linear_group_2() {
  std::vector<FqMat> out;
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      for (int c = 0; c < 7; ++c)
        for (int d = 0; d < 7; ++d)
          if (mod7(a * d - b * c) != 0) out.emplace_back(2, std::vector<int>{a, b, c, d});
  return out;
}

std::vector<FqMat> generated_subgroup(const std::vector<FqMat>& generators) {
  const int n = generators.empty() ? 2 : generators.front().size();
  std::set<FqMat> seen{FqMat::identity(n)};
  std::vector<FqMat> frontier{FqMat::identity(n)};
  while (!frontier.empty()) {
    std::vector<FqMat> next;
    for (const auto& x : frontier)
      for (const auto& g : generators) {
        FqMat y = x * g;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

SylowP::SylowP(std::vector<FqMat> elements, std::vector<FqMat> generators, std::uint64_t seed)
    : elements_(std::move(elements)), generators_(std::move(generators)), seed_(seed) {
  std::sort(elements_.begin(), elements_.end());
}

bool SylowP::contains(const FqMat& m) const { return std::binary_search(elements_.begin(), elements_.end(), m); }

bool SylowP::contains_up_to_scalar(const FqMat& m) const {
  for (int s = 1; s < kFieldSeven; ++s)
    if (contains(FqMat::scalar(2, s) * m)) return true;
  return false;
}

SylowP sylow2_P(std::uint64_t seed) {
  std::vector<FqMat> candidates;
  for (auto& g : general_linear_group_2())
    if (g.det() == 1 || g.det() == 6) candidates.push_back(std::move(g));
  // 672 = 2^5 * 21.
  constexpr std::size_t kSylowOrder = 32;
  std::mt19937_64 rng(seed);
  for (std::size_t i = candidates.size() - 1; i > 0; --i)
    std::swap(candidates[i], candidates[static_cast<std::size_t>(rng() % (i + 1))]);

  std::vector<FqMat> gens;
  std::vector<FqMat> group{FqMat::identity(2)};
  auto is_power_of_two = [](std::size_t n) { return n && (n & (n - 1)) == 0; };
  while (group.size() < kSylowOrder) {
    bool grew = false;
    for (const auto& g : candidates) {
      if (std::binary_search(group.begin(), group.end(), g)) continue;
      auto trial = gens;
      trial.push_back(g);
      auto closure = generated_subgroup(trial);
      if (is_power_of_two(closure.size())) {
        gens = std::move(trial);
        group = std::move(closure);
        grew = true;
        break;
      }
    }
    if (!grew) throw std::logic_error("maximal 2-subgroup smaller than a Sylow subgroup");
  }
  return SylowP(std::move(group), std::move(gens), seed);
}

std::optional<FqMat> conjugator(const SylowP& a, const SylowP& b) {
  if (a.order() != b.order()) return std::nullopt;
  for (const auto& g : general_linear_group_2()) {
    const FqMat gi = g.inverse();
    bool ok = true;
    for (const auto& x : a.generators())
      if (!b.contains(g * x * gi)) { ok = false; break; }
    if (ok) return g;
  }
  return std::nullopt;
}

bool in_C7(const MatK& gamma, const SylowP& p) { return p.contains(varpi(gamma)); }

KElt theta_of(const MatK& gamma) {
  const MatK s = gamma * dagger(gamma);
  if (!s.is_scalar() || s(0, 0).is_zero()) throw DomainError("gamma gamma^dagger is not a nonzero scalar");
  return gamma.det() / s(0, 0);
}

int component_count(const std::vector<int>& level_residues) {
  std::set<int> group{1};
  std::vector<int> gens{6};
  for (int r : level_residues) {
    if (mod7(r) == 0) throw DomainError("level residue must be a unit mod 7");
    gens.push_back(mod7(r));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x : std::vector<int>(group.begin(), group.end()))
      for (int g : gens)
        if (group.insert(mod7(x * g)).second) grew = true;
  }
  return static_cast<int>((kFieldSeven - 1) / group.size());
}

}  // namespace fpp
