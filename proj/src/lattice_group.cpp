#include "fpp/lattice_group.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

#include "fpp/errors.hpp"
#include "fpp/hermitian.hpp"

namespace fpp {

namespace {

const MatOK& h_integral() {
  static const MatOK h = [] {
    const IntK l{0, 1}, lb{-1, -1}, three{3, 0};
    return MatOK({three, lb, lb, l, three, lb, l, l, three});
  }();
  return h;
}

bool is_power_of_two(std::int64_t c) { return c > 0 && (c & (c - 1)) == 0; }

auto as_tuple(const VecOK& v) { return std::tie(v[0].a, v[0].b, v[1].a, v[1].b, v[2].a, v[2].b); }

// Coefficients d_i, m_ij with Q(x) = sum_i d_i (x_i + sum_{j>i} m_ij x_j)^2.
struct QuadraticDecomposition {
  std::vector<Rational> diag;
  RationalMatrix upper;
};

QuadraticDecomposition decompose(const RationalMatrix& g) {
  const std::size_t n = g.size();
  RationalMatrix q = g;
  for (std::size_t i = 0; i < n; ++i) {
    if (q[i][i] <= 0) throw std::logic_error("Gram matrix is not positive definite");
    for (std::size_t j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
  }
  QuadraticDecomposition d;
  d.diag.resize(n);
  d.upper.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    d.diag[i] = q[i][i];
    for (std::size_t j = i + 1; j < n; ++j) d.upper[i][j] = q[i][j];
  }
  return d;
}

Integer floor_of(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

}  // namespace

IntK hermitian_product(const VecOK& u, const VecOK& v) {
  const MatOK& h = h_integral();
  IntK s;
  for (int i = 0; i < 3; ++i) {
    IntK row;
    for (int j = 0; j < 3; ++j) row = row + h(i, j) * v[static_cast<std::size_t>(j)].conj();
    s = s + u[static_cast<std::size_t>(i)] * row;
  }
  return s;
}

RationalMatrix real_gram_matrix() {
  std::array<VecOK, 6> basis{};
  for (int i = 0; i < 3; ++i) {
    basis[static_cast<std::size_t>(2 * i)][static_cast<std::size_t>(i)] = {1, 0};
    basis[static_cast<std::size_t>(2 * i + 1)][static_cast<std::size_t>(i)] = {0, 1};
  }
  RationalMatrix g(6, std::vector<Rational>(6));
  for (std::size_t p = 0; p < 6; ++p)
    for (std::size_t q = 0; q < 6; ++q) {
      // Re(a + b lambda) = a - b/2; the symmetrized form is real.
      const IntK x = hermitian_product(basis[p], basis[q]);
      g[p][q] = Rational(2 * x.a - x.b, 2);
      g[p][q].canonicalize();
    }
  return g;
}

std::vector<ShortVector> enumerate_short_vectors(std::int64_t n) {
  if (n < 0) throw DomainError("norm must be nonnegative");
  static const QuadraticDecomposition qd = decompose(real_gram_matrix());
  constexpr int dim = 6;
  std::vector<ShortVector> out;
  std::array<std::int64_t, dim> x{};
  const Rational bound(n);

  std::function<void(int, const Rational&)> descend = [&](int i, const Rational& budget) {
    Rational center = 0;
    for (int j = i + 1; j < dim; ++j) center += qd.upper[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
    const Rational& d = qd.diag[static_cast<std::size_t>(i)];
    const Integer s = floor_sqrt(budget / d);
    const Integer lo = floor_of(-center) - s - 1, hi = floor_of(-center) + s + 2;
    for (Integer xi = lo; xi <= hi; ++xi) {
      const Rational t = Rational(xi) + center;
      const Rational used = d * t * t;
      if (used > budget) continue;
      x[static_cast<std::size_t>(i)] = xi.get_si();
      if (i == 0) {
        if (used == budget) {
          ShortVector sv;
          for (int k = 0; k < 3; ++k) sv.v[static_cast<std::size_t>(k)] = {x[static_cast<std::size_t>(2 * k)], x[static_cast<std::size_t>(2 * k + 1)]};
          sv.norm = n;
          out.push_back(sv);
        }
      } else {
        descend(i - 1, budget - used);
      }
    }
    x[static_cast<std::size_t>(i)] = 0;
  };
  descend(dim - 1, bound);
  std::sort(out.begin(), out.end(),
            [](const ShortVector& a, const ShortVector& b) { return as_tuple(a.v) < as_tuple(b.v); });
  return out;
}

// ---------------------------------------------------------------- similitudes

Similitude make_similitude(const MatOK& gamma) {
  const MatOK& h = h_integral();
  const MatOK lhs = gamma * h * conj_transpose(gamma);
  const IntK c3 = lhs(0, 0);
  if (c3.b != 0 || c3.a <= 0 || c3.a % 3 != 0) throw DomainError("matrix is not a similitude of H");
  const std::int64_t c = c3.a / 3;
  if (!(lhs == h.scaled(IntK{c, 0}))) throw DomainError("matrix is not a similitude of H");
  return {gamma, c, gamma.det(), varpi(gamma)};
}

std::vector<Similitude> enumerate_similitudes(std::int64_t c) {
  if (!is_power_of_two(c)) throw DomainError("similitude factor must be a power of 2");
  const auto vectors = enumerate_short_vectors(3 * c);
  const MatOK& h = h_integral();
  const IntK h01 = h(0, 1) * c, h02 = h(0, 2) * c, h12 = h(1, 2) * c;
  std::vector<Similitude> out;
  for (const auto& r1 : vectors) {
    std::vector<const VecOK*> second, third;
    for (const auto& v : vectors) {
      const IntK p = hermitian_product(r1.v, v.v);
      if (p == h01) second.push_back(&v.v);
      if (p == h02) third.push_back(&v.v);
    }
    for (const VecOK* r2 : second)
      for (const VecOK* r3 : third) {
        if (!(hermitian_product(*r2, *r3) == h12)) continue;
        MatOK g;
        for (int j = 0; j < 3; ++j) {
          g(0, j) = r1.v[static_cast<std::size_t>(j)];
          g(1, j) = (*r2)[static_cast<std::size_t>(j)];
          g(2, j) = (*r3)[static_cast<std::size_t>(j)];
        }
        out.push_back({g, c, g.det(), varpi(g)});
      }
  }
  return out;
}

KThetaDecomposition normalize_k_theta(const Similitude& gamma) {
  const KElt k = gamma.det.to_K() * Rational(1, gamma.factor);
  return {k, to_K(gamma.matrix).scaled(k.inverse())};
}

bool in_gamma_mum(const Similitude& gamma, const SylowP& p) { return p.contains_up_to_scalar(gamma.level_image); }

bool in_gamma_mum_unitary(const Similitude& gamma, const SylowP& p) {
  const int k = reduce_mod_sqrt7(normalize_k_theta(gamma).k);
  return p.contains(FqMat::scalar(2, inverse_mod7(k)) * gamma.level_image);
}

// ---------------------------------------------------------------- text format

void write_similitudes(std::ostream& os, std::int64_t factor, const std::vector<Similitude>& list) {
  os << "# fpp similitudes v1\n";
  os << "factor " << factor << "\n";
  os << "count " << list.size() << "\n";
  for (const auto& s : list) {
    const auto& e = s.matrix.entries();
    for (std::size_t k = 0; k < e.size(); ++k) os << (k ? " " : "") << e[k].a << "," << e[k].b;
    os << "\n";
  }
}

std::vector<Similitude> read_similitudes(std::istream& is, std::int64_t* factor_out) {
  std::string line;
  auto next_line = [&](const char* what) {
    if (!std::getline(is, line)) throw DomainError(std::string("similitude file: missing ") + what);
    return line;
  };
  if (next_line("header") != "# fpp similitudes v1") throw DomainError("similitude file: bad header");
  std::int64_t factor = 0;
  std::size_t count = 0;
  {
    std::istringstream ls(next_line("factor line"));
    std::string key;
    if (!(ls >> key >> factor) || key != "factor" || factor <= 0) throw DomainError("similitude file: bad factor line");
  }
  {
    std::istringstream ls(next_line("count line"));
    std::string key;
    if (!(ls >> key >> count) || key != "count") throw DomainError("similitude file: bad count line");
  }
  std::vector<Similitude> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::array<IntK, 9> e;
    for (auto& x : e) {
      char comma = 0;
      if (!(ls >> x.a >> comma >> x.b) || comma != ',') throw DomainError("similitude file: bad entry in line " + line);
    }
    std::string rest;
    if (ls >> rest) throw DomainError("similitude file: trailing data in line " + line);
    Similitude s = make_similitude(MatOK(e));
    if (s.factor != factor) throw DomainError("similitude file: factor mismatch in line " + line);
    out.push_back(std::move(s));
  }
  if (out.size() != count) throw DomainError("similitude file: count mismatch");
  if (factor_out) *factor_out = factor;
  return out;
}

}  // namespace fpp
