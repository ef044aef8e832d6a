#include "fpp/building.hpp"

#include <algorithm>
#include <set>

#include "fpp/errors.hpp"
#include "fpp/padic.hpp"

namespace fpp {

namespace {

int v2(const Integer& x, int cap) {
  if (x == 0) return cap;
  return std::min(cap, static_cast<int>(mpz_scan1(x.get_mpz_t(), 0)));
}

Integer pow2(int k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return r;
}

void reduce(Integer& x, const Integer& m) { mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()); }

}  // namespace

BuildingVertex BuildingVertex::from_rows(const std::vector<LatticeRow>& input, int precision) {
  const Integer m = pow2(precision);
  // 2^precision Z^3 is implicit: everything is computed modulo m.
  std::vector<LatticeRow> rows = input;
  for (auto& r : rows)
    for (auto& x : r) reduce(x, m);

  std::array<LatticeRow, 3> out;
  std::array<int, 3> piv{};
  for (int j = 0; j < 3; ++j) {
    std::size_t best = rows.size();
    int best_v = precision;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const int v = v2(rows[i][static_cast<std::size_t>(j)], precision);
      if (v < best_v) {
        best_v = v;
        best = i;
      }
    }
    if (best == rows.size()) throw PrecisionError("lattice pivot beyond 2^" + std::to_string(precision));
    LatticeRow p = rows[best];
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
    // Scale the pivot row so its pivot entry is exactly 2^v.
    Integer unit = p[static_cast<std::size_t>(j)] >> best_v, unit_inv;
    mpz_invert(unit_inv.get_mpz_t(), unit.get_mpz_t(), m.get_mpz_t());
    for (auto& x : p) {
      x *= unit_inv;
      reduce(x, m);
    }
    for (auto& r : rows) {
      if (r[static_cast<std::size_t>(j)] == 0) continue;
      const Integer q = r[static_cast<std::size_t>(j)] >> best_v;
      for (int k = 0; k < 3; ++k) {
        r[static_cast<std::size_t>(k)] -= q * p[static_cast<std::size_t>(k)];
        reduce(r[static_cast<std::size_t>(k)], m);
      }
    }
    out[static_cast<std::size_t>(j)] = p;
    piv[static_cast<std::size_t>(j)] = best_v;
  }
  // The result is exact only if the lattice contains 2^precision Z^3.
  if (piv[0] + piv[1] + piv[2] >= precision)
    throw PrecisionError("lattice index not certified at 2^" + std::to_string(precision));

  for (int j = 0; j < 3; ++j) {
    const Integer d = pow2(piv[static_cast<std::size_t>(j)]);
    for (int i = 0; i < j; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].get_mpz_t(), d.get_mpz_t());
      if (q == 0) continue;
      for (int k = 0; k < 3; ++k) {
        out[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] -= q * out[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        reduce(out[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)], m);
      }
    }
  }
  int shift = precision;
  for (const auto& r : out)
    for (const auto& x : r)
      if (x != 0) shift = std::min(shift, v2(x, precision));
  BuildingVertex v;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) v.rep_[static_cast<std::size_t>(3 * i + j)] = out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] >> shift;
  return v;
}

std::array<int, 3> BuildingVertex::exponents() const {
  std::array<int, 3> e{};
  for (int i = 0; i < 3; ++i) e[static_cast<std::size_t>(i)] = static_cast<int>(mpz_scan1((*this)(i, i).get_mpz_t(), 0));
  return e;
}

int BuildingVertex::type() const {
  const auto e = exponents();
  return (e[0] + e[1] + e[2]) % 3;
}

std::vector<LatticeRow> BuildingVertex::rows() const {
  std::vector<LatticeRow> r(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (*this)(i, j);
  return r;
}

std::string BuildingVertex::str() const {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) {
    s += i ? "; " : "";
    for (int j = 0; j < 3; ++j) s += (j ? " " : "") + (*this)(i, j).get_str();
  }
  return s + "]";
}

bool BuildingVertex::operator<(const BuildingVertex& o) const {
  for (std::size_t k = 0; k < 9; ++k) {
    const int c = cmp(rep_[k], o.rep_[k]);
    if (c != 0) return c < 0;
  }
  return false;
}

BuildingVertex standard_vertex() {
  return BuildingVertex::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 8);
}

std::vector<BuildingVertex> neighbors(const BuildingVertex& v) {
  const auto base = v.rows();
  const auto e = v.exponents();
  const int precision = std::max(64, 2 * (e[0] + e[1] + e[2]) + 8);
  std::vector<LatticeRow> twice(3), combos;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) twice[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = 2 * base[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
  // Lifts of the seven nonzero classes of L / 2L.
  for (int c = 1; c < 8; ++c) {
    LatticeRow a{0, 0, 0};
    for (int i = 0; i < 3; ++i)
      if (c >> i & 1)
        for (int k = 0; k < 3; ++k) a[static_cast<std::size_t>(k)] += base[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
    combos.push_back(a);
  }
  std::set<BuildingVertex> found;
  for (std::size_t c = 0; c < combos.size(); ++c) {
    auto rows = twice;
    rows.push_back(combos[c]);
    found.insert(BuildingVertex::from_rows(rows, precision));
    for (std::size_t d = c + 1; d < combos.size(); ++d) {
      auto plane = rows;
      plane.push_back(combos[d]);
      found.insert(BuildingVertex::from_rows(plane, precision));
    }
  }
  return {found.begin(), found.end()};
}

std::vector<BallEntry> ball(const BuildingVertex& v, int radius) {
  if (radius < 0) throw DomainError("ball radius must be nonnegative");
  std::map<BuildingVertex, int> dist{{v, 0}};
  std::vector<BuildingVertex> frontier{v};
  for (int d = 1; d <= radius; ++d) {
    std::set<BuildingVertex> next;
    for (const auto& u : frontier)
      for (auto& w : neighbors(u))
        if (!dist.count(w)) next.insert(std::move(w));
    for (const auto& w : next) dist.emplace(w, d);
    frontier.assign(next.begin(), next.end());
  }
  std::vector<BallEntry> out;
  for (const auto& [w, d] : dist) out.push_back({w, d});
  std::stable_sort(out.begin(), out.end(), [](const BallEntry& a, const BallEntry& b) { return a.distance < b.distance; });
  return out;
}

BuildingVertex act(const MatK& gamma, const BuildingVertex& v, int precision) {
  if (gamma.det().is_zero()) throw DomainError("act needs an invertible matrix");
  const auto base = v.rows();
  for (int n = precision; n <= kMaxActPrecision; n *= 2) {
    try {
      // Rows of B * gamma_lambda^T span gamma_lambda L for column vectors; the
      // common power of 2 in gamma_lambda is a homothety and is dropped.
      const PadicMat g = embed_matrix(gamma, Place::lambda(), n);
      std::vector<LatticeRow> rows(3);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          Integer s = 0;
          for (int k = 0; k < 3; ++k) s += base[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * g(j, k).residue();
          rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
        }
      return BuildingVertex::from_rows(rows, std::min(n, g.min_precision()));
    } catch (const PrecisionError&) {
      if (n >= kMaxActPrecision) throw;
    }
  }
  throw PrecisionError("act: precision ceiling exceeded");
}

BuildingVertex act(const Similitude& gamma, const BuildingVertex& v, int precision) {
  return act(to_K(gamma.matrix), v, precision);
}

TransitivityReport check_transitivity(int radius, const std::map<std::int64_t, std::vector<Similitude>>& lists,
                                      const SylowP& p, int precision) {
  TransitivityReport rep;
  rep.radius = radius;
  const BuildingVertex origin = standard_vertex();
  const auto entries = ball(origin, radius);
  rep.ball_size = entries.size();
  std::map<BuildingVertex, Witness> images;
  for (const auto& [factor, list] : lists) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      const Similitude& g = list[i];
      if (!in_gamma_mum(g, p)) continue;
      ++rep.elements_tested;
      const BuildingVertex u = act(g, origin, precision);
      images.emplace(u, Witness{factor, i});
      const int vl = valuation(g.det.to_K(), Place::lambda());
      if (u.type() != vl % 3) rep.type_audit_ok = false;
      if (u == origin && !g.matrix.is_scalar()) rep.stabilizers.push_back({factor, i});
    }
  }
  for (const auto& e : entries) {
    auto it = images.find(e.vertex);
    if (it == images.end()) {
      rep.unreached.push_back(e.vertex);
    } else {
      rep.witnesses.emplace(e.vertex, it->second);
      ++rep.reached;
    }
  }
  return rep;
}

}  // namespace fpp
