#include "fpp/checks.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <set>

#include "fpp/algebra.hpp"
#include "fpp/building.hpp"
#include "fpp/errors.hpp"
#include "fpp/hermitian.hpp"
#include "fpp/padic.hpp"
#include "fpp/sampling.hpp"

namespace fpp {

using nlohmann::ordered_json;

// ---------------------------------------------------------------- Workspace

const SylowP& Workspace::sylow() {
  if (!sylow_) sylow_ = std::make_unique<SylowP>(sylow2_P(config_.seed));
  return *sylow_;
}

const std::vector<Similitude>& Workspace::similitudes(std::int64_t factor) {
  auto it = lists_.find(factor);
  if (it == lists_.end()) it = lists_.emplace(factor, enumerate_similitudes(factor)).first;
  return it->second;
}

std::map<std::int64_t, std::vector<Similitude>> Workspace::similitude_lists(int max_exponent) {
  std::map<std::int64_t, std::vector<Similitude>> out;
  for (int k = 0; k <= max_exponent; ++k) {
    const std::int64_t c = std::int64_t{1} << k;
    out.emplace(c, similitudes(c));
  }
  return out;
}

namespace {

// Accumulates failed expectations for one check.
class Expect {
 public:
  void operator()(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  CheckStatus status() const { return ok() ? CheckStatus::Pass : CheckStatus::Fail; }
  void attach(ordered_json& w) const {
    if (!ok()) w["failures"] = failures_;
  }

 private:
  std::vector<std::string> failures_;
};

struct Outcome {
  CheckStatus status;
  ordered_json witness;
};

Outcome finish(const Expect& e, ordered_json w) {
  e.attach(w);
  return {e.status(), std::move(w)};
}

ordered_json json_of(const FqMat& m) { return m.entries(); }

ordered_json json_of(const KElt& x) { return x.str(); }

ordered_json json_of(const MatK& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < 3; ++i) {
    ordered_json r = ordered_json::array();
    for (int j = 0; j < 3; ++j) r.push_back(m(i, j).str());
    rows.push_back(r);
  }
  return rows;
}

ordered_json json_of(const MatOK& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < 3; ++i) {
    ordered_json r = ordered_json::array();
    for (int j = 0; j < 3; ++j) r.push_back(std::to_string(m(i, j).a) + "," + std::to_string(m(i, j).b));
    rows.push_back(r);
  }
  return rows;
}

ordered_json json_of(const BuildingVertex& v) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < 3; ++i) {
    ordered_json r = ordered_json::array();
    for (int j = 0; j < 3; ++j) r.push_back(v(i, j).get_str());
    rows.push_back(r);
  }
  return rows;
}

double round6(double x) { return std::round(x * 1e6) / 1e6; }

// Rank over L of vectors in L^n (Gaussian elimination).
std::size_t rank_over_L(std::vector<std::vector<LElt>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const LElt inv = rows[rank][c].inverse();
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      const LElt f = rows[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

Rational trace_form(const DElt& x, const DElt& y) { return (x * y)[0].trace(); }

// ---------------------------------------------------------------- algebra checks

Outcome check_relations(Workspace& ws) {
  Expect expect;
  const DElt pi = DElt::pi();
  expect(power(pi, 3) == DElt::scalar(KElt::mu()), "Pi^3 != mu");
  for (int k = 0; k < LElt::kDegree; ++k) {
    const LElt z = LElt::zeta(k);
    expect(pi * DElt(z) == DElt(z.galois(1)) * pi, "Pi z != sigma(z) Pi for z = zeta^" + std::to_string(k));
  }
  expect(phi(pi) == to_L(pi_matrix()), "phi(Pi) != Q");
  const LElt z = LElt::zeta(1);
  expect(phi(DElt(z)) == MatL::diagonal(z, z.galois(2), z.galois(1)), "phi(zeta) is not diag(z, z^sigma^2, z^sigma)");
  Sampler rng(ws.config().seed);
  int mult = 0, assoc = 0;
  for (int s = 0; s < ws.config().samples; ++s) {
    const DElt x = rng.d_elt(), y = rng.d_elt(), w = rng.d_elt();
    if (phi(x * y) == phi(x) * phi(y)) ++mult;
    if ((x * y) * w == x * (y * w) && x * (y + w) == x * y + x * w) ++assoc;
  }
  expect(mult == ws.config().samples, "phi not multiplicative on some sample");
  expect(assoc == ws.config().samples, "associativity or distributivity failed on some sample");
  return finish(expect, {{"pi_cubed", "mu"}, {"phi_multiplicative_samples", mult}, {"associative_samples", assoc}});
}

Outcome check_involutions(Workspace& ws) {
  Expect expect;
  const DElt b = build_b();
  expect(star(b) == -b, "b* != -b");
  expect(star(DElt::pi()) == DElt::monomial(KElt::mu_bar().to_L(), 2), "Pi* != mu_bar Pi^2");
  expect(star(DElt(LElt::zeta(1))) == DElt(LElt::zeta(6)), "zeta* != zeta^6");

  const KElt l = KElt::lambda(), lb = KElt::lambda_bar(), d = l - lb;
  const MatK expected(std::array<KElt, 9>{d, l, -l, -lb, d, l, lb, -lb, d});
  expect(to_K(phi(b)) == expected, "phi(b) differs from the reference matrix");
  // phi carries * to the conjugate transpose.
  Sampler rng(ws.config().seed + 1);
  int invol = 0, anti = 0, transpose_ok = 0;
  for (int s = 0; s < ws.config().samples; ++s) {
    const DElt x = rng.d_elt(), y = rng.d_elt();
    if (star(star(x)) == x && bigstar(bigstar(x)) == x) ++invol;
    if (star(x * y) == star(y) * star(x) && bigstar(x * y) == bigstar(y) * bigstar(x)) ++anti;
    if (phi(star(x)) == conj_transpose(phi(x))) ++transpose_ok;
  }
  expect(invol == ws.config().samples, "star or bigstar is not an involution on some sample");
  expect(anti == ws.config().samples, "star or bigstar is not anti-multiplicative on some sample");
  expect(transpose_ok == ws.config().samples, "phi(x*) != phi(x)^* on some sample");

  // Trace form of *: tr(x x*) > 0; the one of bigstar is indefinite.
  int positive = 0;
  for (int s = 0; s < ws.config().samples; ++s) {
    const DElt x = rng.d_elt();
    if (x.is_zero() || trace_form(x, star(x)) > 0) ++positive;
  }
  expect(positive == ws.config().samples, "tr(x x*) <= 0 for some nonzero x");
  ordered_json counterexample = nullptr;
  const auto basis = q_basis();
  for (std::size_t i = 0; i < basis.size() && counterexample.is_null(); ++i)
    for (std::size_t j = i; j < basis.size() && counterexample.is_null(); ++j)
      for (int sign : {1, -1}) {
        const DElt x = i == j ? basis[i] : basis[i] + basis[j] * Rational(sign);
        const Rational t = trace_form(x, bigstar(x));
        if (t <= 0) {
          counterexample = {{"x", x.str()}, {"trace", t.get_str()}};
          break;
        }
      }
  return finish(expect, {{"phi_b", json_of(expected)},
                         {"involution_samples", invol},
                         {"antimultiplicative_samples", anti},
                         {"star_trace_form_positive_samples", positive},
                         {"bigstar_trace_form_nonpositive_at", counterexample}});
}

Outcome check_splitting(Workspace&) {
  Expect expect;
  // phi is injective on the Q-basis: the 18 images are Q-independent in M_3(L) = Q^54.
  RationalMatrix coords;
  for (const auto& x : q_basis()) {
    std::vector<Rational> row;
    for (const auto& e : phi(x).entries())
      for (const auto& c : e.coeffs()) row.push_back(c);
    coords.push_back(row);
  }
  const std::size_t q_rank = rank(coords);
  expect(q_rank == 18, "phi is not injective on the Q-basis");
  // phi(zeta^k Pi^i), k, i < 3, span M_3(L) over L.
  std::vector<std::vector<LElt>> rows;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      const auto e = phi(DElt::monomial(LElt::zeta(k), i)).entries();
      rows.emplace_back(e.begin(), e.end());
    }
  const std::size_t l_rank = rank_over_L(rows);
  expect(l_rank == 9, "phi(D) does not span M_3(L) over L");
  return finish(expect, {{"rank_over_Q", q_rank}, {"rank_over_L", l_rank}});
}

Outcome check_invariants(Workspace&) {
  Expect expect;
  ordered_json table = ordered_json::array();
  Rational sum = 0;
  for (const auto& inv : hasse_invariants()) {
    table.push_back({{"place", inv.place.name()}, {"invariant", inv.value.get_str()}, {"by_reciprocity", inv.from_reciprocity}});
    sum += inv.value;
    Rational expected = 0;
    if (inv.place == Place::lambda()) expected = Rational(1, 3);
    if (inv.place == Place::lambda_bar()) expected = Rational(-1, 3);
    expect(inv.value == expected, "invariant at " + inv.place.name() + " is " + inv.value.get_str());
  }
  expect(sum == 0, "invariants do not sum to 0");
  return finish(expect, {{"invariants", table}, {"sum", sum.get_str()}});
}

Outcome check_order(Workspace&) {
  Expect expect;
  const LElt lb = KElt::lambda_bar().to_L();
  std::vector<DElt> gens;
  for (int k = 0; k < LElt::kDegree; ++k) {
    gens.push_back(DElt::monomial(LElt::zeta(k), 0));
    gens.push_back(DElt::monomial(LElt::zeta(k) * lb, 1));
    gens.push_back(DElt::monomial(LElt::zeta(k) * lb, 2));
  }
  int closed = 0;
  for (const auto& x : gens)
    for (const auto& y : gens) closed += in_order(x * y);
  const int total = static_cast<int>(gens.size() * gens.size());
  expect(closed == total, "O_D is not closed under products of its Z-basis");
  expect(in_order(DElt::one()), "1 not in O_D");
  expect(in_order(DElt::monomial(lb, 1)), "lambda_bar Pi not in O_D");
  expect(!in_order(DElt::pi()), "Pi in O_D");
  expect(in_order(DElt::pi(), Place::lambda()), "Pi not in O_D at lambda");
  return finish(expect, {{"basis_products_in_order", closed}, {"basis_products", total}});
}

Outcome check_psi(Workspace& ws) {
  Expect expect;
  const Rational det = determinant(psi_gram());
  expect(det != 0, "psi Gram determinant is 0");
  Sampler rng(ws.config().seed + 2);
  int anti = 0, adjoint = 0;
  for (int s = 0; s < ws.config().samples; ++s) {
    const DElt a = rng.d_elt(2), x = rng.d_elt(2), y = rng.d_elt(2);
    if (psi(x, y) == -psi(y, x)) ++anti;
    if (psi(a * x, y) == psi(x, star(a) * y)) ++adjoint;
  }
  expect(anti == ws.config().samples, "psi is not anti-symmetric on some sample");
  expect(adjoint == ws.config().samples, "psi(ax, y) != psi(x, a* y) on some sample");
  return finish(expect, {{"gram_size", 18}, {"gram_determinant", det.get_str()}, {"antisymmetric_samples", anti},
                         {"adjoint_samples", adjoint}});
}

Outcome check_charpoly(Workspace&) {
  Expect expect;
  const CharPoly p = char_poly(phi_b_matrix().matrix());
  const CharPoly ref = reference_char_poly_phi_b();
  expect(p == ref, "characteristic polynomial of phi(b) differs from the reference");
  return finish(expect, {{"c2", json_of(p.c2)}, {"c1", json_of(p.c1)}, {"c0", json_of(p.c0)}});
}

Outcome check_signature(Workspace&) {
  Expect expect;
  const HermMat pb = phi_b_matrix();
  std::array<double, 3> ev{};
  {
    auto m = embed(pb.matrix());
    for (auto& z : m) z /= std::complex<double>(0, 1);
    ev = hermitian_eigenvalues(m);
  }
  const Signature s = signature_antihermitian(pb);
  const Signature conj = signature_antihermitian(pb, true);
  const Signature ref = reference_signature_phi_b();
  expect(s.margin > 0.1, "eigenvalue margin below 0.1");
  expect(s == ref, "signature of phi(b)/i under epsilon is (" + std::to_string(s.positive) + "," +
                       std::to_string(s.negative) + "), reference (" + std::to_string(ref.positive) + "," +
                       std::to_string(ref.negative) + ")");
  return finish(expect, {{"eigenvalues_over_i", {round6(ev[0]), round6(ev[1]), round6(ev[2])}},
                         {"signature", {s.positive, s.negative}},
                         {"signature_conjugate_embedding", {conj.positive, conj.negative}},
                         {"reference", {ref.positive, ref.negative}},
                         {"margin", round6(s.margin)}});
}

Outcome check_group_G(Workspace& ws) {
  Expect expect;
  const auto one = in_group_G(DElt::one());
  expect(one && *one == 1, "1 is not in G with factor 1");
  const auto lam = in_group_G(DElt::scalar(KElt::lambda()));
  expect(lam && *lam == 2, "lambda is not in G with factor 2");
  // Central elements k have factor N(k); psi scales by the same factor.
  Sampler rng(ws.config().seed + 3);
  int scaled = 0, rejected = 0;
  const KElt k(Rational(1), Rational(1));
  for (int s = 0; s < ws.config().samples; ++s) {
    const DElt x = rng.d_elt(2), y = rng.d_elt(2), g = DElt::scalar(k);
    if (psi(g * x, g * y) == k.norm() * psi(x, y)) ++scaled;
    if (!in_group_G(rng.d_elt(2))) ++rejected;
  }
  expect(scaled == ws.config().samples, "psi(gx, gy) != c psi(x, y) for a central g");
  expect(rejected > 0, "no random element was rejected");
  return finish(expect, {{"factor_of_lambda", lam ? lam->get_str() : "none"},
                         {"psi_scaling_samples", scaled},
                         {"random_nonmembers", rejected}});
}

// ---------------------------------------------------------------- hermitian checks

Outcome check_form(Workspace&) {
  Expect expect;
  const HermMat h = build_H();
  const MatK w = build_W();
  expect(h.det() == KElt(7), "det H != 7");
  expect(w * conj_transpose(w) == h.matrix(), "H != W W*");
  const LElt basis[3] = {LElt(1), LElt::zeta(1), LElt::zeta(2)};
  bool gram = true;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) gram = gram && gram_h(basis[i], basis[j]) == h.matrix()(i, j);
  expect(gram, "Gram matrix of h on 1, zeta, zeta^2 differs from H");
  const auto ev = hermitian_eigenvalues(embed(h.matrix()));
  expect(ev[0] > 0.1, "H is not positive definite with margin 0.1");
  expect(is_positive_definite(real_gram_matrix()), "real Gram matrix is not positive definite");
  return finish(expect, {{"det_H", json_of(h.det())}, {"eigenvalues", {round6(ev[0]), round6(ev[1]), round6(ev[2])}}});
}

Outcome check_dagger(Workspace& ws) {
  Expect expect;
  expect(dagger(MatK::identity()) == MatK::identity(), "dagger(I) != I");
  expect(dagger(build_H().matrix()) == build_H().matrix(), "dagger(H) != H");
  Sampler rng(ws.config().seed + 4);
  int invol = 0, anti = 0;
  for (int s = 0; s < ws.config().samples; ++s) {
    const MatK a = rng.mat_k(), b = rng.mat_k();
    if (dagger(dagger(a)) == a) ++invol;
    if (dagger(a * b) == dagger(b) * dagger(a)) ++anti;
  }
  expect(invol == ws.config().samples, "dagger is not an involution on some sample");
  expect(anti == ws.config().samples, "dagger is not anti-multiplicative on some sample");
  return finish(expect, {{"involution_samples", invol}, {"antimultiplicative_samples", anti}});
}

Outcome check_split_at_2(Workspace& ws) {
  Expect expect;
  const int n = ws.config().precision;
  const int bits = n / 2;
  const MatK h = build_H().matrix();
  const PadicMat h2 = embed_matrix(h, Place::lambda(), n);
  const PadicMat h2_inv = embed_matrix(inverse(h), Place::lambda(), n);
  const auto id = split_at_2(MatK::identity(), n);
  const PadicMat one = embed_matrix(MatK::identity(), Place::lambda(), n);
  expect(id.first.congruent(one, bits) && id.second.congruent(one, bits), "split(I) != (I, I)");
  const auto lam = split_at_2(MatK::scalar(KElt::lambda()), n);
  expect(lam.first.entry(0, 0).valuation() == 1 && lam.second.entry(0, 0).valuation() == 0,
         "lambda does not have valuations (1, 0)");
  Sampler rng(ws.config().seed + 5);
  int transported = 0;
  for (int s = 0; s < ws.config().samples; ++s) {
    const MatK a = rng.mat_k();
    const auto [x, y] = split_at_2(a, n);
    const auto [dx, dy] = split_at_2(dagger(a), n);
    if (dx.congruent(h2 * y * h2_inv, bits) && dy.congruent(h2_inv * x * h2, bits)) ++transported;
  }
  expect(transported == ws.config().samples, "(x,y)^dagger != (H y H^-1, H^-1 x H) on some sample");
  // Similitudes become pairs with x y scalar once y is read in the opposite ring.
  int scalar_pairs = 0, tested = 0;
  const auto& sims = ws.similitudes(2);
  for (std::size_t i = 0; i < sims.size() && tested < 20; i += 33, ++tested) {
    const MatK g = to_K(sims[i].matrix);
    const PadicMat x = split_at_2(dagger(g), n).first;
    const PadicMat gl = embed_matrix(g, Place::lambda(), n);
    if ((gl * x).congruent(embed_matrix(MatK::scalar(KElt(2)), Place::lambda(), n), bits)) ++scalar_pairs;
  }
  expect(scalar_pairs == tested, "gamma gamma^dagger is not 2 at lambda for some similitude");
  return finish(expect, {{"precision", n}, {"compared_bits", bits}, {"transport_samples", transported},
                         {"similitude_pairs", scalar_pairs}});
}

Outcome check_local_equivalence(Workspace&) {
  Expect expect;
  const HermMat h = build_H(), hp = build_H_prime();
  expect(hp.det() == KElt(49), "det H' != 49");
  ordered_json table = ordered_json::object();
  for (long ell : {3L, 5L, 7L, 11L, 13L}) {
    const bool eq = locally_equivalent(h, hp, ell);
    table[std::to_string(ell)] = eq;
    expect(eq, "H and H' are not equivalent at " + std::to_string(ell));
  }
  const HermMat one(MatK::identity(), HermMat::Kind::Hermitian);
  const HermMat three(MatK::diagonal(KElt(1), KElt(1), KElt(3)), HermMat::Kind::Hermitian);
  expect(!locally_equivalent(one, three, 3), "diag(1,1,1) and diag(1,1,3) reported equivalent at 3");
  return finish(expect, {{"det_H", json_of(h.det())}, {"det_H_prime", json_of(hp.det())}, {"equivalent_at", table}});
}

// Elements q gamma of C_7: gamma a group member from the lists, q = +-2^j
// with q varpi(gamma) in P.
std::vector<MatK> c7_elements(Workspace& ws, const std::vector<std::int64_t>& factors) {
  const SylowP& p = ws.sylow();
  std::vector<MatK> out;
  for (std::int64_t c : factors)
    for (const auto& s : ws.similitudes(c)) {
      if (!p.contains_up_to_scalar(s.level_image)) continue;
      for (long q : {1L, -1L, 2L, -2L, 4L, -4L})
        if (p.contains(FqMat::scalar(2, mod7(q)) * s.level_image)) {
          out.push_back(to_K(s.matrix).scaled(KElt(q)));
          break;
        }
    }
  return out;
}

// ---------------------------------------------------------------- level checks

Outcome check_level(Workspace& ws) {
  Expect expect;
  const FqMat hmod = reduce_mod_sqrt7(build_H().matrix());
  expect(hmod.rank() == 1, "H mod sqrt(-7) does not have rank 1");
  const auto& ns = null_space_basis();
  expect(ns.size() == 2, "null space is not 2-dimensional");
  const auto gl2 = general_linear_group_2();
  std::size_t pm = 0;
  for (const auto& g : gl2) pm += g.det() == 1 || g.det() == 6;
  expect(gl2.size() == 2016 && pm == 672, "GL_2(F_7) counts differ");
  const SylowP& p = ws.sylow();
  expect(p.order() == 32, "|P| != 32");
  bool dets = true;
  for (const auto& g : p.elements()) dets = dets && (g.det() == 1 || g.det() == 6);
  expect(dets, "P has an element with det != +-1");
  expect(p.contains(FqMat::scalar(2, 6)), "-I not in P");
  expect(generated_subgroup(p.elements()).size() == p.order(), "P is not closed");

  const auto c7 = c7_elements(ws, {1, 2, 4});
  Sampler rng(ws.config().seed + 6);
  int closed = 0, mult = 0;
  for (int s = 0; s < ws.config().samples && !c7.empty(); ++s) {
    const MatK& a = c7[rng.index(c7.size())];
    const MatK& b = c7[rng.index(c7.size())];
    const FqMat prod = varpi(a * b);
    if (p.contains(prod) && p.contains(varpi(inverse(a)))) ++closed;
    if (prod == varpi(a) * varpi(b)) ++mult;
  }
  int conjugate = 0;
  for (std::uint64_t seed : {ws.config().seed + 1, ws.config().seed + 2, ws.config().seed + 3})
    conjugate += conjugator(p, sylow2_P(seed)).has_value();
  expect(conjugate == 3, "some Sylow subgroup is not conjugate to P");
  ordered_json gens = ordered_json::array();
  for (const auto& g : p.generators()) gens.push_back(json_of(g));
  return finish(expect, {{"rank_H_mod_sqrt7", hmod.rank()},
                         {"null_space_basis", {{ns[0][0], ns[0][1], ns[0][2]}, {ns[1][0], ns[1][1], ns[1][2]}}},
                         {"order_GL2", gl2.size()},
                         {"order_det_pm1", pm},
                         {"order_P", p.order()},
                         {"P_generators", gens},
                         {"C7_samples", c7.size()},
                         {"closure_samples", closed},
                         {"conjugate_constructions", conjugate}});
}

Outcome check_theta_identities(Workspace& ws) {
  Expect expect;
  ordered_json counts = ordered_json::object();
  const SylowP& p = ws.sylow();
  std::size_t checked = 0;
  for (const auto& [c, list] : ws.similitude_lists(ws.config().max_factor_exponent)) {
    std::size_t ok = 0, in_group = 0;
    for (const auto& s : list) {
      const KElt d = s.det.to_K();
      const auto kt = normalize_k_theta(s);
      const bool det_ok = d * d.conj() == KElt(Rational(c * c * c));
      const bool unitary = kt.theta * dagger(kt.theta) == MatK::identity();
      const bool reassembled = kt.theta.scaled(kt.k) == to_K(s.matrix) && theta_of(to_K(s.matrix)) == kt.k;
      const bool agree = in_gamma_mum(s, p) == in_gamma_mum_unitary(s, p);
      in_group += in_gamma_mum(s, p);
      if (det_ok && unitary && reassembled && agree) ++ok;
    }
    expect(ok == list.size(), "identities fail for some similitude with factor " + std::to_string(c));
    counts[std::to_string(c)] = {{"similitudes", list.size()}, {"verified", ok}, {"in_group", in_group}};
    checked += list.size();
  }
  return finish(expect, {{"by_factor", counts}, {"total", checked}});
}

Outcome check_transitivity_verify(Workspace& ws) {
  Expect expect;
  const int radius = std::min(2, ws.config().max_radius);
  const auto rep = check_transitivity(radius, ws.similitude_lists(ws.config().max_factor_exponent), ws.sylow(),
                                      ws.config().precision);
  expect(rep.unreached.empty(), std::to_string(rep.unreached.size()) + " vertices not reached");
  expect(rep.stabilizers.empty(), "a non-scalar element fixes the standard vertex");
  expect(rep.type_audit_ok, "type of an image differs from v_lambda(det) mod 3");
  return finish(expect, {{"radius", radius}, {"ball_size", rep.ball_size}, {"reached", rep.reached},
                         {"elements_tested", rep.elements_tested}, {"stabilizers", rep.stabilizers.size()}});
}

// ---------------------------------------------------------------- inner form, components

Outcome check_inner_form(Workspace& ws) {
  Expect expect;
  const auto rep = check_inner_form_data(0, ws.config().seed);
  expect(rep.galois_twist_fixes_phi, "Q^-1 sigma(phi(x)) Q != phi(x) on the Q-basis");
  expect(rep.phi_b_commutes_with_q, "phi(b) Q != Q phi(b)");
  return finish(expect, {{"basis_elements", 18}});
}

Outcome check_conjugation_instance(Workspace& ws) {
  Expect expect;
  const auto rep = check_inner_form_data(ws.config().samples / 4, ws.config().seed + 7);
  expect(rep.conjugation_transport, "conjugation by (1,u) does not carry i_u to i_1");
  return finish(expect, {{"u", {"H", "phi(b)"}}, {"samples_per_u", ws.config().samples / 4}});
}

Outcome check_theta_mod_sqrt7(Workspace& ws) {
  Expect expect;
  std::vector<std::int64_t> factors;
  for (int k = 0; k <= ws.config().max_factor_exponent; ++k) factors.push_back(std::int64_t{1} << k);
  std::set<int> values;
  const auto c7 = c7_elements(ws, factors);
  for (const auto& g : c7) values.insert(reduce_mod_sqrt7(theta_of(g)));
  const std::size_t samples = c7.size();
  bool subset = true;
  for (int v : values) subset = subset && (v == 1 || v == 6);
  expect(subset, "theta mod sqrt(-7) takes a value outside +-1");
  expect(values.count(1) && values.count(6), "theta mod sqrt(-7) does not attain both +1 and -1");
  return finish(expect, {{"samples", samples},
                         {"values", std::vector<int>(values.begin(), values.end())},
                         {"trusted", "the 7-adic refinement beyond the residue is not checked"}});
}

Outcome check_components(Workspace&) {
  Expect expect;
  const int count = component_count({1, 6});
  const int full = component_count({1, 2, 3, 4, 5, 6});
  expect(count == 3, "component count is " + std::to_string(count));
  expect(full == 1, "full level gives " + std::to_string(full) + " components");
  expect(6 % count == 0, "count does not divide 6");
  return finish(expect, {{"components", count},
                         {"components_full_level", full},
                         {"trusted", "field of definition and Galois action on the components"}});
}

Outcome check_descent(Workspace&) {
  Expect expect;
  const DElt pi = DElt::pi();
  const DElt pi_inv = DElt::monomial(KElt::mu_bar().to_L(), 2);
  expect(inverse(pi) == pi_inv, "Pi^-1 != mu_bar Pi^2");
  expect(in_order(pi, Place::lambda()), "Pi not in O_D at lambda");
  expect(in_order(pi_inv, Place::lambda_bar()), "mu_bar Pi^2 not in O_D at lambda_bar");
  return finish(expect, {{"pi_inverse", pi_inv.str()}});
}

Outcome check_places(Workspace& ws) {
  Expect expect;
  const KElt l = KElt::lambda(), lb = KElt::lambda_bar();
  expect(l * lb == KElt(2) && l + lb == KElt(-1), "lambda lambda_bar != 2 or lambda + lambda_bar != -1");
  expect(valuation(KElt(2), Place::lambda()) == 1 && valuation(KElt(2), Place::lambda_bar()) == 1, "v(2) != 1");
  expect(valuation(KElt::mu(), Place::lambda()) == 1 && valuation(KElt::mu(), Place::lambda_bar()) == -1,
         "v(mu) != (1, -1)");
  const PadicInt r = hensel_root_lambda(ws.config().precision);
  const PadicInt rb = PadicInt(-1, ws.config().precision) - r;
  expect((r * r + r + PadicInt(2, ws.config().precision)).residue() == 0, "Hensel root is not a root");
  expect(r.valuation() == 1 && rb.valuation() == 0, "root valuations are not (1, 0)");
  return finish(expect, {{"lambda_root_mod_2^16", PadicInt(r.residue(), 16).residue().get_str()}});
}

Outcome paper_trusted(Workspace&) { return {CheckStatus::PaperTrusted, ordered_json::object()}; }

struct CheckDef {
  const char* id;
  const char* statement;
  std::function<Outcome(Workspace&)> run;
};

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> checks{
      {"Sec-2.1-places", "lambda lambda_bar = 2, valuations over 2, 2-adic root of t^2+t+2", check_places},
      {"Sec-2.1-relations", "Pi^3 = mu, Pi z = sigma(z) Pi, phi multiplicative, D associative", check_relations},
      {"Lemma-2.1.1", "phi is injective on D and spans M_3(L) over L", check_splitting},
      {"Lemma-2.1.3", "local invariants 1/3, -1/3 over 2, 0 at odd places, sum 0", check_invariants},
      {"Order-2.1.4", "O_D is a ring containing lambda_bar Pi but not Pi", check_order},
      {"Sec-2.2-involutions", "b* = -b, phi(b) as tabulated, * and bigstar involutive anti-automorphisms",
       check_involutions},
      {"Lemma-2.3-psi", "psi non-degenerate, anti-symmetric, psi(ax,y) = psi(x,a*y)", check_psi},
      {"Lemma-2.3-charpoly", "char poly of phi(b) is t^3 - 3 sqrt(-7) t^2 - 15 t - sqrt(-7)", check_charpoly},
      {"Lemma-2.3-signature", "phi(b) is congruent to diag(-i,-i,i) under epsilon", check_signature},
      {"Def-2.4", "G membership through x x^bigstar scalar; factors of central elements", check_group_G},
      {"Sec-3.1-form", "det H = 7, H = W W*, Gram of h is H, H positive definite", check_form},
      {"Sec-3.1-dagger", "dagger is an involutive anti-automorphism fixing I and H", check_dagger},
      {"Lemma-3.3", "splitting at 2 carries dagger to (H y H^-1, H^-1 x H)", check_split_at_2},
      {"Sec-3.4-level", "H mod sqrt(-7) rank 1, |P| = 32, C_7 closed, varpi multiplicative", check_level},
      {"Thm-3.6-identities", "det g conj(det g) = c^3 and theta theta^dagger = 1 for all enumerated g",
       check_theta_identities},
      {"Thm-3.6-transitivity", "group members reach every vertex of the radius-2 ball", check_transitivity_verify},
      {"Claim-4.1.1", "Q^-1 sigma(phi(x)) Q = phi(x) on a Q-basis and phi(b) Q = Q phi(b)", check_inner_form},
      {"Lemma-4.1.2-instance", "conjugation by (1,u) carries i_u to i_1 for u = H, phi(b)",
       check_conjugation_instance},
      {"Prop-4.1b", "H and sqrt(-7) phi(b) are equivalent at 3, 5, 7, 11, 13", check_local_equivalence},
      {"Claim-4.3.3-finite", "theta of C_7 elements is +-1 mod sqrt(-7), both signs attained",
       check_theta_mod_sqrt7},
      {"Thm-4.3-components", "the component count is 3", check_components},
      {"Thm-4.3-descent", "Pi is integral at lambda and Pi^-1 = mu_bar Pi^2 at lambda_bar", check_descent},
      {"Sec-2.5-shimura-variety", "the Shimura variety as a complex and algebraic variety", paper_trusted},
      {"Sec-4.2-uniformization", "formal uniformization by the Drinfeld upper half plane", paper_trusted},
      {"Thm-3.6-algebraization", "the quotient of the Drinfeld space is a fake projective plane", paper_trusted},
      {"Prop-4.1a-hasse", "the Hasse principle for G and uniqueness of the inner form", paper_trusted},
      {"Sec-2.5-complex-uniformization", "complex uniformization by the unit ball", paper_trusted},
      {"Lemma-4.1.2-general", "conjugation by (1,u) for an arbitrary ring with involution", paper_trusted},
      {"Sec-1-bloch", "remarks on Bloch's conjecture", paper_trusted},
  };
  return checks;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.compare(0, prefix.size(), prefix) == 0; }

}  // namespace

std::vector<std::string> verify_check_ids() {
  std::vector<std::string> ids;
  for (const auto& c : registry()) ids.emplace_back(c.id);
  return ids;
}

nlohmann::ordered_json conventions(Workspace& ws) {
  const auto& ns = null_space_basis();
  ordered_json gens = ordered_json::array();
  for (const auto& g : ws.sylow().generators()) gens.push_back(json_of(g));
  return {{"lambda_place", "root r of t^2+t+2 in Z_2 with v_2(r) = 1"},
          {"lambda_root_mod_2^16", PadicInt(hensel_root_lambda(16).residue(), 16).residue().get_str()},
          {"action", "gamma acts on column vectors through its image at lambda"},
          {"null_space_basis", {{ns[0][0], ns[0][1], ns[0][2]}, {ns[1][0], ns[1][1], ns[1][2]}}},
          {"varpi", "row action u -> u gamma on the null space basis"},
          {"sylow_seed", ws.sylow().seed()},
          {"sylow_generators", gens}};
}

Report run_verify(Workspace& ws, const std::string& filter) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  Report report("verify", ws.config());
  for (const auto& def : registry()) {
    if (!starts_with(def.id, filter)) continue;
    const auto t0 = clock::now();
    Outcome out;
    try {
      out = def.run(ws);
    } catch (const std::exception& e) {
      out = {CheckStatus::Fail, {{"failures", {std::string("exception: ") + e.what()}}}};
    }
    CheckRecord rec{def.id, def.statement, out.status, std::move(out.witness),
                    std::chrono::duration<double>(clock::now() - t0).count()};
    report.add(std::move(rec));
  }
  report.set_conventions(conventions(ws));
  report.set_wall_time(std::chrono::duration<double>(clock::now() - start).count());
  return report;
}

Report run_building(Workspace& ws, int radius, const std::vector<std::int64_t>& factors) {
  using clock = std::chrono::steady_clock;
  if (radius < 0 || radius > ws.config().max_radius)
    throw DomainError("radius must lie in [0, " + std::to_string(ws.config().max_radius) + "]");
  const auto start = clock::now();
  Report report("building", ws.config());

  auto t0 = clock::now();
  const BuildingVertex origin = standard_vertex();
  const auto entries = ball(origin, radius);
  std::vector<std::size_t> sizes(static_cast<std::size_t>(radius) + 1, 0);
  for (const auto& e : entries)
    for (int r = e.distance; r <= radius; ++r) ++sizes[static_cast<std::size_t>(r)];
  {
    Expect expect;
    expect(sizes[0] == 1, "ball of radius 0 is not a single vertex");
    if (radius >= 1) expect(sizes[1] == 15, "ball of radius 1 has " + std::to_string(sizes[1]) + " vertices");
    ordered_json w{{"ball_sizes", sizes}};
    expect.attach(w);
    report.add({"Thm-3.6-ball", "ball sizes around the standard vertex", expect.status(), w,
                std::chrono::duration<double>(clock::now() - t0).count()});
  }

  t0 = clock::now();
  std::map<std::int64_t, std::vector<Similitude>> lists;
  if (factors.empty()) {
    lists = ws.similitude_lists(ws.config().max_factor_exponent);
  } else {
    for (auto c : factors) lists.emplace(c, ws.similitudes(c));
  }
  const auto rep = check_transitivity(radius, lists, ws.sylow(), ws.config().precision);
  {
    Expect expect;
    expect(rep.unreached.empty(), std::to_string(rep.unreached.size()) + " vertices not reached");
    expect(rep.type_audit_ok, "type of an image differs from v_lambda(det) mod 3");
    ordered_json table = ordered_json::array();
    for (const auto& e : entries) {
      auto it = rep.witnesses.find(e.vertex);
      ordered_json row{{"vertex", json_of(e.vertex)}, {"distance", e.distance}, {"type", e.vertex.type()}};
      if (it != rep.witnesses.end()) {
        row["factor"] = it->second.factor;
        row["witness"] = json_of(lists.at(it->second.factor)[it->second.index].matrix);
      } else {
        row["witness"] = nullptr;
      }
      table.push_back(row);
    }
    std::vector<std::int64_t> used;
    for (const auto& [c, l] : lists) used.push_back(c);
    ordered_json w{{"radius", radius}, {"factors", used}, {"ball_size", rep.ball_size}, {"reached", rep.reached},
                   {"elements_tested", rep.elements_tested}, {"table", table}};
    expect.attach(w);
    report.add({"Thm-3.6-transitivity", "every ball vertex is the image of the standard vertex", expect.status(), w,
                std::chrono::duration<double>(clock::now() - t0).count()});
  }
  {
    Expect expect;
    expect(rep.stabilizers.empty(), std::to_string(rep.stabilizers.size()) + " non-scalar stabilizers");
    ordered_json found = ordered_json::array();
    for (const auto& s : rep.stabilizers) found.push_back(json_of(lists.at(s.factor)[s.index].matrix));
    ordered_json w{{"non_scalar_stabilizers", found}};
    expect.attach(w);
    report.add({"Thm-3.6-stabilizers", "no non-scalar group member fixes the standard vertex", expect.status(), w, 0.0});
  }
  report.set_conventions(conventions(ws));
  report.set_wall_time(std::chrono::duration<double>(clock::now() - start).count());
  return report;
}

}  // namespace fpp
