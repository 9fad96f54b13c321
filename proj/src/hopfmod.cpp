#include "hopfkit/hopfmod.hpp"

#include <algorithm>

#include "checks.hpp"

namespace hopfkit {

using detail::append;
using detail::expect_equal;
using detail::eye;

namespace {

Permutation swap_middle(const Field& f, std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  return factor_permutation(f, TensorShape({a, b, c, d}), {0, 2, 1, 3});
}

void check_comodule_axioms(CheckReport& rep, const Coalgebra& c, std::size_t dim, const Matrix& coaction) {
  const Field& f = c.field();
  if (coaction.rows() != c.dim() * dim || coaction.cols() != dim) {
    rep.push_back({"coaction shape", {coaction.rows(), coaction.cols()}});
    return;
  }
  expect_equal(rep, "coaction coassociative", kron(c.comult(), eye(f, dim)) * coaction,
               kron(eye(f, c.dim()), coaction) * coaction);
  expect_equal(rep, "coaction counital", kron(c.counit(), eye(f, dim)) * coaction, eye(f, dim));
}

Bimodule module_of(const DKHopfModule& n) { return n.module(); }

std::size_t hdim(const ComoduleAlgebra& ca) { return ca.H.dim(); }

void require_free_z(const ComoduleAlgebra& ca, const Coalgebra& c, const DKHopfModule& n) {
  if (n.Z.Z.dim() != ca.H.dim() * c.dim() || !(n.data.A == ca.A))
    throw Error(ErrorKind::ShapeMismatch, "Hopf module is not over H⊗C and A");
}

}  // namespace

/* ---------------- the two module categories ---------------- */

CheckReport check_dk_hopf_module(const DKHopfModule& n) {
  CheckReport rep;
  const Field& f = n.data.A.field();
  const std::size_t na = n.data.A.dim(), nh = n.data.H.dim(), nz = n.Z.Z.dim();
  if (n.action.rows() != n.dim || n.action.cols() != na * n.dim) {
    rep.push_back({"action shape", {n.action.rows(), n.action.cols()}});
    return rep;
  }
  append(rep, check_bimodule(module_of(n)), "module ");
  check_comodule_axioms(rep, n.Z.Z, n.dim, n.coaction);
  if (!rep.empty()) return rep;
  /* ζ(a·m) = α(a_{-1}⊗m_{-1}) ⊗ a_0·m_0 */
  Matrix lhs = n.coaction * n.action;
  Matrix rhs = kron(n.Z.action, n.action) * swap_middle(f, nh, na, nz, n.dim) * kron(n.data.nu, n.coaction);
  expect_equal(rep, "coaction A-linear", lhs, rhs);
  return rep;
}

CheckReport check_bc_bimodule(const BCBimodule& m) {
  CheckReport rep;
  const Field& f = m.B.field();
  if (m.action.rows() != m.dim || m.action.cols() != m.B.dim() * m.dim) {
    rep.push_back({"action shape", {m.action.rows(), m.action.cols()}});
    return rep;
  }
  Bimodule mod = m.module();
  append(rep, check_bimodule(mod), "module ");
  check_comodule_axioms(rep, m.C, m.dim, m.coaction);
  if (!rep.empty()) return rep;
  for (std::size_t b = 0; b < m.B.dim(); ++b)
    expect_equal(rep, "coaction B-linear", m.coaction * mod.left_op(b),
                 kron(eye(f, m.C.dim()), mod.left_op(b)) * m.coaction);
  return rep;
}

BCBimodule base_bc_bimodule(const ComoduleAlgebra& ca) {
  const Algebra& B = ca.base.sub;
  const Field& f = B.field();
  return {B, trivial_coalgebra(f), B.dim(), B.mult(), eye(f, B.dim())};
}

DKHopfModule regular_hopf_module(const ComoduleAlgebra& ca) {
  ModuleCoalgebra z = free_module_coalgebra(ca.H, trivial_coalgebra(ca.A.field()));
  return {ca, z, ca.A.dim(), ca.A.mult(), ca.nu};
}

/* ---------------- χ and the functors ---------------- */

namespace {

LinearOperator chi_on(const ComoduleAlgebra& ca, std::size_t x_dim, const Bimodule& m, const ExtensionData& ext,
                      const TensorProduct& am) {
  const Field& f = ca.A.field();
  if (!(m.left_alg() == ca.base.sub)) throw Error(ErrorKind::AlgebraMismatch, "χ needs a left B-module");
  const std::size_t nh = hdim(ca), na = ca.A.dim(), nm = m.dim();
  TensorProduct dom = tensor_chain({ext.a_ab, scalar_extend_left(x_dim, m)});
  Matrix flat = kron({eye(f, nh), eye(f, x_dim), am.projection}) * swap_middle(f, nh, na, x_dim, nm) *
                kron({ca.nu, eye(f, x_dim), eye(f, nm)});
  TensorProduct cod = tensor_chain({vector_space(f, nh * x_dim), forget_left(am.result)});
  Matrix mat = induce_on_quotient(dom, flat);
  return {std::move(dom), std::move(cod), std::move(mat)};
}

DKHopfModule functor_A_on(const ComoduleAlgebra& ca, const Coalgebra& c, const BCBimodule& m,
                          const ExtensionData& ext, const Bimodule& mod, const TensorProduct& am) {
  const Field& f = ca.A.field();
  if (!(m.B == ca.base.sub) || !(m.C == c)) throw Error(ErrorKind::AlgebraMismatch, "module is not over (B, C)");
  LinearOperator ch = chi_on(ca, c.dim(), mod, ext, am);
  Matrix spread = induce(am, kron(eye(f, ca.A.dim()), m.coaction), ch.domain);
  ModuleCoalgebra z = free_module_coalgebra(ca.H, c);
  return {ca, z, am.dim(), am.result.left_act(), ch.matrix * spread};
}

}  // namespace

LinearOperator chi(const ComoduleAlgebra& ca, std::size_t x_dim, const Bimodule& m) {
  ExtensionData ext = make_extension(ca.base);
  return chi_on(ca, x_dim, m, ext, tensor_over(ext.a_ab, m));
}

DKHopfModule functor_A(const ComoduleAlgebra& ca, const Coalgebra& c, const BCBimodule& m) {
  ExtensionData ext = make_extension(ca.base);
  Bimodule mod = m.module();
  return functor_A_on(ca, c, m, ext, mod, tensor_over(ext.a_ab, mod));
}

FunctorBResult functor_B(const ComoduleAlgebra& ca, const Coalgebra& c, const DKHopfModule& n) {
  require_free_z(ca, c, n);
  const Field& f = ca.A.field();
  const std::size_t nc = c.dim(), nn = n.dim;
  const Algebra& B = ca.base.sub;
  /* Σ c⊗n with c1⊗1⊗c2⊗n = c⊗ζ(n) inside C⊗H⊗C⊗N */
  Matrix lhs = kron({eye(f, nc), ca.H.alg.unit(), eye(f, nc), eye(f, nn)}) * kron(c.comult(), eye(f, nn));
  Matrix rhs = kron(eye(f, nc), n.coaction);
  Matrix k = kernel_matrix(lhs - rhs);
  const std::size_t nk = k.cols();
  Bimodule nmod = n.module();
  Matrix action(f, nk, B.dim() * nk);
  for (std::size_t b = 0; b < B.dim(); ++b) {
    Matrix op = kron(eye(f, nc), nmod.left_op_by(ca.base.embed.col(b)));
    auto x = solve(k, op * k);
    if (!x) throw Error(ErrorKind::InvalidStructure, "equalizer is not B-stable");
    for (std::size_t i = 0; i < nk; ++i)
      for (std::size_t j = 0; j < nk; ++j) action.set(i, b * nk + j, (*x)(i, j));
  }
  auto coaction = solve(kron(eye(f, nc), k), kron(c.comult(), eye(f, nn)) * k);
  if (!coaction) throw Error(ErrorKind::InvalidStructure, "equalizer is not a C-subcomodule");
  return {{B, c, nk, action, *coaction}, k};
}

Matrix adjunction_unit(const ComoduleAlgebra& ca, const Coalgebra& c, const BCBimodule& m) {
  const Field& f = ca.A.field();
  ExtensionData ext = make_extension(ca.base);
  Bimodule mod = m.module();
  TensorProduct am = tensor_over(ext.a_ab, mod);
  DKHopfModule an = functor_A_on(ca, c, m, ext, mod, am);
  FunctorBResult ban = functor_B(ca, c, an);
  Matrix image = kron(eye(f, c.dim()), am.projection * kron(ca.A.unit(), eye(f, m.dim))) * m.coaction;
  auto x = solve(ban.inclusion, image);
  if (!x) throw Error(ErrorKind::UnitNotWellDefined, "m ↦ m_{-1}⊗(1⊗m_0) leaves the equalizer");
  return *x;
}

Matrix adjunction_counit(const ComoduleAlgebra& ca, const Coalgebra& c, const DKHopfModule& n) {
  const Field& f = ca.A.field();
  ExtensionData ext = make_extension(ca.base);
  FunctorBResult bn = functor_B(ca, c, n);
  TensorProduct ak = tensor_over(ext.a_ab, bn.module.module());
  Matrix eps_part = kron(c.counit(), eye(f, n.dim)) * bn.inclusion;
  return induce_on_quotient(ak, n.module().left_act() * kron(eye(f, ca.A.dim()), eps_part));
}

/* ---------------- Galois maps ---------------- */

LinearOperator hopf_operator(const ComoduleAlgebra& ca, std::size_t x_dim, const Bimodule& n) {
  const Field& f = ca.A.field();
  if (!(n.left_alg() == ca.A)) throw Error(ErrorKind::AlgebraMismatch, "ℍ needs a left A-module");
  ExtensionData ext = make_extension(ca.base);
  const std::size_t nh = hdim(ca), na = ca.A.dim(), nn = n.dim();
  Bimodule kn = restrict_left(n, ca.base);
  TensorProduct dom = tensor_chain({ext.a_ab, scalar_extend_left(x_dim, kn)});
  Matrix flat = kron({eye(f, nh), eye(f, x_dim), n.left_act()}) * swap_middle(f, nh, na, x_dim, nn) *
                kron({ca.nu, eye(f, x_dim), eye(f, nn)});
  TensorProduct cod = tensor_chain({vector_space(f, nh * x_dim), forget_left(n)});
  return {dom, cod, induce_on_quotient(dom, flat)};
}

LinearOperator aux_operator(const ComoduleAlgebra& ca, std::size_t x_dim, const Bimodule& n) {
  const Field& f = ca.A.field();
  ExtensionData ext = make_extension(ca.base);
  Bimodule kn = restrict_left(n, ca.base);
  LinearOperator ch = chi(ca, x_dim, kn);
  TensorProduct an = tensor_over(ext.a_ab, kn);
  Matrix xi = induce_on_quotient(an, n.left_act());
  TensorProduct cod = tensor_chain({vector_space(f, hdim(ca) * x_dim), forget_left(n)});
  return {ch.domain, cod, kron(eye(f, hdim(ca) * x_dim), xi) * ch.matrix};
}

LinearOperator galois_map(const ComoduleAlgebra& ca, std::size_t x_dim, const Bimodule& m) {
  const Field& f = ca.A.field();
  ExtensionData ext = make_extension(ca.base);
  TensorProduct am = tensor_over(ext.a_ab, m);
  Bimodule ksm = restrict_left(am.result, ca.base);
  LinearOperator ch = chi(ca, x_dim, ksm);
  TensorProduct a_sm = tensor_over(ext.a_ab, ksm);
  /* μ_M: A⊗_B(A⊗_B M) → A⊗_B M */
  Matrix mu = induce_on_quotient(a_sm, am.result.left_act());
  TensorProduct cod = tensor_chain({vector_space(f, hdim(ca) * x_dim), forget_left(am.result)});
  return {ch.domain, cod, kron(eye(f, hdim(ca) * x_dim), mu) * ch.matrix};
}

LinearOperator galois_map_formula(const ComoduleAlgebra& ca, std::size_t x_dim, const Bimodule& m) {
  ExtensionData ext = make_extension(ca.base);
  return hopf_operator(ca, x_dim, tensor_over(ext.a_ab, m).result);
}

LinearOperator canonical_map(const ComoduleAlgebra& ca) {
  const Field& f = ca.A.field();
  ExtensionData ext = make_extension(ca.base);
  const std::size_t nh = hdim(ca), na = ca.A.dim();
  Matrix flat = kron(eye(f, nh), ca.A.mult()) * kron(ca.nu, eye(f, na));
  TensorProduct cod = tensor_chain({vector_space(f, nh), vector_space(f, na)});
  return {ext.a_a, cod, induce_on_quotient(ext.a_a, flat)};
}

GaloisFactorization galois_factorization(const ComoduleAlgebra& ca, const Coalgebra& c, const Bimodule& m) {
  const Field& f = ca.A.field();
  ExtensionData ext = make_extension(ca.base);
  const std::size_t nh = hdim(ca), na = ca.A.dim(), nc = c.dim(), nm = m.dim();
  LinearOperator g = galois_map(ca, nc, m);
  TensorProduct am = tensor_over(ext.a_ab, m);
  const std::size_t nq = am.dim();

  Bimodule a_bb = restrict_left(ext.a_ab, ca.base);
  TensorProduct aam = tensor_chain({ext.a_ab, a_bb, m});
  /* can ⊗_B id_M: A⊗_B A⊗_B M → H⊗(A⊗_B M) */
  Matrix can_flat = kron(eye(f, nh), ca.A.mult()) * kron(ca.nu, eye(f, na));
  Matrix block_flat = kron(eye(f, nh), am.projection) * kron(can_flat, eye(f, nm));
  Matrix block = induce_on_quotient(aam, block_flat);

  /* Φ: a⊗c⊗q ↦ c⊗(a⊗s(q)) */
  TensorProduct target = tensor_chain({vector_space(f, nc), forget_left(aam.result)});
  Matrix phi_flat = kron(eye(f, nc), aam.projection * kron(eye(f, na), am.section)) *
                    factor_permutation(f, TensorShape({na, nc, nq}), {1, 0, 2});
  Matrix phi = induce(g.domain, phi_flat, target);
  /* Ψ: (h⊗c)⊗q ↦ c⊗(h⊗q) */
  Permutation psi = factor_permutation(f, TensorShape({nh, nc, nq}), {1, 0, 2});

  GaloisFactorization out;
  out.identity_holds = psi * g.matrix == kron(eye(f, nc), block) * phi;
  out.rank_galois = rank(g.matrix);
  out.rank_block = rank(block);
  out.c_dim = nc;
  return out;
}

Matrix fusion_operator(const Bialgebra& h, std::size_t m_dim) {
  const Field& f = h.field();
  const std::size_t n = h.dim();
  return kron({eye(f, n), h.alg.mult(), eye(f, m_dim)}) * kron({h.coalg.comult(), eye(f, n), eye(f, m_dim)});
}

CheckReport check_aux_identity(const ComoduleAlgebra& ca, std::size_t x_dim, const Bimodule& n) {
  CheckReport rep;
  expect_equal(rep, "auxiliary identity", hopf_operator(ca, x_dim, n).matrix, aux_operator(ca, x_dim, n).matrix);
  return rep;
}

CheckReport check_aux_free(const ComoduleAlgebra& ca, std::size_t x_dim, const Bimodule& m) {
  CheckReport rep;
  ExtensionData ext = make_extension(ca.base);
  Bimodule sm = tensor_over(ext.a_ab, m).result;
  Matrix formula = galois_map_formula(ca, x_dim, m).matrix;
  expect_equal(rep, "auxiliary operator on a free module", aux_operator(ca, x_dim, sm).matrix, formula);
  expect_equal(rep, "Galois map composite", galois_map(ca, x_dim, m).matrix, formula);
  return rep;
}

/* ---------------- the Hopf module coring ---------------- */

Coring hopf_module_coring(const ComoduleAlgebra& ca, const ModuleCoalgebra& z) {
  const Field& f = ca.A.field();
  const Algebra& A = ca.A;
  const std::size_t nh = hdim(ca), na = A.dim(), nz = z.Z.dim();
  const std::size_t n = nz * na;
  /* a·(z⊗a') = a_{-1}z ⊗ a_0 a' */
  Matrix left = kron(z.action, A.mult()) * swap_middle(f, nh, na, nz, na) * kron({ca.nu, eye(f, nz), eye(f, na)});
  std::vector<Matrix> lops, rops;
  for (std::size_t a = 0; a < na; ++a) {
    lops.push_back(left.block(0, a * n, n, n));
    rops.push_back(kron(eye(f, nz), A.right_mult(a)));
  }
  Bimodule carrier(A, A, lops, rops);
  TensorProduct sq = tensor_over(carrier, carrier);
  /* z⊗a ↦ (z1⊗1)⊗(z2⊗a) */
  Matrix flat = swap_middle(f, nz, nz, na, na) * kron({z.Z.comult(), A.unit(), eye(f, na)});
  Matrix eps = kron(z.Z.counit(), eye(f, na));
  return make_coring(carrier, sq.projection * flat, eps);
}

CoringComodule dk_as_coring_comodule(const Coring& e, const DKHopfModule& n) {
  const Field& f = n.data.A.field();
  const std::size_t nz = n.Z.Z.dim();
  if (e.carrier.dim() != nz * n.data.A.dim()) throw Error(ErrorKind::ShapeMismatch, "coring is not Z⊗A");
  Bimodule mod = n.module();
  TensorProduct ext = tensor_over(e.carrier, mod);
  Matrix flat = kron({eye(f, nz), n.data.A.unit(), eye(f, n.dim)}) * n.coaction;
  return make_comodule(e, mod, ext.projection * flat);
}

BimoduleMap chi_colax(const ComoduleAlgebra& ca, const Coalgebra& c) {
  const Field& f = ca.A.field();
  const Algebra& A = ca.A;
  const std::size_t nh = hdim(ca), na = A.dim(), nc = c.dim();
  ExtensionData ext = make_extension(ca.base);
  Coring d = lift_coalgebra_to_coring(c, ca.base.sub);
  TensorProduct hd = tensor_over(ext.a_ab, d.carrier);
  Coring e = hopf_module_coring(ca, free_module_coalgebra(ca.H, c));
  /* a⊗c⊗b ↦ (a_{-1}⊗c)⊗a_0 b */
  Matrix flat = kron({eye(f, nh), eye(f, nc), A.mult()}) * swap_middle(f, nh, na, nc, na) *
                kron({ca.nu, eye(f, nc), ca.base.embed});
  return {hd.result, restrict_right(e.carrier, ca.base), induce_on_quotient(hd, flat)};
}

CheckReport check_hopf_colax(const ComoduleAlgebra& ca, const Coalgebra& c) {
  CheckReport rep;
  const Field& f = ca.A.field();
  const Algebra& A = ca.A;
  const std::size_t na = A.dim(), nc = c.dim();
  ExtensionData ext = make_extension(ca.base);
  ConjugateCoring cc = conjugate_coring(ext, lift_coalgebra_to_coring(c, ca.base.sub));
  Coring e = hopf_module_coring(ca, free_module_coalgebra(ca.H, c));
  append(rep, check_coring(e), "Hopf module coring ");
  BimoduleMap sigma = chi_colax(ca, c);
  append(rep, check_bimodule_map(sigma), "χ ");
  append(rep, check_colax(cc, e, sigma), "χ ");
  if (!rep.empty()) return rep;
  CoringMorphism rho = universal_factor(cc, e, sigma);
  append(rep, check_coring_morphism(rho), "universal factor ");
  LinearOperator hop = hopf_operator(ca, nc, forget_right(regular_bimodule(A)));
  /* A⊗_B(C⊗B)⊗_B A ≅ A⊗_B(C⊗A): a⊗c⊗b⊗a' ↦ a⊗c⊗ba' */
  Matrix iso_flat = kron({eye(f, na), eye(f, nc), A.mult() * kron(ca.base.embed, eye(f, na))});
  Matrix iso = induce(cc.chain, iso_flat, hop.domain);
  expect_equal(rep, "universal factor equals the Hopf operator", rho.map, hop.matrix * iso);
  if (!universal_factor_unique(cc, e)) rep.push_back({"universal factor unique", {}});
  return rep;
}

/* ---------------- Hopf algebra specifics ---------------- */

Matrix coinv_projector(const HopfAlgebra& h, const DKHopfModule& n) {
  const Field& f = h.bialg.field();
  if (!(n.data.A == h.bialg.alg) || n.Z.Z.dim() != h.bialg.dim())
    throw Error(ErrorKind::ShapeMismatch, "coinvariant projector needs a Hopf module over H");
  return n.action * kron(h.antipode, eye(f, n.dim)) * n.coaction;
}

Algebra smash_product(const ComoduleAlgebra& ca) {
  const Field& f = ca.A.field();
  const Algebra& A = ca.A;
  const Algebra& Hm = ca.H.alg;
  const Coalgebra& Hc = ca.H.coalg;
  const std::size_t na = A.dim(), nh = hdim(ca), n = na * nh;
  auto nu = [&](std::size_t p, std::size_t a2, std::size_t b) -> const Scalar& { return ca.nu(p * na + a2, b); };
  /* f_q f_r = Σ_h Δ[h][r][q] f_h */
  Matrix dual_mult(f, nh, nh * nh);
  for (std::size_t q = 0; q < nh; ++q)
    for (std::size_t r = 0; r < nh; ++r)
      for (std::size_t h = 0; h < nh; ++h) dual_mult.set(h, q * nh + r, Hc.coeff(h, r, q));
  Matrix mult(f, n, n * n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nh; ++j)
      for (std::size_t b = 0; b < na; ++b)
        for (std::size_t r = 0; r < nh; ++r) {
          const std::size_t col = (i * nh + j) * n + (b * nh + r);
          for (std::size_t p = 0; p < nh; ++p)
            for (std::size_t q = 0; q < nh; ++q) {
              const Scalar& mpq = Hm.coeff(p, q, j);
              if (sgn(mpq) == 0) continue;
              for (std::size_t a2 = 0; a2 < na; ++a2) {
                const Scalar& v = nu(p, a2, b);
                if (sgn(v) == 0) continue;
                Scalar w = mpq * v;
                for (std::size_t a3 = 0; a3 < na; ++a3) {
                  const Scalar& ia = A.coeff(i, a2, a3);
                  if (sgn(ia) == 0) continue;
                  for (std::size_t h = 0; h < nh; ++h) {
                    const Scalar& qr = dual_mult(h, q * nh + r);
                    if (sgn(qr) == 0) continue;
                    mult.accumulate(a3 * nh + h, col, w * ia * qr);
                  }
                }
              }
            }
        }
  Matrix unit = kron(A.unit(), Hc.counit().transpose());
  return Algebra(f, mult, unit);
}

SmashToEnd smash_to_end(const ComoduleAlgebra& ca) {
  const Field& f = ca.A.field();
  const Algebra& A = ca.A;
  const std::size_t na = A.dim(), nh = hdim(ca);
  SmashToEnd out;
  out.smash = smash_product(ca);
  /* X R_b = R_b X for every b in B, unknowns vec(X) row-major */
  const std::size_t nb = ca.base.sub.dim();
  Matrix sys(f, nb * na * na, na * na);
  for (std::size_t b = 0; b < nb; ++b) {
    Matrix rb = A.right_mult_by(ca.base.embed.col(b));
    for (std::size_t r = 0; r < na; ++r)
      for (std::size_t c = 0; c < na; ++c) {
        const std::size_t row = (b * na + r) * na + c;
        for (std::size_t k = 0; k < na; ++k) {
          sys.accumulate(row, r * na + k, rb(k, c));
          sys.accumulate(row, k * na + c, -rb(r, k));
        }
      }
  }
  out.end_basis = kernel_matrix(sys);
  std::vector<Matrix> images;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nh; ++j) {
      Matrix fj(f, na, na);
      for (std::size_t a2 = 0; a2 < na; ++a2)
        for (std::size_t b = 0; b < na; ++b) fj.set(a2, b, ca.nu(j * na + a2, b));
      images.push_back(A.left_mult(i) * fj);
    }
  auto vec = [&](const Matrix& m) {
    Matrix v(f, na * na, 1);
    for (std::size_t r = 0; r < na; ++r)
      for (std::size_t c = 0; c < na; ++c) v.set(r * na + c, 0, m(r, c));
    return v;
  };
  std::vector<Matrix> cols;
  for (const auto& m : images) cols.push_back(vec(m));
  auto coords = solve(out.end_basis, hstack(cols));
  if (!coords) throw Error(ErrorKind::InvalidStructure, "smash product does not act B-linearly");
  out.map = *coords;
  out.multiplicative = true;
  const Algebra& s = out.smash;
  for (std::size_t x = 0; x < s.dim() && out.multiplicative; ++x)
    for (std::size_t y = 0; y < s.dim(); ++y) {
      Matrix xy = s.product(Matrix::unit_vector(f, s.dim(), x), Matrix::unit_vector(f, s.dim(), y));
      Matrix img(f, na, na);
      for (std::size_t t = 0; t < s.dim(); ++t)
        if (sgn(xy(t, 0)) != 0) img = img + images[t].scaled(xy(t, 0));
      if (!(img == images[x] * images[y])) {
        out.multiplicative = false;
        break;
      }
    }
  out.invertible = out.map.rows() == out.map.cols() && is_invertible(out.map);
  return out;
}

/* ---------------- FTHM batch ---------------- */

bool FthmReport::all_bijective() const {
  auto ok = [](const ObjectVerdict& v) { return v.bijective; };
  return std::all_of(units.begin(), units.end(), ok) && std::all_of(counits.begin(), counits.end(), ok);
}

std::optional<std::string> FthmReport::witness() const {
  for (const auto& v : units)
    if (!v.bijective)
      return "unit on " + v.name + " not bijective (dim " + std::to_string(v.dim) + ", image object dim " +
             std::to_string(v.image_dim) + (v.error.empty() ? "" : ", " + v.error) + ")";
  for (const auto& v : counits)
    if (!v.bijective)
      return "counit on " + v.name + " not bijective (dim " + std::to_string(v.dim) + ", image object dim " +
             std::to_string(v.image_dim) + (v.error.empty() ? "" : ", " + v.error) + ")";
  return std::nullopt;
}

std::pair<bool, std::string> certify_free(const ComoduleAlgebra& ca, const std::optional<Matrix>& basis) {
  const Algebra& A = ca.A;
  const Algebra& B = ca.base.sub;
  const Field& f = A.field();
  if (basis) {
    /* columns x_1..x_r of A with A = ⊕ x_i B: the map B^r → A is bijective */
    const Matrix& x = *basis;
    if (x.rows() != A.dim() || x.cols() * B.dim() != A.dim()) return {false, "basis has the wrong size"};
    std::vector<Matrix> cols;
    for (std::size_t i = 0; i < x.cols(); ++i)
      for (std::size_t b = 0; b < B.dim(); ++b) cols.push_back(A.product(x.col(i), ca.base.embed.col(b)));
    if (!is_invertible(hstack(cols))) return {false, "supplied elements are not a right B-basis"};
    return {true, "explicit right B-basis"};
  }
  if (B.dim() == 1) return {true, "B is the ground field"};
  if (f.is_finite()) {
    double count = 1;
    for (std::size_t i = 0; i < B.dim(); ++i) count *= double(f.characteristic());
    if (count <= 65536) {
      std::vector<Scalar> elts = f.elements();
      std::vector<std::size_t> digits(B.dim(), 0);
      for (;;) {
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == elts.size()) digits[pos++] = 0;
        if (pos == digits.size()) break;
        std::vector<Scalar> v;
        for (auto d : digits) v.push_back(elts[d]);
        if (!is_invertible(B.left_mult_by(Matrix::column(f, v))))
          return {false, "B has zero divisors"};
      }
      return {true, "B is a division algebra"};
    }
  }
  return {false, "cannot certify that A is faithfully flat over B"};
}

FthmReport fthm_report(const ComoduleAlgebra& ca, const Coalgebra& c, const std::vector<NamedBC>& unit_family,
                       const std::vector<NamedDK>& counit_family, BatchMode mode,
                       const std::optional<Matrix>& freeness_basis) {
  FthmReport rep;
  auto [free, reason] = certify_free(ca, freeness_basis);
  if (!free) throw Error(ErrorKind::UnsupportedBase, reason);
  rep.free_over_base = free;
  rep.freeness_reason = reason;
  rep.galois = is_invertible(canonical_map(ca).matrix);
  rep.galois_c = is_invertible(galois_map(ca, c.dim(), base_bc_bimodule(ca).module()).matrix);

  rep.units.resize(unit_family.size());
  rep.counits.resize(counit_family.size());
  const long nu = long(unit_family.size()), nc = long(counit_family.size());
  const bool par = mode == BatchMode::Parallel;
#pragma omp parallel for schedule(dynamic) if (par)
  for (long i = 0; i < nu + nc; ++i) {
    ObjectVerdict v;
    try {
      if (i < nu) {
        const auto& [name, m] = unit_family[std::size_t(i)];
        v.name = name;
        v.dim = m.dim;
        Matrix u = adjunction_unit(ca, c, m);
        v.image_dim = u.rows();
        v.bijective = u.rows() == u.cols() && is_invertible(u);
      } else {
        const auto& [name, n] = counit_family[std::size_t(i - nu)];
        v.name = name;
        v.dim = n.dim;
        Matrix e = adjunction_counit(ca, c, n);
        v.image_dim = e.cols();
        v.bijective = e.rows() == e.cols() && is_invertible(e);
      }
    } catch (const Error& err) {
      v.error = err.what();
    }
    if (i < nu)
      rep.units[std::size_t(i)] = std::move(v);
    else
      rep.counits[std::size_t(i - nu)] = std::move(v);
  }
  auto by_name = [](const ObjectVerdict& a, const ObjectVerdict& b) { return a.name < b.name; };
  std::sort(rep.units.begin(), rep.units.end(), by_name);
  std::sort(rep.counits.begin(), rep.counits.end(), by_name);
  return rep;
}

}  // namespace hopfkit
