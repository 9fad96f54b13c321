#include "hopfkit/hilbert90.hpp"

#include <deque>

#include "checks.hpp"

namespace hopfkit {

using detail::append;
using detail::expect_equal;
using detail::eye;

/* ---------------- groups and actions ---------------- */

bool GroupPresentation::is_abelian() const {
  for (std::size_t g = 0; g < order; ++g)
    for (std::size_t h = 0; h < order; ++h)
      if (mul(g, h) != mul(h, g)) return false;
  return true;
}

GroupPresentation cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidStructure, "group of order 0");
  GroupPresentation g;
  g.order = n;
  g.identity = 0;
  g.table.assign(n, std::vector<std::size_t>(n));
  g.inverse.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
    g.inverse[i] = (n - i) % n;
  }
  return g;
}

CheckReport check_group(const GroupPresentation& g) {
  CheckReport rep;
  const std::size_t n = g.order;
  if (g.table.size() != n || g.inverse.size() != n || g.identity >= n) {
    rep.push_back({"group table shape", {g.table.size(), g.inverse.size()}});
    return rep;
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (g.table[a].size() != n) {
      rep.push_back({"group table shape", {a}});
      return rep;
    }
    for (std::size_t b = 0; b < n; ++b)
      if (g.table[a][b] >= n) {
        rep.push_back({"group table entry out of range", {a, b}});
        return rep;
      }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (g.mul(g.identity, a) != a || g.mul(a, g.identity) != a) rep.push_back({"identity", {a}});
    if (g.inverse[a] >= n || g.mul(a, g.inverse[a]) != g.identity || g.mul(g.inverse[a], a) != g.identity)
      rep.push_back({"inverse", {a}});
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
          rep.push_back({"associativity", {a, b, c}});
          return rep;
        }
  return rep;
}

CheckReport check_group_action(const GroupAction& act) {
  CheckReport rep = check_group(act.G);
  const Algebra& A = act.A;
  const std::size_t na = A.dim();
  if (!rep.empty()) return rep;
  if (act.maps.size() != act.G.order) {
    rep.push_back({"one map per group element", {act.maps.size()}});
    return rep;
  }
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k)
        if (A.coeff(i, j, k) != A.coeff(j, i, k)) {
          rep.push_back({"algebra commutative", {i, j, k}});
          return rep;
        }
  for (std::size_t g = 0; g < act.G.order; ++g) {
    const Matrix& t = act.maps[g];
    if (t.rows() != na || t.cols() != na) {
      rep.push_back({"map shape", {g}});
      return rep;
    }
    CheckReport one;
    expect_equal(one, "multiplicative", t * A.mult(), A.mult() * kron(t, t));
    expect_equal(one, "unital", t * A.unit(), A.unit());
    for (auto& v : one) {
      v.witness.insert(v.witness.begin(), g);
      rep.push_back(v);
    }
  }
  if (!act.maps[act.G.identity].is_identity()) rep.push_back({"identity acts trivially", {act.G.identity}});
  for (std::size_t g = 0; g < act.G.order; ++g)
    for (std::size_t h = 0; h < act.G.order; ++h)
      if (!(act.maps[g] * act.maps[h] == act.maps[act.G.mul(g, h)])) rep.push_back({"action composes", {g, h}});
  return rep;
}

Matrix fixed_subalgebra(const GroupAction& act) {
  const Field& f = act.A.field();
  std::vector<Matrix> rows;
  for (const auto& t : act.maps) rows.push_back(t - eye(f, act.A.dim()));
  return kernel_matrix(vstack(rows));
}

HopfAlgebra dual_group_hopf(const GroupPresentation& g, const Field& f) {
  const std::size_t n = g.order;
  Tensor3 m(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar(0))));
  Tensor3 d = m;
  std::vector<Scalar> unit(n, Scalar(1)), counit(n, Scalar(0));
  for (std::size_t x = 0; x < n; ++x) {
    m[x][x][x] = 1;
    for (std::size_t y = 0; y < n; ++y) d[g.mul(x, y)][x][y] = 1;
  }
  counit[g.identity] = 1;
  Matrix s(f, n, n);
  for (std::size_t x = 0; x < n; ++x) s.set(g.inverse[x], x, Scalar(1));
  Bialgebra b{Algebra::from_tensor(f, m, unit), Coalgebra::from_tensor(f, d, counit)};
  return {b, s};
}

ComoduleAlgebra action_to_comodule_algebra(const GroupAction& act) {
  if (!act.G.is_abelian())
    throw Error(ErrorKind::InvalidStructure, "ν(a) = Σ δ_g⊗g·a is coassociative only for abelian groups");
  const Field& f = act.A.field();
  const std::size_t na = act.A.dim();
  HopfAlgebra h = dual_group_hopf(act.G, f);
  std::vector<Matrix> blocks;
  for (const auto& t : act.maps) blocks.push_back(t);
  Matrix nu = vstack(blocks);
  if (nu.rows() != act.G.order * na) throw Error(ErrorKind::DimensionMismatch, "action maps");
  return make_comodule_algebra(h.bialg, act.A, nu);
}

/* ---------------- semilinear modules ---------------- */

SemilinearModule regular_semilinear(const GroupAction& act) {
  return {act, forget_right(regular_bimodule(act.A)), act.maps};
}

CheckReport check_semilinear(const SemilinearModule& n) {
  CheckReport rep;
  const Field& f = n.module.field();
  const GroupPresentation& G = n.action.G;
  append(rep, check_bimodule(n.module), "module ");
  if (n.rho.size() != G.order) {
    rep.push_back({"one map per group element", {n.rho.size()}});
    return rep;
  }
  for (std::size_t g = 0; g < G.order; ++g)
    for (std::size_t a = 0; a < n.action.A.dim(); ++a) {
      Matrix ga = n.module.left_op_by(n.action.maps[g].col(a));
      if (!(n.rho[g] * n.module.left_op(a) == ga * n.rho[g])) rep.push_back({"semilinear g(am) = (ga)(gm)", {g, a}});
    }
  expect_equal(rep, "identity acts trivially", n.rho[G.identity], eye(f, n.module.dim()));
  for (std::size_t g = 0; g < G.order; ++g)
    for (std::size_t h = 0; h < G.order; ++h)
      if (!(n.rho[g] * n.rho[h] == n.rho[G.mul(g, h)])) rep.push_back({"action composes", {g, h}});
  return rep;
}

DKHopfModule to_hopf_module(const SemilinearModule& n) {
  ComoduleAlgebra ca = action_to_comodule_algebra(n.action);
  ModuleCoalgebra z = free_module_coalgebra(ca.H, trivial_coalgebra(ca.A.field()));
  return {ca, z, n.module.dim(), n.module.left_act(), vstack(n.rho)};
}

/* ---------------- cocycles ---------------- */

namespace {

Matrix act_on_endo(const SemilinearModule& n, std::size_t g, const Matrix& alpha) {
  return n.rho[g] * alpha * n.rho[n.action.G.inverse[g]];
}

bool same_base(const Cocycle& a, const Cocycle& b) {
  return a.base.rho == b.base.rho && same_bimodule(a.base.module, b.base.module);
}

std::vector<Matrix> endo_basis(const SemilinearModule& n) {
  std::vector<Matrix> out;
  for (auto& m : bimodule_hom_basis(n.module, n.module)) out.push_back(m.matrix);
  return out;
}

Matrix combine(const Field& f, const std::vector<Matrix>& basis, const std::vector<Scalar>& c, std::size_t dim) {
  Matrix out(f, dim, dim);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (sgn(c[i]) != 0) out = out + basis[i].scaled(c[i]);
  return out;
}

std::vector<std::size_t> generators(const GroupPresentation& G) {
  std::vector<std::size_t> gens;
  std::vector<bool> reached(G.order, false);
  reached[G.identity] = true;
  for (std::size_t g = 0; g < G.order; ++g) {
    if (reached[g]) continue;
    gens.push_back(g);
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t x = 0; x < G.order; ++x)
        if (reached[x])
          for (std::size_t s : gens)
            if (!reached[G.mul(x, s)]) reached[G.mul(x, s)] = grew = true;
    }
  }
  return gens;
}

/* Extends values on generators via φ(xs) = φ(x)(x·φ(s)); nullopt on inconsistency. */
std::optional<std::vector<Matrix>> extend_cocycle(const SemilinearModule& n, const std::vector<std::size_t>& gens,
                                                  const std::vector<Matrix>& on_gens) {
  const GroupPresentation& G = n.action.G;
  const Field& f = n.module.field();
  std::vector<std::optional<Matrix>> val(G.order);
  val[G.identity] = eye(f, n.module.dim());
  std::deque<std::size_t> queue{G.identity};
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::size_t y = G.mul(x, gens[i]);
      Matrix v = *val[x] * act_on_endo(n, x, on_gens[i]);
      if (val[y]) {
        if (!(*val[y] == v)) return std::nullopt;
      } else {
        val[y] = v;
        queue.push_back(y);
      }
    }
  }
  std::vector<Matrix> out;
  for (auto& v : val) out.push_back(*v);
  return out;
}

std::vector<Cocycle> enumerate_cocycles(const SemilinearModule& n, const std::vector<Matrix>& pool) {
  std::vector<Cocycle> out;
  std::vector<std::size_t> gens = generators(n.action.G);
  std::vector<std::size_t> idx(gens.size(), 0);
  if (pool.empty()) return out;
  for (;;) {
    std::vector<Matrix> on_gens;
    for (auto i : idx) on_gens.push_back(pool[i]);
    if (auto vals = extend_cocycle(n, gens, on_gens)) {
      Cocycle c{n, *vals};
      if (check_cocycle(c).empty()) out.push_back(std::move(c));
    }
    std::size_t pos = idx.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < pool.size()) break;
      idx[pos] = 0;
      if (pos == 0) return out;
    }
    if (idx.empty()) return out;
  }
}

}  // namespace

CheckReport check_cocycle(const Cocycle& phi) {
  CheckReport rep;
  const SemilinearModule& n = phi.base;
  const GroupPresentation& G = n.action.G;
  const Field& f = n.module.field();
  if (phi.values.size() != G.order) {
    rep.push_back({"one value per group element", {phi.values.size()}});
    return rep;
  }
  for (std::size_t g = 0; g < G.order; ++g) {
    const Matrix& v = phi.values[g];
    if (v.rows() != n.module.dim() || v.cols() != n.module.dim()) {
      rep.push_back({"value shape", {g}});
      return rep;
    }
    for (std::size_t a = 0; a < n.action.A.dim(); ++a)
      if (!(v * n.module.left_op(a) == n.module.left_op(a) * v)) {
        rep.push_back({"value A-linear", {g, a}});
        break;
      }
    if (!is_invertible(v)) rep.push_back({"value invertible", {g}});
  }
  expect_equal(rep, "φ(1) = id", phi.values[G.identity], eye(f, n.module.dim()));
  for (std::size_t x = 0; x < G.order; ++x)
    for (std::size_t y = 0; y < G.order; ++y)
      if (!(phi.values[G.mul(x, y)] == phi.values[x] * act_on_endo(n, x, phi.values[y])))
        rep.push_back({"cocycle φ(fg) = φ(f)(f·φ(g))", {x, y}});
  return rep;
}

Cocycle trivial_cocycle(const SemilinearModule& n) {
  return {n, std::vector<Matrix>(n.action.G.order, eye(n.module.field(), n.module.dim()))};
}

SemilinearModule twist(const Cocycle& phi) {
  SemilinearModule out = phi.base;
  for (std::size_t g = 0; g < out.rho.size(); ++g) out.rho[g] = phi.values.at(g) * phi.base.rho[g];
  return out;
}

DKHopfModule twisted_hopf_module(const Cocycle& phi) { return to_hopf_module(twist(phi)); }

Cocycle untwist(const SemilinearModule& twisted, const SemilinearModule& base) {
  Cocycle out{base, {}};
  const GroupPresentation& G = base.action.G;
  for (std::size_t g = 0; g < G.order; ++g) out.values.push_back(twisted.rho[g] * base.rho[G.inverse[g]]);
  return out;
}

std::vector<Matrix> automorphism_pool(const SemilinearModule& n) {
  const Field& f = n.module.field();
  if (!f.is_finite()) throw Error(ErrorKind::PoolNotFinite, "Aut_A(N) is infinite over Q; supply a candidate pool");
  std::vector<Matrix> basis = endo_basis(n);
  if (detail::search_size(f.characteristic(), basis.size()) > 1e6)
    throw Error(ErrorKind::PoolNotFinite, "Aut_A(N) too large to enumerate");
  std::vector<Matrix> out;
  detail::for_each_vector(f.elements(), basis.size(), [&](const std::vector<Scalar>& c) {
    Matrix m = combine(f, basis, c, n.module.dim());
    if (is_invertible(m)) out.push_back(std::move(m));
    return true;
  });
  return out;
}

std::optional<Matrix> cohomologous(const Cocycle& phi, const Cocycle& psi) {
  if (!same_base(phi, psi)) throw Error(ErrorKind::ShapeMismatch, "cocycles on different modules");
  const SemilinearModule& n = phi.base;
  const Field& f = n.module.field();
  const std::size_t dim = n.module.dim();
  const GroupPresentation& G = n.action.G;
  auto works = [&](const Matrix& alpha) {
    for (std::size_t g = 0; g < G.order; ++g)
      if (!(psi.values[g] * act_on_endo(n, g, alpha) == alpha * phi.values[g])) return false;
    return true;
  };
  if (works(eye(f, dim))) return eye(f, dim);
  std::vector<Matrix> basis = endo_basis(n);
  const std::size_t d = basis.size();
  Matrix sys(f, G.order * dim * dim, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t g = 0; g < G.order; ++g) {
      Matrix r = psi.values[g] * act_on_endo(n, g, basis[i]) - basis[i] * phi.values[g];
      for (std::size_t p = 0; p < dim; ++p)
        for (std::size_t q = 0; q < dim; ++q) sys.set((g * dim + p) * dim + q, i, r(p, q));
    }
  std::vector<Matrix> sol = kernel_basis(sys);
  std::vector<Matrix> alphas;
  for (const auto& s : sol) {
    std::vector<Scalar> c(s.data().begin(), s.data().end());
    alphas.push_back(combine(f, basis, c, dim));
  }
  std::vector<Scalar> coeffs;
  if (f.is_finite()) {
    coeffs = f.elements();
  } else {
    for (long v : {0L, 1L, -1L, 2L, -2L}) coeffs.push_back(Scalar(v));
  }
  if (detail::search_size(coeffs.size(), alphas.size()) > 1e6) {
    /* too many combinations: fall back to the solution basis itself */
    for (const auto& a : alphas)
      if (is_invertible(a)) return a;
    return std::nullopt;
  }
  std::optional<Matrix> found;
  detail::for_each_vector(coeffs, alphas.size(), [&](const std::vector<Scalar>& c) {
    Matrix a = combine(f, alphas, c, dim);
    if (is_invertible(a)) {
      found = a;
      return false;
    }
    return true;
  });
  return found;
}

H1Result h1_classes(const SemilinearModule& n, const std::optional<std::vector<Matrix>>& pool) {
  if (!pool && !n.module.field().is_finite())
    throw Error(ErrorKind::PoolNotFinite, "H^1 over Q needs a declared finite candidate pool");
  std::vector<Matrix> values = pool ? *pool : automorphism_pool(n);
  H1Result out;
  std::vector<Cocycle> all = enumerate_cocycles(n, values);
  out.cocycles = all.size();
  for (auto& c : all) {
    bool placed = false;
    for (auto& cls : out.classes)
      if (cohomologous(cls.representative, c)) {
        ++cls.size;
        placed = true;
        break;
      }
    if (!placed) out.classes.push_back({std::move(c), 1});
  }
  return out;
}

std::optional<Matrix> hopf_module_isomorphism(const DKHopfModule& a, const DKHopfModule& b) {
  const Field& f = a.data.A.field();
  if (a.dim != b.dim || a.coaction.rows() != b.coaction.rows()) return std::nullopt;
  if (!f.is_finite()) throw Error(ErrorKind::PoolNotFinite, "isomorphism search needs a finite field");
  const std::size_t n = a.dim, nz = a.Z.Z.dim();
  Bimodule ma = a.module(), mb = b.module();
  /* L'_a X = X L_a and ζ'X = (I⊗X)ζ, unknowns X(r,c) at r*n+c */
  std::vector<Matrix> blocks;
  auto add_condition = [&](const Matrix& left, const Matrix& right) {
    /* left·X − X·right = 0 */
    Matrix sys(f, n * n, n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t k = 0; k < n; ++k) {
          sys.accumulate(r * n + c, k * n + c, left(r, k));
          sys.accumulate(r * n + c, r * n + k, -right(k, c));
        }
    blocks.push_back(sys);
  };
  for (std::size_t i = 0; i < ma.left_alg().dim(); ++i) add_condition(mb.left_op(i), ma.left_op(i));
  /* colinearity, block by block: ζ'_z X = X ζ_z */
  for (std::size_t z = 0; z < nz; ++z)
    add_condition(b.coaction.block(z * n, 0, n, n), a.coaction.block(z * n, 0, n, n));
  Matrix sys = vstack(blocks);
  std::vector<Matrix> sol = kernel_basis(sys);
  auto unvec = [&](const std::vector<Scalar>& c) {
    Matrix x(f, n, n);
    for (std::size_t i = 0; i < sol.size(); ++i)
      if (sgn(c[i]) != 0)
        for (std::size_t k = 0; k < n * n; ++k) x.accumulate(k / n, k % n, c[i] * sol[i](k, 0));
    return x;
  };
  if (detail::search_size(f.characteristic(), sol.size()) > 1e6)
    throw Error(ErrorKind::PoolNotFinite, "isomorphism search space too large");
  std::optional<Matrix> found;
  detail::for_each_vector(f.elements(), sol.size(), [&](const std::vector<Scalar>& c) {
    Matrix x = unvec(c);
    if (is_invertible(x)) {
      found = x;
      return false;
    }
    return true;
  });
  return found;
}

CheckReport check_groupoid_equivalence(const SemilinearModule& n, const std::optional<std::vector<Matrix>>& pool) {
  CheckReport rep;
  std::vector<Matrix> values = pool ? *pool : automorphism_pool(n);
  std::vector<Cocycle> all = enumerate_cocycles(n, values);
  std::vector<DKHopfModule> twisted;
  for (std::size_t i = 0; i < all.size(); ++i) {
    SemilinearModule t = twist(all[i]);
    append(rep, check_semilinear(t), "twist ");
    DKHopfModule h = to_hopf_module(t);
    append(rep, check_dk_hopf_module(h), "twisted Hopf module ");
    if (!(untwist(t, n).values == all[i].values)) rep.push_back({"untwist recovers the cocycle", {i}});
    twisted.push_back(std::move(h));
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      auto alpha = cohomologous(all[i], all[j]);
      auto iso = hopf_module_isomorphism(twisted[i], twisted[j]);
      if (alpha.has_value() != iso.has_value()) rep.push_back({"cohomologous iff twists isomorphic", {i, j}});
      if (alpha) {
        /* α itself must be a Hopf module isomorphism twist(φ_i) → twist(φ_j) */
        Bimodule mi = twisted[i].module();
        bool ok = is_invertible(*alpha);
        for (std::size_t a = 0; ok && a < mi.left_alg().dim(); ++a)
          ok = *alpha * mi.left_op(a) == twisted[j].module().left_op(a) * *alpha;
        const std::size_t nz = twisted[i].Z.Z.dim();
        ok = ok && kron(eye(n.module.field(), nz), *alpha) * twisted[i].coaction == twisted[j].coaction * *alpha;
        if (!ok) rep.push_back({"witness is a Hopf module isomorphism", {i, j}});
      }
    }
  return rep;
}

}  // namespace hopfkit
