#include "hopfkit/families.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>

#include "checks.hpp"

namespace hopfkit {

using detail::eye;

namespace {

/* Arithmetic modulo a word-sized prime, used to reject candidates before exact checks. */
struct ModP {
  std::uint64_t p;

  explicit ModP(const Field& f) : p(f.is_finite() ? f.characteristic() : 2147483647ULL) {}

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  }
  std::uint64_t of(const Scalar& s) const {
    mpz_class num = s.get_num(), den = s.get_den();
    std::uint64_t n = mpz_fdiv_ui(num.get_mpz_t(), p);
    std::uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), p);
    if (d == 0) throw Error(ErrorKind::InvalidStructure, "denominator vanishes modulo the filter prime");
    return mul(n, pow(d, p - 2));
  }
};

/* Square matrices modulo p, row-major. */
using MatP = std::vector<std::uint64_t>;

MatP mat_mul(const ModP& m, const MatP& a, const MatP& b, std::size_t n) {
  MatP c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      std::uint64_t x = a[i * n + k];
      if (!x) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] = (c[i * n + j] + m.mul(x, b[k * n + j])) % m.p;
    }
  return c;
}

void axpy(const ModP& m, MatP& y, std::uint64_t a, const MatP& x) {
  if (!a) return;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = (y[i] + m.mul(a, x[i])) % m.p;
}

MatP mod_of(const ModP& m, const Matrix& x) {
  MatP out(x.rows() * x.cols());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) out[r * x.cols() + c] = m.of(x(r, c));
  return out;
}

std::vector<Scalar> coefficient_set(const Field& f, const FamilyOptions& opt) {
  std::vector<Scalar> out;
  for (Scalar s : opt.coeffs.empty() ? std::vector<Scalar>{0, 1} : opt.coeffs) {
    f.normalize(s);
    bool dup = false;
    for (auto& t : out) dup = dup || t == s;
    if (!dup) out.push_back(s);
  }
  return out;
}

std::string member_name(const std::string& prefix, std::size_t n, std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%zu-%05zu", n, i);
  return prefix + buf;
}

std::string label(const FamilyOptions& opt) { return opt.prefix.empty() ? std::string() : opt.prefix + " "; }

std::string skip_note(const std::string& what, std::size_t n, double count) {
  char buf[96];
  std::snprintf(buf, sizeof buf, " dim %zu: %.3g candidates over budget", n, count);
  return what + buf;
}

/* Odometer over digit vectors with digit k below radix[k]. */
template <class Fn>
void for_each_digits(const std::vector<std::size_t>& radix, Fn&& fn) {
  for (auto r : radix)
    if (r == 0) return;
  std::vector<std::size_t> d(radix.size(), 0);
  for (;;) {
    fn(static_cast<const std::vector<std::size_t>&>(d));
    std::size_t pos = radix.size();
    for (;;) {
      if (pos == 0) return;
      --pos;
      if (++d[pos] < radix[pos]) break;
      d[pos] = 0;
    }
  }
}

template <class T>
struct Candidates {
  std::vector<T> items;
  double over = 0;  // nonzero: skipped, with this many raw candidates
};

struct ModuleCandidate {
  Bimodule module;
  std::vector<MatP> ops;  // per basis element, mod p
};

/* Monic minimal polynomial of e_g in a, low degree first (leading 1 omitted). */
std::vector<Scalar> minimal_polynomial(const Algebra& a, std::size_t g) {
  const Field& f = a.field();
  std::vector<Matrix> pows{a.unit()};
  Matrix eg = Matrix::unit_vector(f, a.dim(), g);
  for (;;) {
    Matrix next = a.product(pows.back(), eg);
    if (auto c = solve_particular(hstack(pows), next)) {
      std::vector<Scalar> out;
      for (std::size_t i = 0; i < pows.size(); ++i) out.push_back(-(*c)(i, 0));
      return out;
    }
    pows.push_back(next);
  }
}

/* n×n matrices over coeffs annihilated by the polynomial X^k + Σ low[i] X^i. */
std::vector<std::vector<std::size_t>> roots_of(const ModP& mp, const std::vector<std::uint64_t>& cmod,
                                               const std::vector<std::uint64_t>& low, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  MatP id(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
  for_each_digits(std::vector<std::size_t>(n * n, cmod.size()), [&](const std::vector<std::size_t>& d) {
    MatP x(n * n), pw = id, acc(n * n, 0);
    for (std::size_t e = 0; e < n * n; ++e) x[e] = cmod[d[e]];
    for (std::size_t i = 0; i < low.size(); ++i) {
      axpy(mp, acc, low[i], pw);
      pw = mat_mul(mp, pw, x, n);
    }
    axpy(mp, acc, 1, pw);
    for (auto v : acc)
      if (v) return;
    out.push_back(d);
  });
  return out;
}

/*
 * Left a-modules on k^n whose generator matrices have entries in coeffs. Each
 * generator is first restricted to roots of its minimal polynomial; the
 * remaining relations are checked on the product of those lists.
 */
/*
 * Is the tuple of digit matrices lexicographically least among its conjugates
 * P X_g P^-1? Generators are compared in the given order.
 */
bool least_conjugate(const std::vector<const std::vector<std::size_t>*>& gens, const std::vector<std::size_t>& order,
                     std::size_t n, const std::vector<std::vector<std::size_t>>& perms) {
  for (auto& sigma : perms) {
    int cmp = 0;
    for (std::size_t t = 0; t < order.size() && cmp == 0; ++t) {
      const auto& x = *gens[order[t]];
      for (std::size_t r = 0; r < n && cmp == 0; ++r)
        for (std::size_t c = 0; c < n && cmp == 0; ++c) {
          /* entry (r, c) of the conjugate by σ⁻¹ */
          std::size_t moved = x[sigma[r] * n + sigma[c]], here = x[r * n + c];
          cmp = moved < here ? -1 : moved > here ? 1 : 0;
        }
    }
    if (cmp < 0) return false;
  }
  return true;
}

/* Per generator, the n×n digit matrices annihilated by its minimal polynomial. */
struct GeneratorRoots {
  std::vector<std::vector<std::vector<std::size_t>>> lists;
  double over = 0;

  double product() const {
    double p = 1;
    for (auto& l : lists) p *= double(l.size());
    return p;
  }
};

GeneratorRoots generator_roots(const Algebra& a, const AlgebraWords& w, std::size_t n,
                               const std::vector<Scalar>& coeffs, double budget) {
  const ModP mp(a.field());
  GeneratorRoots out;
  if (!w.generators.empty() && detail::search_size(coeffs.size(), n * n) > budget) {
    out.over = detail::search_size(coeffs.size(), w.generators.size() * n * n);
    return out;
  }
  std::vector<std::uint64_t> cmod;
  for (auto& c : coeffs) cmod.push_back(mp.of(c));
  for (std::size_t g : w.generators) {
    std::vector<std::uint64_t> low;
    for (auto& c : minimal_polynomial(a, g)) low.push_back(mp.of(c));
    out.lists.push_back(roots_of(mp, cmod, low, n));
  }
  return out;
}

Candidates<ModuleCandidate> module_candidates(const Algebra& a, std::size_t n, const std::vector<Scalar>& coeffs,
                                              const AlgebraWords& w, GeneratorRoots gr, double budget,
                                              bool up_to_permutation) {
  const Field& f = a.field();
  const ModP mp(f);
  const std::size_t na = a.dim(), ng = w.generators.size(), nw = w.words.size();
  Candidates<ModuleCandidate> res;
  if (gr.over > 0) {
    res.over = gr.over;
    return res;
  }
  std::vector<std::uint64_t> cmod;
  for (auto& c : coeffs) cmod.push_back(mp.of(c));
  auto& roots = gr.lists;
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> order(ng);
  for (std::size_t g = 0; g < ng; ++g) order[g] = g;
  if (up_to_permutation && ng > 0) {
    std::vector<std::size_t> sigma(n);
    for (std::size_t i = 0; i < n; ++i) sigma[i] = i;
    while (std::next_permutation(sigma.begin(), sigma.end())) perms.push_back(sigma);
    /* the generator with most roots goes first and is cut to orbit representatives */
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return roots[x].size() > roots[y].size(); });
    auto& lead = roots[order[0]];
    std::erase_if(lead, [&](const std::vector<std::size_t>& x) { return !least_conjugate({&x}, {0}, n, perms); });
  }
  std::vector<std::size_t> radix;
  double product = 1;
  for (auto& r : roots) {
    radix.push_back(r.size());
    product *= double(r.size());
  }
  if (product > budget) {
    res.over = product;
    return res;
  }

  std::vector<std::vector<std::uint64_t>> coords(nw, std::vector<std::uint64_t>(na));
  for (std::size_t x = 0; x < nw; ++x)
    for (std::size_t i = 0; i < na; ++i) coords[x][i] = mp.of(w.coords(x, i));
  /* parent[x]: word x without its last letter */
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t x = 0; x < nw; ++x) index[w.words[x]] = x;
  std::vector<std::size_t> parent(nw, 0);
  for (std::size_t x = 1; x < nw; ++x) {
    auto pre = w.words[x];
    pre.pop_back();
    parent[x] = index.at(pre);
  }
  std::vector<std::vector<std::vector<std::uint64_t>>> structure(
      na, std::vector<std::vector<std::uint64_t>>(na, std::vector<std::uint64_t>(na)));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k) structure[i][j][k] = mp.of(a.coeff(i, j, k));

  MatP id(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
  std::vector<const std::vector<std::size_t>*> chosen(ng);
  for_each_digits(radix, [&](const std::vector<std::size_t>& pick) {
    auto digit = [&](std::size_t g, std::size_t e) { return roots[g][pick[g]][e]; };
    for (std::size_t g = 0; g < ng; ++g) chosen[g] = &roots[g][pick[g]];
    if (!perms.empty() && !least_conjugate(chosen, order, n, perms)) return;
    std::vector<MatP> wm(nw);
    wm[0] = id;
    for (std::size_t x = 1; x < nw; ++x) {
      std::size_t g = w.words[x].back();
      MatP gm(n * n);
      for (std::size_t e = 0; e < n * n; ++e) gm[e] = cmod[digit(g, e)];
      wm[x] = mat_mul(mp, wm[parent[x]], gm, n);
    }
    std::vector<MatP> ops(na, MatP(n * n, 0));
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t x = 0; x < nw; ++x) axpy(mp, ops[i], coords[x][i], wm[x]);
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < na; ++j) {
        MatP lhs = mat_mul(mp, ops[i], ops[j], n);
        MatP rhs(n * n, 0);
        for (std::size_t k = 0; k < na; ++k) axpy(mp, rhs, structure[i][j][k], ops[k]);
        if (lhs != rhs) return;
      }
    /* exact construction and validation */
    std::vector<Matrix> gens;
    for (std::size_t g = 0; g < ng; ++g) {
      Matrix gm(f, n, n);
      for (std::size_t e = 0; e < n * n; ++e) gm.set(e / n, e % n, coeffs[digit(g, e)]);
      gens.push_back(gm);
    }
    std::vector<Matrix> we(nw);
    we[0] = eye(f, n);
    for (std::size_t x = 1; x < nw; ++x) we[x] = we[parent[x]] * gens[w.words[x].back()];
    Matrix act(f, n, na * n);
    for (std::size_t i = 0; i < na; ++i) {
      Matrix op(f, n, n);
      for (std::size_t x = 0; x < nw; ++x)
        if (sgn(w.coords(x, i)) != 0) op = op + we[x].scaled(w.coords(x, i));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) act.set(r, i * n + c, op(r, c));
    }
    Bimodule mod = left_module(a, n, act);
    if (check_bimodule(mod).empty()) res.items.push_back({mod, ops});
  });
  return res;
}

struct ComoduleCandidate {
  Comodule comodule;
  std::vector<MatP> blocks;  // Z_j mod p
};

/*
 * The dual algebra: e^k e^j = Σ_i Δ[i; j,k] e^i with unit ε, so that
 * ρ(m) = Σ_j e_j ⊗ Z_j m is a comodule exactly when e^j ↦ Z_j is a module.
 */
Algebra dual_algebra(const Coalgebra& c) {
  const Field& f = c.field();
  const std::size_t nc = c.dim();
  Matrix mult(f, nc, nc * nc), unit(f, nc, 1);
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nc; ++j)
      for (std::size_t k = 0; k < nc; ++k) mult.set(i, k * nc + j, c.coeff(i, j, k));
  for (std::size_t j = 0; j < nc; ++j) unit.set(j, 0, c.counit()(0, j));
  return Algebra(f, mult, unit);
}

struct DualWords {
  Algebra dual;
  AlgebraWords words;
};

DualWords dual_words(const Coalgebra& c) {
  Algebra d = dual_algebra(c);
  return {d, algebra_words(d)};
}

Candidates<ComoduleCandidate> comodule_candidates(const Coalgebra& c, const DualWords& dw, std::size_t n,
                                                  const std::vector<Scalar>& coeffs, GeneratorRoots gr, double budget,
                                                  bool up_to_permutation) {
  const Field& f = c.field();
  const std::size_t nc = c.dim();
  Candidates<ComoduleCandidate> res;
  auto mods = module_candidates(dw.dual, n, coeffs, dw.words, std::move(gr), budget, up_to_permutation);
  res.over = mods.over;
  for (auto& m : mods.items) {
    std::vector<Matrix> ze;
    for (std::size_t j = 0; j < nc; ++j) ze.push_back(m.module.left_act().block(0, j * n, n, n));
    Matrix coaction = vstack(ze);
    bool ok = kron(c.comult(), eye(f, n)) * coaction == kron(eye(f, nc), coaction) * coaction &&
              kron(c.counit(), eye(f, n)) * coaction == eye(f, n);
    if (ok) res.items.push_back({{c, n, coaction}, std::move(m.ops)});
  }
  return res;
}

}  // namespace

AlgebraWords algebra_words(const Algebra& a) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  AlgebraWords out;
  std::vector<Matrix> vecs{a.unit()};
  out.words.push_back({});
  auto spans = [&](const Matrix& v) { return rank(hstack(vecs)) == rank(hstack({hstack(vecs), v})); };
  for (std::size_t i = 0; i < n && vecs.size() < n; ++i) {
    Matrix ei = Matrix::unit_vector(f, n, i);
    if (spans(ei)) continue;
    out.generators.push_back(i);
    /* close the word list under right multiplication by generators */
    for (std::size_t x = 0; x < vecs.size() && vecs.size() < n; ++x)
      for (std::size_t g = 0; g < out.generators.size() && vecs.size() < n; ++g) {
        Matrix v = a.product(vecs[x], Matrix::unit_vector(f, n, out.generators[g]));
        if (spans(v)) continue;
        auto w = out.words[x];
        w.push_back(g);
        vecs.push_back(v);
        out.words.push_back(w);
      }
  }
  if (vecs.size() != n) throw Error(ErrorKind::InvalidStructure, "words do not span the algebra");
  auto inv = inverse(hstack(vecs));
  out.coords = *inv;
  return out;
}

Family<Bimodule> enumerate_modules(const Algebra& a, const FamilyOptions& opt) {
  Family<Bimodule> out;
  std::vector<Scalar> coeffs = coefficient_set(a.field(), opt);
  AlgebraWords w = algebra_words(a);
  for (std::size_t n = 1; n <= opt.max_dim; ++n) {
    auto cands = module_candidates(a, n, coeffs, w, generator_roots(a, w, n, coeffs, opt.budget), opt.budget,
                                   opt.up_to_permutation);
    if (cands.over > 0) out.skipped.push_back(skip_note(label(opt) + "modules", n, cands.over));
    for (std::size_t i = 0; i < cands.items.size(); ++i)
      out.members.emplace_back(member_name(opt.prefix, n, i), std::move(cands.items[i].module));
  }
  return out;
}

Family<Comodule> enumerate_comodules(const Coalgebra& c, const FamilyOptions& opt) {
  Family<Comodule> out;
  std::vector<Scalar> coeffs = coefficient_set(c.field(), opt);
  DualWords dw = dual_words(c);
  for (std::size_t n = 1; n <= opt.max_dim; ++n) {
    auto cands = comodule_candidates(c, dw, n, coeffs, generator_roots(dw.dual, dw.words, n, coeffs, opt.budget),
                                     opt.budget, opt.up_to_permutation);
    if (cands.over > 0) out.skipped.push_back(skip_note(label(opt) + "comodules", n, cands.over));
    for (std::size_t i = 0; i < cands.items.size(); ++i)
      out.members.emplace_back(member_name(opt.prefix, n, i), std::move(cands.items[i].comodule));
  }
  return out;
}

Family<BCBimodule> enumerate_bc_modules(const Algebra& b, const Coalgebra& c, const FamilyOptions& opt) {
  Family<BCBimodule> out;
  const Field& f = b.field();
  const ModP mp(f);
  std::vector<Scalar> coeffs = coefficient_set(f, opt);
  AlgebraWords w = algebra_words(b);
  DualWords dw = dual_words(c);
  for (std::size_t n = 1; n <= opt.max_dim; ++n) {
    /* only one side of a pair may be cut to orbit representatives: the larger one */
    GeneratorRoots rm = generator_roots(b, w, n, coeffs, opt.budget);
    GeneratorRoots rc = generator_roots(dw.dual, dw.words, n, coeffs, opt.budget);
    bool cut_modules = opt.up_to_permutation && rm.product() >= rc.product();
    bool cut_comodules = opt.up_to_permutation && !cut_modules;
    auto mres = module_candidates(b, n, coeffs, w, std::move(rm), opt.budget, cut_modules);
    auto cres = comodule_candidates(c, dw, n, coeffs, std::move(rc), opt.budget, cut_comodules);
    if (mres.over > 0 || cres.over > 0) {
      out.skipped.push_back(skip_note(label(opt) + "(B,C)-modules", n, std::max(mres.over, cres.over)));
      continue;
    }
    auto& mods = mres.items;
    auto& comods = cres.items;
    if (double(mods.size()) * double(comods.size()) > opt.budget) {
      out.skipped.push_back(skip_note(label(opt) + "(B,C)-modules", n, double(mods.size()) * double(comods.size())));
      continue;
    }
    std::size_t idx = 0;
    for (auto& m : mods)
      for (auto& z : comods) {
        bool ok = true;
        for (std::size_t j = 0; ok && j < c.dim(); ++j)
          for (std::size_t i = 0; ok && i < b.dim(); ++i)
            ok = mat_mul(mp, z.blocks[j], m.ops[i], n) == mat_mul(mp, m.ops[i], z.blocks[j], n);
        if (!ok) continue;
        BCBimodule bc{b, c, n, m.module.left_act(), z.comodule.coaction};
        if (check_bc_bimodule(bc).empty()) out.members.emplace_back(member_name(opt.prefix, n, idx++), bc);
      }
  }
  return out;
}

Family<DKHopfModule> enumerate_dk_modules(const ComoduleAlgebra& ca, const ModuleCoalgebra& z,
                                          const FamilyOptions& opt) {
  Family<DKHopfModule> out;
  const Field& f = ca.A.field();
  const ModP mp(f);
  const std::size_t na = ca.A.dim(), nh = ca.H.dim(), nz = z.Z.dim();
  std::vector<Scalar> coeffs = coefficient_set(f, opt);
  AlgebraWords w = algebra_words(ca.A);
  DualWords dw = dual_words(z.Z);
  MatP nu = mod_of(mp, ca.nu), alpha = mod_of(mp, z.action);
  for (std::size_t n = 1; n <= opt.max_dim; ++n) {
    /* only one side of a pair may be cut to orbit representatives: the larger one */
    GeneratorRoots rm = generator_roots(ca.A, w, n, coeffs, opt.budget);
    GeneratorRoots rc = generator_roots(dw.dual, dw.words, n, coeffs, opt.budget);
    bool cut_modules = opt.up_to_permutation && rm.product() >= rc.product();
    bool cut_comodules = opt.up_to_permutation && !cut_modules;
    auto mres = module_candidates(ca.A, n, coeffs, w, std::move(rm), opt.budget, cut_modules);
    auto cres = comodule_candidates(z.Z, dw, n, coeffs, std::move(rc), opt.budget, cut_comodules);
    if (mres.over > 0 || cres.over > 0) {
      out.skipped.push_back(skip_note(label(opt) + "Hopf modules", n, std::max(mres.over, cres.over)));
      continue;
    }
    auto& mods = mres.items;
    auto& comods = cres.items;
    if (double(mods.size()) * double(comods.size()) > opt.budget) {
      out.skipped.push_back(skip_note(label(opt) + "Hopf modules", n, double(mods.size()) * double(comods.size())));
      continue;
    }
    std::size_t idx = 0;
    for (auto& m : mods)
      for (auto& c : comods) {
        /* Z_k L_i = Σ ν[(h,a'),i] α[k; h,j] L_{a'} Z_j */
        bool ok = true;
        for (std::size_t i = 0; ok && i < na; ++i)
          for (std::size_t k = 0; ok && k < nz; ++k) {
            MatP rhs(n * n, 0);
            for (std::size_t h = 0; h < nh; ++h)
              for (std::size_t a2 = 0; a2 < na; ++a2) {
                std::uint64_t v = nu[(h * na + a2) * na + i];
                if (!v) continue;
                for (std::size_t j = 0; j < nz; ++j) {
                  std::uint64_t al = alpha[k * (nh * nz) + h * nz + j];
                  if (!al) continue;
                  axpy(mp, rhs, mp.mul(v, al), mat_mul(mp, m.ops[a2], c.blocks[j], n));
                }
              }
            ok = mat_mul(mp, c.blocks[k], m.ops[i], n) == rhs;
          }
        if (!ok) continue;
        DKHopfModule dk{ca, z, n, m.module.left_act(), c.comodule.coaction};
        if (check_dk_hopf_module(dk).empty()) out.members.emplace_back(member_name(opt.prefix, n, idx++), dk);
      }
  }
  return out;
}

Family<DKHopfModule> induced_family(const ComoduleAlgebra& ca, const Coalgebra& c, const Family<BCBimodule>& m) {
  Family<DKHopfModule> out;
  out.skipped = m.skipped;
  for (auto& [name, bc] : m.members) out.members.emplace_back("A(" + name + ")", functor_A(ca, c, bc));
  return out;
}

}  // namespace hopfkit
