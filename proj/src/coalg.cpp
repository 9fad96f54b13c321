#include "hopfkit/coalg.hpp"

namespace hopfkit {

namespace {

Matrix eye(const Field& f, std::size_t n) { return Matrix::identity(f, n); }

/* Columns of a and b that differ, as witnesses. */
void compare_columns(CheckReport& rep, const std::string& axiom, const Matrix& a, const Matrix& b) {
  for (std::size_t c = 0; c < a.cols(); ++c)
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (a(r, c) != b(r, c)) {
        rep.push_back({axiom, {c, r}});
        break;
      }
}

Permutation middle_swap(const Field& f, std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  return factor_permutation(f, TensorShape({a, b, c, d}), {0, 2, 1, 3});
}

}  // namespace

Coalgebra::Coalgebra(Matrix comult, Matrix counit) : comult_(std::move(comult)), counit_(std::move(counit)) {
  const std::size_t n = counit_.cols();
  if (counit_.rows() != 1 || comult_.rows() != n * n || comult_.cols() != n)
    throw Error(ErrorKind::DimensionMismatch, "coalgebra structure shapes");
}

Coalgebra Coalgebra::from_tensor(const Field& f, const Tensor3& d, const std::vector<Scalar>& counit) {
  const std::size_t n = counit.size();
  if (n == 0) throw Error(ErrorKind::DimensionMismatch, "coalgebra of dimension 0");
  Matrix comult(f, n * n, n);
  if (d.size() != n) throw Error(ErrorKind::DimensionMismatch, "comultiplication tensor arity");
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i].size() != n) throw Error(ErrorKind::DimensionMismatch, "comultiplication tensor arity");
    for (std::size_t j = 0; j < n; ++j) {
      if (d[i][j].size() != n) throw Error(ErrorKind::DimensionMismatch, "comultiplication tensor arity");
      for (std::size_t k = 0; k < n; ++k) comult.set(j * n + k, i, d[i][j][k]);
    }
  }
  Matrix eps(f, 1, n);
  for (std::size_t i = 0; i < n; ++i) eps.set(0, i, counit[i]);
  return Coalgebra(comult, eps);
}

Coalgebra trivial_coalgebra(const Field& f) { return Coalgebra(eye(f, 1), eye(f, 1)); }

Coalgebra grouplike_coalgebra(const Field& f, std::size_t n) {
  Matrix d(f, n * n, n), e(f, 1, n);
  for (std::size_t i = 0; i < n; ++i) {
    d.set(i * n + i, i, Scalar(1));
    e.set(0, i, Scalar(1));
  }
  return Coalgebra(d, e);
}

Coalgebra tensor_coalgebra(const Coalgebra& c, const Coalgebra& d) {
  const Field& f = c.field();
  Matrix swap = middle_swap(f, c.dim(), c.dim(), d.dim(), d.dim());
  return Coalgebra(swap * kron(c.comult(), d.comult()), kron(c.counit(), d.counit()));
}

CheckReport check_coalgebra(const Coalgebra& c) {
  CheckReport rep;
  const Field& f = c.field();
  const std::size_t n = c.dim();
  Matrix lhs = kron(c.comult(), eye(f, n)) * c.comult();
  Matrix rhs = kron(eye(f, n), c.comult()) * c.comult();
  compare_columns(rep, "coassociativity", lhs, rhs);
  compare_columns(rep, "left counit", kron(c.counit(), eye(f, n)) * c.comult(), eye(f, n));
  compare_columns(rep, "right counit", kron(eye(f, n), c.counit()) * c.comult(), eye(f, n));
  return rep;
}

CheckReport check_bialgebra(const Bialgebra& h) {
  CheckReport rep = check_algebra(h.alg);
  for (auto& v : check_coalgebra(h.coalg)) rep.push_back(v);
  const Field& f = h.field();
  const std::size_t n = h.dim();
  if (h.coalg.dim() != n || !(h.coalg.field() == f)) {
    rep.push_back({"algebra and coalgebra dimensions agree", {n, h.coalg.dim()}});
    return rep;
  }
  const Matrix& m = h.alg.mult();
  const Matrix& d = h.coalg.comult();
  const Matrix& e = h.coalg.counit();
  Matrix lhs = d * m;
  Matrix rhs = kron(m, m) * middle_swap(f, n, n, n, n) * kron(d, d);
  compare_columns(rep, "comultiplication multiplicative", lhs, rhs);
  compare_columns(rep, "counit multiplicative", e * m, kron(e, e));
  compare_columns(rep, "comultiplication unital", d * h.alg.unit(), kron(h.alg.unit(), h.alg.unit()));
  compare_columns(rep, "counit unital", e * h.alg.unit(), eye(f, 1));
  return rep;
}

CheckReport check_hopf_algebra(const HopfAlgebra& h) {
  CheckReport rep;
  const Field& f = h.bialg.field();
  const std::size_t n = h.bialg.dim();
  const Matrix& S = h.antipode;
  if (S.rows() != n || S.cols() != n) {
    rep.push_back({"antipode shape", {S.rows(), S.cols()}});
    return rep;
  }
  const Matrix& m = h.bialg.alg.mult();
  const Matrix& d = h.bialg.coalg.comult();
  Matrix ie = h.bialg.alg.unit() * h.bialg.coalg.counit();
  compare_columns(rep, "left antipode", m * kron(S, eye(f, n)) * d, ie);
  compare_columns(rep, "right antipode", m * kron(eye(f, n), S) * d, ie);
  compare_columns(rep, "antipode unital", S * h.bialg.alg.unit(), h.bialg.alg.unit());
  compare_columns(rep, "antipode counital", h.bialg.coalg.counit() * S, h.bialg.coalg.counit());
  return rep;
}

std::optional<HopfAlgebra> antipode(const Bialgebra& h) {
  const Field& f = h.field();
  const std::size_t n = h.dim();
  /* rows (h, q), unknown S[r][j] at r*n + j */
  Matrix sys(f, n * n, n * n), rhs(f, n * n, 1);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t q = 0; q < n; ++q) {
      Scalar v = h.coalg.counit()(0, x) * h.alg.unit()(q, 0);
      if (v != 0) rhs.set(x * n + q, 0, v);
    }
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = h.coalg.coeff(x, j, k);
        if (c == 0) continue;
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t q = 0; q < n; ++q) {
            const Scalar& mm = h.alg.coeff(r, k, q);
            if (mm != 0) sys.accumulate(x * n + q, r * n + j, c * mm);
          }
      }
  }
  auto sol = solve_particular(sys, rhs);
  if (!sol) return std::nullopt;
  Matrix S(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < n; ++j) S.set(r, j, (*sol)(r * n + j, 0));
  HopfAlgebra out{h, S};
  if (!check_hopf_algebra(out).empty()) return std::nullopt;
  return out;
}

Matrix coinvariants(const Bialgebra& h, const Algebra& a, const Matrix& nu) {
  Matrix trivial = kron(h.alg.unit(), eye(a.field(), a.dim()));
  return kernel_matrix(nu - trivial);
}

Matrix coinvariants(const ComoduleAlgebra& ca) { return coinvariants(ca.H, ca.A, ca.nu); }

ComoduleAlgebra make_comodule_algebra(const Bialgebra& h, const Algebra& a, const Matrix& nu) {
  if (nu.rows() != h.dim() * a.dim() || nu.cols() != a.dim())
    throw Error(ErrorKind::DimensionMismatch, "coaction shape");
  try {
    return make_comodule_algebra(h, a, nu, subalgebra_from_basis(a, coinvariants(h, a, nu)));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InvalidStructure) throw;
    /* a broken ν need not have a subalgebra of coinvariants; check_comodule_algebra reports why */
    return make_comodule_algebra(h, a, nu, unit_inclusion(a));
  }
}

ComoduleAlgebra make_comodule_algebra(const Bialgebra& h, const Algebra& a, const Matrix& nu,
                                      const AlgebraInclusion& base) {
  if (nu.rows() != h.dim() * a.dim() || nu.cols() != a.dim())
    throw Error(ErrorKind::DimensionMismatch, "coaction shape");
  if (!(base.amb == a)) throw Error(ErrorKind::AlgebraMismatch, "base does not embed into A");
  return {h, a, nu, base};
}

CheckReport check_comodule_algebra(const ComoduleAlgebra& ca) {
  CheckReport rep = check_bialgebra(ca.H);
  for (auto& v : check_algebra(ca.A)) rep.push_back(v);
  const Field& f = ca.A.field();
  const std::size_t nh = ca.H.dim(), na = ca.A.dim();
  const Matrix& nu = ca.nu;
  if (nu.rows() != nh * na || nu.cols() != na) {
    rep.push_back({"coaction shape", {nu.rows(), nu.cols()}});
    return rep;
  }
  Algebra ha = tensor_algebra(ca.H.alg, ca.A);
  compare_columns(rep, "coaction multiplicative", nu * ca.A.mult(), ha.mult() * kron(nu, nu));
  compare_columns(rep, "coaction unital", nu * ca.A.unit(), ha.unit());
  compare_columns(rep, "coaction coassociative", kron(ca.H.coalg.comult(), eye(f, na)) * nu,
                  kron(eye(f, nh), nu) * nu);
  compare_columns(rep, "coaction counital", kron(ca.H.coalg.counit(), eye(f, na)) * nu, eye(f, na));
  for (auto& v : check_inclusion(ca.base)) rep.push_back(v);
  if (!rep.empty()) return rep;
  const Matrix& e = ca.base.embed;
  Matrix trivial = kron(ca.H.alg.unit(), eye(f, na));
  for (std::size_t b = 0; b < e.cols(); ++b) {
    if (!(nu * e.col(b) == trivial * e.col(b))) rep.push_back({"base inside coinvariants", {b}});
    Matrix lb = ca.A.left_mult_by(e.col(b)), rb = ca.A.right_mult_by(e.col(b));
    if (!(nu * lb == kron(eye(f, nh), lb) * nu)) rep.push_back({"coaction left base-linear", {b}});
    if (!(nu * rb == kron(eye(f, nh), rb) * nu)) rep.push_back({"coaction right base-linear", {b}});
  }
  Matrix co = coinvariants(ca);
  for (std::size_t i = 0; i < co.cols(); ++i)
    for (std::size_t j = 0; j < co.cols(); ++j)
      if (!solve_particular(co, ca.A.product(co.col(i), co.col(j)))) rep.push_back({"coinvariants closed", {i, j}});
  if (!solve_particular(co, ca.A.unit())) rep.push_back({"coinvariants contain 1", {}});
  return rep;
}

ModuleCoalgebra free_module_coalgebra(const Bialgebra& h, const Coalgebra& c) {
  const Field& f = h.field();
  Coalgebra z = tensor_coalgebra(h.coalg, c);
  Matrix action = kron(h.alg.mult(), eye(f, c.dim()));
  return {h, z, action};
}

CheckReport check_module_coalgebra(const ModuleCoalgebra& mc) {
  CheckReport rep = check_bialgebra(mc.H);
  for (auto& v : check_coalgebra(mc.Z)) rep.push_back(v);
  const Field& f = mc.H.field();
  const std::size_t nh = mc.H.dim(), nz = mc.Z.dim();
  const Matrix& al = mc.action;
  if (al.rows() != nz || al.cols() != nh * nz) {
    rep.push_back({"action shape", {al.rows(), al.cols()}});
    return rep;
  }
  compare_columns(rep, "action unital", al * kron(mc.H.alg.unit(), eye(f, nz)), eye(f, nz));
  compare_columns(rep, "action associative", al * kron(mc.H.alg.mult(), eye(f, nz)), al * kron(eye(f, nh), al));
  Matrix diag = kron(al, al) * middle_swap(f, nh, nh, nz, nz) * kron(mc.H.coalg.comult(), mc.Z.comult());
  compare_columns(rep, "comultiplication H-linear", mc.Z.comult() * al, diag);
  compare_columns(rep, "counit H-linear", mc.Z.counit() * al, kron(mc.H.coalg.counit(), mc.Z.counit()));
  return rep;
}

ComoduleAlgebra regular_comodule_algebra(const Bialgebra& h) {
  return make_comodule_algebra(h, h.alg, h.coalg.comult());
}

}  // namespace hopfkit
