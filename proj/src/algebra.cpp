#include "hopfkit/algebra.hpp"

#include <map>
#include <mutex>

#include "checks.hpp"

namespace hopfkit {

namespace {

/* Σ x_i ops[i] */
Matrix combination(const Field& f, std::size_t n, const std::vector<Matrix>& ops, const Matrix& x) {
  Matrix out(f, n, n);
  auto& o = out.raw();
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (x(i, 0) == 0) continue;
    const auto& src = ops[i].data();
    for (std::size_t t = 0; t < src.size(); ++t)
      if (src[t] != 0) o[t] += x(i, 0) * src[t];
  }
  out.renormalize();
  return out;
}

}  // namespace

/* ---------------- Algebra ---------------- */

Algebra::Algebra() {
  static const auto empty = std::make_shared<const Data>();
  d_ = empty;
}

Algebra::Algebra(Field f, Matrix mult, Matrix unit) {
  auto d = std::make_shared<Data>();
  d->mult = std::move(mult);
  d->unit = std::move(unit);
  const std::size_t n = d->unit.rows();
  if (!(d->mult.field() == f) || !(d->unit.field() == f)) throw Error(ErrorKind::DimensionMismatch, "algebra field");
  if (d->unit.cols() != 1 || d->mult.rows() != n || d->mult.cols() != n * n)
    throw Error(ErrorKind::DimensionMismatch, "algebra structure shapes");
  for (std::size_t i = 0; i < n; ++i) {
    Matrix l(f, n, n), r(f, n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& a = d->mult(k, i * n + j);
        if (a != 0) l.set(k, j, a);
        const Scalar& b = d->mult(k, j * n + i);
        if (b != 0) r.set(k, j, b);
      }
    d->lmul.push_back(std::move(l));
    d->rmul.push_back(std::move(r));
  }
  d_ = std::move(d);
}

Algebra Algebra::from_tensor(const Field& f, const Tensor3& m, const std::vector<Scalar>& unit) {
  const std::size_t n = unit.size();
  if (n == 0) throw Error(ErrorKind::DimensionMismatch, "algebra of dimension 0");
  Matrix mult(f, n, n * n);
  if (m.size() != n) throw Error(ErrorKind::DimensionMismatch, "multiplication tensor arity");
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw Error(ErrorKind::DimensionMismatch, "multiplication tensor arity");
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j].size() != n) throw Error(ErrorKind::DimensionMismatch, "multiplication tensor arity");
      for (std::size_t k = 0; k < n; ++k) mult.set(k, i * n + j, m[i][j][k]);
    }
  }
  return Algebra(f, mult, Matrix::column(f, unit));
}

Matrix Algebra::product(const Matrix& x, const Matrix& y) const { return d_->mult * kron(x, y); }

Matrix Algebra::left_mult_by(const Matrix& x) const { return combination(field(), dim(), d_->lmul, x); }

Matrix Algebra::right_mult_by(const Matrix& x) const { return combination(field(), dim(), d_->rmul, x); }

bool Algebra::is_ground() const { return dim() == 1 && unit()(0, 0) == 1 && mult()(0, 0) == 1; }

Algebra ground_algebra(const Field& f) {
  /* one shared instance per field keeps equality checks on the pointer fast path */
  static std::mutex lock;
  static std::map<std::uint64_t, Algebra> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto it = cache.find(f.characteristic());
  if (it == cache.end())
    it = cache.emplace(f.characteristic(), Algebra(f, Matrix::identity(f, 1), Matrix::identity(f, 1))).first;
  return it->second;
}

Algebra tensor_algebra(const Algebra& a, const Algebra& b) {
  const Field& f = a.field();
  TensorShape s({a.dim(), b.dim(), a.dim(), b.dim()});
  Permutation swap = factor_permutation(f, s, {0, 2, 1, 3});
  return Algebra(f, kron(a.mult(), b.mult()) * swap, kron(a.unit(), b.unit()));
}

CheckReport check_algebra(const Algebra& a) {
  CheckReport rep;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t q = 0; q < n; ++q) {
          Scalar lhs = 0, rhs = 0;
          for (std::size_t k = 0; k < n; ++k) {
            lhs += a.coeff(i, j, k) * a.coeff(k, l, q);
            rhs += a.coeff(j, l, k) * a.coeff(i, k, q);
          }
          a.field().normalize(lhs);
          a.field().normalize(rhs);
          if (lhs != rhs) rep.push_back({"associativity", {i, j, l, q}});
        }
  Matrix lu = a.left_mult_by(a.unit()), ru = a.right_mult_by(a.unit());
  for (std::size_t i = 0; i < n; ++i) {
    if (!(lu.col(i) == Matrix::unit_vector(a.field(), n, i))) rep.push_back({"left unit", {i}});
    if (!(ru.col(i) == Matrix::unit_vector(a.field(), n, i))) rep.push_back({"right unit", {i}});
  }
  return rep;
}

/* ---------------- inclusions ---------------- */

CheckReport check_inclusion(const AlgebraInclusion& inc) {
  CheckReport rep;
  const Matrix& e = inc.embed;
  if (e.rows() != inc.amb.dim() || e.cols() != inc.sub.dim()) {
    rep.push_back({"embedding shape", {e.rows(), e.cols()}});
    return rep;
  }
  if (rank(e) != e.cols()) rep.push_back({"embedding injective", {}});
  detail::expect_equal(rep, "embedding unital", e * inc.sub.unit(), inc.amb.unit());
  const std::size_t n = inc.sub.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix lhs = e * inc.sub.product(Matrix::unit_vector(inc.sub.field(), n, i), Matrix::unit_vector(inc.sub.field(), n, j));
      Matrix rhs = inc.amb.product(e.col(i), e.col(j));
      if (!(lhs == rhs)) rep.push_back({"embedding multiplicative", {i, j}});
    }
  return rep;
}

AlgebraInclusion identity_inclusion(const Algebra& a) { return {a, a, Matrix::identity(a.field(), a.dim())}; }

AlgebraInclusion unit_inclusion(const Algebra& a) { return {ground_algebra(a.field()), a, a.unit()}; }

AlgebraInclusion subalgebra_from_basis(const Algebra& a, const Matrix& basis) {
  const Field& f = a.field();
  const std::size_t r = basis.cols();
  if (basis.rows() != a.dim()) throw Error(ErrorKind::DimensionMismatch, "subalgebra basis");
  Matrix products(f, a.dim(), r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Matrix p = a.product(basis.col(i), basis.col(j));
      for (std::size_t k = 0; k < a.dim(); ++k) products.set(k, i * r + j, p(k, 0));
    }
  auto mult = solve(basis, products);
  auto unit = solve(basis, a.unit());
  if (!mult || !unit) throw Error(ErrorKind::InvalidStructure, "span is not a unital subalgebra");
  return {Algebra(f, *mult, *unit), a, basis};
}

/* ---------------- bimodules ---------------- */

Bimodule::Bimodule(Algebra left, Algebra right, std::vector<Matrix> left_ops, std::vector<Matrix> right_ops)
    : left_(std::move(left)), right_(std::move(right)), lops_(std::move(left_ops)), rops_(std::move(right_ops)) {
  if (lops_.size() != left_.dim() || rops_.size() != right_.dim())
    throw Error(ErrorKind::DimensionMismatch, "one action matrix per algebra basis element expected");
  if (!(left_.field() == right_.field())) throw Error(ErrorKind::DimensionMismatch, "bimodule field");
  dim_ = lops_.empty() ? 0 : lops_[0].rows();
  for (const auto* ops : {&lops_, &rops_})
    for (const auto& op : *ops)
      if (op.rows() != dim_ || op.cols() != dim_) throw Error(ErrorKind::DimensionMismatch, "action matrix shape");
}

Matrix Bimodule::left_op_by(const Matrix& x) const { return combination(field(), dim_, lops_, x); }

Matrix Bimodule::right_op_by(const Matrix& x) const { return combination(field(), dim_, rops_, x); }

Matrix Bimodule::left_act() const { return hstack(lops_); }

Matrix Bimodule::right_act() const {
  const std::size_t nb = rops_.size();
  Matrix out(field(), dim_, dim_ * nb);
  for (std::size_t b = 0; b < nb; ++b)
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t m = 0; m < dim_; ++m)
        if (rops_[b](i, m) != 0) out.set(i, m * nb + b, rops_[b](i, m));
  return out;
}

Bimodule regular_bimodule(const Algebra& a) {
  std::vector<Matrix> l, r;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    l.push_back(a.left_mult(i));
    r.push_back(a.right_mult(i));
  }
  return Bimodule(a, a, l, r);
}

Bimodule vector_space(const Field& f, std::size_t n) {
  Algebra k = ground_algebra(f);
  return Bimodule(k, k, {Matrix::identity(f, n)}, {Matrix::identity(f, n)});
}

Bimodule left_module(const Algebra& a, std::size_t dim, const Matrix& act) {
  if (act.rows() != dim || act.cols() != a.dim() * dim) throw Error(ErrorKind::DimensionMismatch, "module action shape");
  std::vector<Matrix> l;
  for (std::size_t i = 0; i < a.dim(); ++i) l.push_back(act.block(0, i * dim, dim, dim));
  Algebra k = ground_algebra(a.field());
  return Bimodule(a, k, l, {Matrix::identity(a.field(), dim)});
}

Bimodule right_module(const Algebra& b, std::size_t dim, const Matrix& act) {
  if (act.rows() != dim || act.cols() != b.dim() * dim) throw Error(ErrorKind::DimensionMismatch, "module action shape");
  std::vector<Matrix> r;
  for (std::size_t j = 0; j < b.dim(); ++j) {
    std::vector<std::size_t> cols;
    for (std::size_t m = 0; m < dim; ++m) cols.push_back(m * b.dim() + j);
    r.push_back(act.select_cols(cols));
  }
  Algebra k = ground_algebra(b.field());
  return Bimodule(k, b, {Matrix::identity(b.field(), dim)}, r);
}

Bimodule restrict_left(const Bimodule& m, const AlgebraInclusion& inc) {
  if (!(m.left_alg() == inc.amb)) throw Error(ErrorKind::AlgebraMismatch, "restriction along a foreign inclusion");
  std::vector<Matrix> l;
  for (std::size_t i = 0; i < inc.sub.dim(); ++i) l.push_back(m.left_op_by(inc.embed.col(i)));
  return Bimodule(inc.sub, m.right_alg(), l, m.right_ops());
}

Bimodule restrict_right(const Bimodule& m, const AlgebraInclusion& inc) {
  if (!(m.right_alg() == inc.amb)) throw Error(ErrorKind::AlgebraMismatch, "restriction along a foreign inclusion");
  std::vector<Matrix> r;
  for (std::size_t i = 0; i < inc.sub.dim(); ++i) r.push_back(m.right_op_by(inc.embed.col(i)));
  return Bimodule(m.left_alg(), inc.sub, m.left_ops(), r);
}

Bimodule forget_left(const Bimodule& m) { return restrict_left(m, unit_inclusion(m.left_alg())); }
Bimodule forget_right(const Bimodule& m) { return restrict_right(m, unit_inclusion(m.right_alg())); }

Bimodule scalar_extend_left(std::size_t x_dim, const Bimodule& m) {
  Matrix ix = Matrix::identity(m.field(), x_dim);
  std::vector<Matrix> l, r;
  for (const auto& op : m.left_ops()) l.push_back(kron(ix, op));
  for (const auto& op : m.right_ops()) r.push_back(kron(ix, op));
  return Bimodule(m.left_alg(), m.right_alg(), l, r);
}

Bimodule sub_bimodule(const Bimodule& m, const Matrix& basis) {
  std::vector<Matrix> l, r;
  for (const auto& op : m.left_ops()) {
    auto x = solve(basis, op * basis);
    if (!x) throw Error(ErrorKind::InvalidStructure, "subspace is not stable under the left action");
    l.push_back(*x);
  }
  for (const auto& op : m.right_ops()) {
    auto x = solve(basis, op * basis);
    if (!x) throw Error(ErrorKind::InvalidStructure, "subspace is not stable under the right action");
    r.push_back(*x);
  }
  if (basis.cols() == 0) {
    l.assign(m.left_alg().dim(), Matrix(m.field(), 0, 0));
    r.assign(m.right_alg().dim(), Matrix(m.field(), 0, 0));
  }
  return Bimodule(m.left_alg(), m.right_alg(), l, r);
}

CheckReport check_bimodule(const Bimodule& m) {
  CheckReport rep;
  const Field& f = m.field();
  const Algebra& A = m.left_alg();
  const Algebra& B = m.right_alg();
  Matrix id = Matrix::identity(f, m.dim());
  detail::expect_equal(rep, "left unital", m.left_op_by(A.unit()), id);
  detail::expect_equal(rep, "right unital", m.right_op_by(B.unit()), id);
  for (std::size_t a = 0; a < A.dim(); ++a)
    for (std::size_t b = 0; b < A.dim(); ++b) {
      Matrix prod = A.product(Matrix::unit_vector(f, A.dim(), a), Matrix::unit_vector(f, A.dim(), b));
      if (!(m.left_op(a) * m.left_op(b) == m.left_op_by(prod))) rep.push_back({"left associative", {a, b}});
    }
  for (std::size_t a = 0; a < B.dim(); ++a)
    for (std::size_t b = 0; b < B.dim(); ++b) {
      Matrix prod = B.product(Matrix::unit_vector(f, B.dim(), a), Matrix::unit_vector(f, B.dim(), b));
      if (!(m.right_op(b) * m.right_op(a) == m.right_op_by(prod))) rep.push_back({"right associative", {a, b}});
    }
  for (std::size_t a = 0; a < A.dim(); ++a)
    for (std::size_t b = 0; b < B.dim(); ++b)
      if (!(m.left_op(a) * m.right_op(b) == m.right_op(b) * m.left_op(a))) rep.push_back({"actions commute", {a, b}});
  return rep;
}

bool same_bimodule(const Bimodule& a, const Bimodule& b) {
  return a.left_alg() == b.left_alg() && a.right_alg() == b.right_alg() && a.dim() == b.dim() &&
         a.left_ops() == b.left_ops() && a.right_ops() == b.right_ops();
}

CheckReport check_bimodule_map(const BimoduleMap& f) {
  CheckReport rep;
  if (f.matrix.rows() != f.dst.dim() || f.matrix.cols() != f.src.dim()) {
    rep.push_back({"map shape", {f.matrix.rows(), f.matrix.cols()}});
    return rep;
  }
  if (!(f.src.left_alg() == f.dst.left_alg()) || !(f.src.right_alg() == f.dst.right_alg())) {
    rep.push_back({"algebras agree", {}});
    return rep;
  }
  for (std::size_t a = 0; a < f.src.left_alg().dim(); ++a)
    if (!(f.matrix * f.src.left_op(a) == f.dst.left_op(a) * f.matrix)) rep.push_back({"left linear", {a}});
  for (std::size_t b = 0; b < f.src.right_alg().dim(); ++b)
    if (!(f.matrix * f.src.right_op(b) == f.dst.right_op(b) * f.matrix)) rep.push_back({"right linear", {b}});
  return rep;
}

BimoduleMap compose(const BimoduleMap& g, const BimoduleMap& f) {
  if (!same_bimodule(g.src, f.dst)) throw Error(ErrorKind::ShapeMismatch, "composition of non-composable maps");
  return {f.src, g.dst, g.matrix * f.matrix};
}

BimoduleMap identity_map(const Bimodule& m) { return {m, m, Matrix::identity(m.field(), m.dim())}; }

std::vector<BimoduleMap> bimodule_hom_basis(const Bimodule& p, const Bimodule& q) {
  if (!(p.left_alg() == q.left_alg()) || !(p.right_alg() == q.right_alg()))
    throw Error(ErrorKind::AlgebraMismatch, "hom between bimodules over different algebras");
  const Field& f = p.field();
  const std::size_t np = p.dim(), nq = q.dim();
  std::vector<BimoduleMap> out;
  if (np == 0 || nq == 0) return out;
  std::vector<std::pair<const Matrix*, const Matrix*>> conds;
  for (std::size_t a = 0; a < p.left_alg().dim(); ++a) conds.emplace_back(&p.left_op(a), &q.left_op(a));
  for (std::size_t b = 0; b < p.right_alg().dim(); ++b) conds.emplace_back(&p.right_op(b), &q.right_op(b));
  /* X P_op - Q_op X = 0, unknown X[r][c] at r*np + c. */
  Matrix sys(f, conds.size() * nq * np, nq * np);
  std::size_t row = 0;
  for (auto [pop, qop] : conds)
    for (std::size_t r = 0; r < nq; ++r)
      for (std::size_t c = 0; c < np; ++c, ++row) {
        for (std::size_t k = 0; k < np; ++k)
          if ((*pop)(k, c) != 0) sys.accumulate(row, r * np + k, (*pop)(k, c));
        for (std::size_t k = 0; k < nq; ++k)
          if ((*qop)(r, k) != 0) sys.accumulate(row, k * np + c, -(*qop)(r, k));
      }
  Matrix ker = kernel_matrix(sys);
  for (std::size_t j = 0; j < ker.cols(); ++j) {
    Matrix x(f, nq, np);
    for (std::size_t r = 0; r < nq; ++r)
      for (std::size_t c = 0; c < np; ++c) x.set(r, c, ker(r * np + c, j));
    out.push_back({p, q, x});
  }
  return out;
}

}  // namespace hopfkit
