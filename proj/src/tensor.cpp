#include <sstream>

#include "hopfkit/algebra.hpp"

namespace hopfkit {

namespace {

/* Balancing generators of one junction: columns of I ⊗ (R_b ⊗ I - I ⊗ L_b) ⊗ I. */
Matrix junction_relations(const std::vector<Bimodule>& fs, std::size_t t, std::size_t b) {
  const Field& f = fs[0].field();
  std::size_t before = 1, after = 1;
  for (std::size_t i = 0; i < t; ++i) before *= fs[i].dim();
  for (std::size_t i = t + 2; i < fs.size(); ++i) after *= fs[i].dim();
  const Bimodule& P = fs[t];
  const Bimodule& Q = fs[t + 1];
  Matrix mid = kron(P.right_op(b), Matrix::identity(f, Q.dim())) - kron(Matrix::identity(f, P.dim()), Q.left_op(b));
  return kron({Matrix::identity(f, before), mid, Matrix::identity(f, after)});
}

bool has_relations(const std::vector<Bimodule>& fs, std::size_t t) { return !fs[t].right_alg().is_ground(); }

/*
 * The same generators as rows of one matrix, written entry by entry: the row
 * for e_x⊗e_p⊗e_q⊗e_y is (R_b e_p)⊗e_q − e_p⊗(L_b e_q).
 */
void append_relation_rows(Matrix& out, std::size_t& row, const std::vector<Bimodule>& fs, std::size_t t,
                          std::size_t b) {
  std::size_t before = 1, after = 1;
  for (std::size_t i = 0; i < t; ++i) before *= fs[i].dim();
  for (std::size_t i = t + 2; i < fs.size(); ++i) after *= fs[i].dim();
  const std::size_t np = fs[t].dim(), nq = fs[t + 1].dim();
  const Matrix& R = fs[t].right_op(b);
  const Matrix& L = fs[t + 1].left_op(b);
  auto flat = [&](std::size_t x, std::size_t p, std::size_t q, std::size_t y) {
    return ((x * np + p) * nq + q) * after + y;
  };
  auto& d = out.raw();
  const std::size_t oc = out.cols();
  for (std::size_t x = 0; x < before; ++x)
    for (std::size_t p = 0; p < np; ++p)
      for (std::size_t q = 0; q < nq; ++q)
        for (std::size_t y = 0; y < after; ++y, ++row) {
          for (std::size_t p2 = 0; p2 < np; ++p2)
            if (R(p2, p) != 0) d[row * oc + flat(x, p2, q, y)] += R(p2, p);
          for (std::size_t q2 = 0; q2 < nq; ++q2)
            if (L(q2, q) != 0) d[row * oc + flat(x, p, q2, y)] -= L(q2, q);
        }
}

/*
 * Basis indices generating the algebra. The balancing relations of the
 * generators already span those of every element.
 */
std::vector<std::size_t> generating_set(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<std::size_t> gens;
  std::vector<Matrix> span{a.unit()};
  std::size_t r = rank(a.unit());
  auto grow = [&](Matrix v) {
    std::vector<Matrix> trial = span;
    trial.push_back(std::move(v));
    std::size_t rt = rank(hstack(trial));
    if (rt == r) return false;
    span = std::move(trial);
    r = rt;
    return true;
  };
  for (std::size_t b = 0; b < n && r < n; ++b) {
    if (!grow(Matrix::unit_vector(a.field(), n, b))) continue;
    span.pop_back();
    r = rank(hstack(span));
    gens.push_back(b);
    /* close the span under right multiplication by the generators */
    for (std::size_t i = 0; i < span.size() && r < n; ++i)
      for (std::size_t g : gens) grow(a.product(span[i], Matrix::unit_vector(a.field(), n, g)));
  }
  return gens;
}

}  // namespace

Matrix TensorProduct::pure(std::initializer_list<std::size_t> index) const {
  return projection.col(flat_shape.flatten(index));
}

TensorProduct tensor_chain(const std::vector<Bimodule>& factors) {
  if (factors.empty()) throw Error(ErrorKind::DimensionMismatch, "empty tensor chain");
  const Field& f = factors[0].field();
  std::vector<std::size_t> dims;
  for (std::size_t t = 0; t < factors.size(); ++t) {
    dims.push_back(factors[t].dim());
    if (t + 1 < factors.size() && !(factors[t].right_alg() == factors[t + 1].left_alg()))
      throw Error(ErrorKind::AlgebraMismatch, "junction " + std::to_string(t) + ": right algebra of factor " +
                                                  std::to_string(t) + " differs from left algebra of the next");
  }
  TensorProduct tp;
  tp.factors = factors;
  tp.flat_shape = TensorShape(dims);
  const std::size_t n = tp.flat_shape.flat_size();

  /* longer chains are built one factor at a time: (P⊗Q)⊗R */
  if (factors.size() > 2 && n > 0) {
    TensorProduct inner = tensor_chain(std::vector<Bimodule>(factors.begin(), factors.end() - 1));
    TensorProduct outer = tensor_chain({inner.result, factors.back()});
    const std::size_t nl = factors.back().dim();
    tp.projection = times_kron_identity(outer.projection, inner.projection, nl);
    tp.section = kron_identity_times(inner.section, nl, outer.section);
    tp.result = outer.result;
    return tp;
  }

  std::vector<std::pair<std::size_t, std::size_t>> junctions;  // (t, b)
  for (std::size_t t = 0; t + 1 < factors.size(); ++t) {
    if (!has_relations(factors, t)) continue;
    for (std::size_t b : generating_set(factors[t].right_alg())) junctions.emplace_back(t, b);
  }
  const bool plain = junctions.empty();
  if (plain || n == 0) {
    tp.projection = Matrix::identity(f, n);
    tp.section = Matrix::identity(f, n);
  } else {
    Matrix rel(f, junctions.size() * n, n);
    std::size_t row = 0;
    for (auto [t, b] : junctions) append_relation_rows(rel, row, factors, t, b);
    rel.renormalize();
    RowEchelon e = rref(rel);
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    std::vector<std::size_t> pos(n, 0);
    for (std::size_t j = 0; j < n; ++j)
      if (!is_pivot[j]) {
        pos[j] = free.size();
        free.push_back(j);
      }
    tp.projection = Matrix(f, free.size(), n);
    tp.section = Matrix(f, n, free.size());
    for (std::size_t t = 0; t < free.size(); ++t) {
      tp.projection.set(t, free[t], Scalar(1));
      tp.section.set(free[t], t, Scalar(1));
    }
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      for (std::size_t j : free)
        if (e.reduced(i, j) != 0) tp.projection.set(pos[j], e.pivots[i], -e.reduced(i, j));
  }

  const Bimodule& first = factors.front();
  const Bimodule& last = factors.back();
  std::size_t head = first.dim(), tail = last.dim();
  std::size_t rest_after_first = head ? n / head : 0, rest_before_last = tail ? n / tail : 0;
  std::vector<Matrix> l, r;
  const Matrix id_after = Matrix::identity(f, rest_after_first), id_before = Matrix::identity(f, rest_before_last);
  for (const auto& op : first.left_ops())
    l.push_back(plain ? kron(op, id_after) : tp.projection * kron_identity_times(op, rest_after_first, tp.section));
  for (const auto& op : last.right_ops())
    r.push_back(plain ? kron(id_before, op) : tp.projection * identity_kron_times(rest_before_last, op, tp.section));
  if (n == 0) {
    l.assign(first.left_alg().dim(), Matrix(f, 0, 0));
    r.assign(last.right_alg().dim(), Matrix(f, 0, 0));
  }
  tp.result = Bimodule(first.left_alg(), last.right_alg(), l, r);
  return tp;
}

TensorProduct tensor_over(const Bimodule& p, const Bimodule& q) { return tensor_chain({p, q}); }

bool has_balancing_relations(const std::vector<Bimodule>& factors) {
  for (std::size_t t = 0; t + 1 < factors.size(); ++t)
    if (has_relations(factors, t) && !generating_set(factors[t].right_alg()).empty()) return true;
  return false;
}

namespace {

[[noreturn]] void report_unbalanced(const TensorProduct& src, const Matrix& g) {
  const auto& fs = src.factors;
  for (std::size_t t = 0; t + 1 < fs.size(); ++t) {
    if (!has_relations(fs, t)) continue;
    for (std::size_t b = 0; b < fs[t].right_alg().dim(); ++b) {
      Matrix rel = junction_relations(fs, t, b);
      Matrix img = g * rel;
      for (std::size_t c = 0; c < img.cols(); ++c) {
        bool zero = true;
        for (std::size_t r = 0; r < img.rows() && zero; ++r) zero = img(r, c) == 0;
        if (zero) continue;
        std::ostringstream os;
        os << "map does not vanish on the balancing generator at junction " << t << ", base element " << b
           << ", flat index (";
        auto idx = src.flat_shape.unflatten(c);
        for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
        os << ")";
        throw Error(ErrorKind::NotBalanced, os.str());
      }
    }
  }
  throw Error(ErrorKind::NotBalanced, "map does not factor through the tensor product");
}

}  // namespace

Matrix induce_on_quotient(const TensorProduct& src, const Matrix& f) {
  if (f.cols() != src.flat_dim())
    throw Error(ErrorKind::DimensionMismatch, "flat map has " + std::to_string(f.cols()) + " columns, expected " +
                                                  std::to_string(src.flat_dim()));
  Matrix fs = f * src.section;
  if (src.projection.rows() != src.flat_dim() && !(fs * src.projection == f)) report_unbalanced(src, f);
  return fs;
}

Matrix induce(const TensorProduct& src, const Matrix& f, const TensorProduct& dst) {
  if (f.rows() != dst.flat_dim())
    throw Error(ErrorKind::DimensionMismatch, "flat map has " + std::to_string(f.rows()) + " rows, expected " +
                                                  std::to_string(dst.flat_dim()));
  return induce_on_quotient(src, dst.projection * f);
}

Matrix tensor_maps(const TensorProduct& src, const std::vector<Matrix>& maps, const TensorProduct& dst) {
  if (maps.size() != src.factors.size() || maps.size() != dst.factors.size())
    throw Error(ErrorKind::ShapeMismatch, "tensor_maps arity");
  return induce(src, kron(maps), dst);
}

}  // namespace hopfkit
