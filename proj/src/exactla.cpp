#include "hopfkit/exactla.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hopfkit {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NotBalanced: return "NotBalanced";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotColax: return "NotColax";
    case ErrorKind::UnitNotWellDefined: return "UnitNotWellDefined";
    case ErrorKind::UnsupportedBase: return "UnsupportedBase";
    case ErrorKind::PoolNotFinite: return "PoolNotFinite";
    case ErrorKind::InvalidStructure: return "InvalidStructure";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::UnknownName: return "UnknownName";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

std::string format_violation(const Violation& v) {
  std::ostringstream os;
  os << v.axiom << " at (";
  for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? "," : "") << v.witness[i];
  os << ")";
  return os.str();
}

/* ---------------- Field ---------------- */

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::rationals() { return Field(0); }

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  return Field(p);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")"; }

void Field::normalize(Scalar& x) const {
  if (p_ == 0) return;
  mpz_class p(static_cast<unsigned long>(p_));
  if (x.get_den() != 1) {
    mpz_class d = x.get_den();
    mpz_class di;
    if (mpz_invert(di.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t()) == 0)
      throw Error(ErrorKind::InvalidStructure, "denominator not invertible in " + name());
    mpz_class n = x.get_num() * di;
    x = Scalar(n);
  }
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_num_mpz_t(), p.get_mpz_t());
  x = Scalar(r);
}

Scalar Field::from_int(long v) const {
  Scalar x(v);
  normalize(x);
  return x;
}

Scalar Field::inverse(const Scalar& x) const {
  if (x == 0) throw Error(ErrorKind::InvalidStructure, "inverse of zero");
  if (p_ == 0) return Scalar(1) / x;
  mpz_class p(static_cast<unsigned long>(p_)), r;
  mpz_invert(r.get_mpz_t(), x.get_num_mpz_t(), p.get_mpz_t());
  return Scalar(r);
}

Scalar Field::parse(std::string_view text) const {
  std::string s(text);
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty scalar");
  std::size_t slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    return std::all_of(t.begin() + static_cast<long>(i), t.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorKind::ParseError, "malformed scalar \"" + s + "\"");
  if (num[0] == '+') num = num.substr(1);
  mpz_class n(num), d(den);
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in \"" + s + "\"");
  if (p_ != 0 && slash != std::string::npos)
    throw Error(ErrorKind::ParseError, "fraction \"" + s + "\" in " + name());
  Scalar x(n, d);
  x.canonicalize();
  normalize(x);
  return x;
}

std::string Field::format(const Scalar& x) const { return x.get_str(); }

std::vector<Scalar> Field::elements() const {
  if (p_ == 0) throw Error(ErrorKind::PoolNotFinite, "Q has infinitely many elements");
  std::vector<Scalar> out;
  for (std::uint64_t i = 0; i < p_; ++i) out.emplace_back(static_cast<unsigned long>(i));
  return out;
}

/* ---------------- Matrix ---------------- */

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Matrix Matrix::unit_vector(const Field& f, std::size_t n, std::size_t i) {
  if (i >= n) throw Error(ErrorKind::IndexOutOfRange, "unit vector index");
  Matrix m(f, n, 1);
  m.data_[i] = 1;
  return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<std::vector<Scalar>>& rows) {
  std::size_t nr = rows.size(), nc = nr ? rows[0].size() : 0;
  Matrix m(f, nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    if (rows[r].size() != nc) throw Error(ErrorKind::DimensionMismatch, "ragged rows");
    for (std::size_t c = 0; c < nc; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_ints(const Field& f, const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Scalar>> q;
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    for (long v : r) row.emplace_back(v);
    q.push_back(std::move(row));
  }
  return from_rows(f, q);
}

Matrix Matrix::column(const Field& f, const std::vector<Scalar>& entries) {
  Matrix m(f, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
  return m;
}

const Scalar& Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw Error(ErrorKind::IndexOutOfRange, "matrix index");
  return data_[r * cols_ + c];
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (r >= rows_ || c >= cols_) throw Error(ErrorKind::IndexOutOfRange, "matrix index");
  Scalar& x = data_[r * cols_ + c];
  x = v;
  field_.normalize(x);
}

void Matrix::accumulate(std::size_t r, std::size_t c, const Scalar& v) {
  if (r >= rows_ || c >= cols_) throw Error(ErrorKind::IndexOutOfRange, "matrix index");
  Scalar& x = data_[r * cols_ + c];
  x += v;
  field_.normalize(x);
}

void Matrix::renormalize() {
  for (auto& x : data_) field_.normalize(x);
}

Matrix Matrix::col(std::size_t c) const { return select_cols({c}); }
Matrix Matrix::row(std::size_t r) const { return select_rows({r}); }

Matrix Matrix::select_cols(const std::vector<std::size_t>& cs) const {
  Matrix m(field_, rows_, cs.size());
  for (std::size_t j = 0; j < cs.size(); ++j) {
    if (cs[j] >= cols_) throw Error(ErrorKind::IndexOutOfRange, "column index");
    for (std::size_t i = 0; i < rows_; ++i) m.data_[i * cs.size() + j] = data_[i * cols_ + cs[j]];
  }
  return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rs) const {
  Matrix m(field_, rs.size(), cols_);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (rs[i] >= rows_) throw Error(ErrorKind::IndexOutOfRange, "row index");
    std::copy_n(data_.begin() + static_cast<long>(rs[i] * cols_), cols_, m.data_.begin() + static_cast<long>(i * cols_));
  }
  return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorKind::IndexOutOfRange, "block");
  Matrix m(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m.data_[i * nc + j] = data_[(r0 + i) * cols_ + c0 + j];
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x == 0; });
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (data_[i * cols_ + j] != (i == j ? 1 : 0)) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix m(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.data_[j * rows_ + i] = data_[i * cols_ + j];
  return m;
}

static void require_same_shape(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::DimensionMismatch, "field mismatch");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                    std::to_string(b.cols()));
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_shape(*this, o);
  Matrix m(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    m.data_[i] += o.data_[i];
    field_.normalize(m.data_[i]);
  }
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_same_shape(*this, o);
  Matrix m(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    m.data_[i] -= o.data_[i];
    field_.normalize(m.data_[i]);
  }
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m(*this);
  for (auto& x : m.data_) {
    x = -x;
    field_.normalize(x);
  }
  return m;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix m(*this);
  for (auto& x : m.data_) {
    x *= s;
    field_.normalize(x);
  }
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

/* ---------------- kernels ---------------- */

namespace {

/* Small prime fields run on machine words; p < 2^32 keeps products in 64 bits. */
bool word_field(const Field& f) { return f.is_finite() && f.characteristic() < (1ull << 32); }

std::vector<std::uint64_t> to_words(const Matrix& m) {
  std::vector<std::uint64_t> w(m.data().size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = mpz_get_ui(m.data()[i].get_num_mpz_t());
  return w;
}

Matrix from_words(const Field& f, std::size_t r, std::size_t c, const std::vector<std::uint64_t>& w) {
  Matrix m(f, r, c);
  auto& d = m.raw();
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i]) d[i] = static_cast<unsigned long>(w[i]);
  return m;
}

constexpr std::size_t kParallelWork = 1u << 14;

Matrix multiply_impl(const Matrix& a, const Matrix& b, bool parallel) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::DimensionMismatch, "field mismatch");
  if (a.cols() != b.rows())
    throw Error(ErrorKind::DimensionMismatch, "cannot multiply " + std::to_string(a.rows()) + "x" +
                                                  std::to_string(a.cols()) + " by " + std::to_string(b.rows()) + "x" +
                                                  std::to_string(b.cols()));
  const Field& f = a.field();
  const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
  const bool par = parallel && n * k * m >= kParallelWork;
  if (word_field(f)) {
    const std::uint64_t p = f.characteristic();
    auto aw = to_words(a), bw = to_words(b);
    std::vector<std::uint64_t> cw(n * m, 0);
#pragma omp parallel for schedule(static) if (par)
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t* crow = &cw[i * m];
      for (std::size_t t = 0; t < k; ++t) {
        const std::uint64_t x = aw[i * k + t];
        if (!x) continue;
        const std::uint64_t* brow = &bw[t * m];
        for (std::size_t j = 0; j < m; ++j)
          if (brow[j]) crow[j] = (crow[j] + x * brow[j]) % p;
      }
    }
    return from_words(f, n, m, cw);
  }
  Matrix c(f, n, m);
  auto& cd = c.raw();
  const auto& ad = a.data();
  const auto& bd = b.data();
#pragma omp parallel for schedule(static) if (par)
  for (std::size_t i = 0; i < n; ++i) {
    Scalar prod;
    for (std::size_t t = 0; t < k; ++t) {
      const Scalar& x = ad[i * k + t];
      if (x == 0) continue;
      for (std::size_t j = 0; j < m; ++j) {
        const Scalar& y = bd[t * m + j];
        if (y == 0) continue;
        mpq_mul(prod.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
        cd[i * m + j] += prod;
      }
    }
    for (std::size_t j = 0; j < m; ++j) f.normalize(cd[i * m + j]);
  }
  return c;
}

RowEchelon rref_words(const Matrix& m, bool parallel) {
  const Field& f = m.field();
  const std::uint64_t p = f.characteristic();
  const std::size_t R = m.rows(), C = m.cols();
  auto w = to_words(m);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  auto inv = [p](std::uint64_t x) {
    std::uint64_t result = 1, base = x, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = R;
    for (std::size_t i = r; i < R; ++i)
      if (w[i * C + c]) {
        piv = i;
        break;
      }
    if (piv == R) continue;
    if (piv != r)
      for (std::size_t j = 0; j < C; ++j) std::swap(w[piv * C + j], w[r * C + j]);
    const std::uint64_t s = inv(w[r * C + c]);
    for (std::size_t j = c; j < C; ++j) w[r * C + j] = w[r * C + j] * s % p;
    const bool par = parallel && R * (C - c) >= kParallelWork;
#pragma omp parallel for schedule(static) if (par)
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r) continue;
      const std::uint64_t fac = w[i * C + c];
      if (!fac) continue;
      const std::uint64_t neg = p - fac;
      for (std::size_t j = c; j < C; ++j)
        if (w[r * C + j]) w[i * C + j] = (w[i * C + j] + neg * w[r * C + j]) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  return {from_words(f, R, C, w), pivots};
}

RowEchelon rref_rational(const Matrix& m, bool parallel) {
  Matrix a = m;
  const Field& f = m.field();
  const std::size_t R = a.rows(), C = a.cols();
  auto& d = a.raw();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = R;
    for (std::size_t i = r; i < R; ++i)
      if (d[i * C + c] != 0) {
        piv = i;
        break;
      }
    if (piv == R) continue;
    if (piv != r)
      for (std::size_t j = 0; j < C; ++j) std::swap(d[piv * C + j], d[r * C + j]);
    const Scalar s = f.inverse(d[r * C + c]);
    for (std::size_t j = c; j < C; ++j) {
      d[r * C + j] *= s;
      f.normalize(d[r * C + j]);
    }
    const bool par = parallel && R * (C - c) >= kParallelWork / 16;
#pragma omp parallel for schedule(static) if (par)
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r) continue;
      if (d[i * C + c] == 0) continue;
      const Scalar fac = d[i * C + c];
      Scalar prod;
      for (std::size_t j = c; j < C; ++j) {
        if (d[r * C + j] == 0) continue;
        mpq_mul(prod.get_mpq_t(), fac.get_mpq_t(), d[r * C + j].get_mpq_t());
        d[i * C + j] -= prod;
        f.normalize(d[i * C + j]);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {a, pivots};
}

}  // namespace

Matrix multiply(const Matrix& a, const Matrix& b) { return multiply_impl(a, b, true); }
Matrix multiply_serial(const Matrix& a, const Matrix& b) { return multiply_impl(a, b, false); }

RowEchelon rref(const Matrix& m) { return word_field(m.field()) ? rref_words(m, true) : rref_rational(m, true); }
RowEchelon rref_serial(const Matrix& m) {
  return word_field(m.field()) ? rref_words(m, false) : rref_rational(m, false);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::DimensionMismatch, "field mismatch");
  Matrix m(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  auto& d = m.raw();
  const std::size_t mc = m.cols();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Scalar& y = b(k, l);
          if (y == 0) continue;
          Scalar& z = d[(i * b.rows() + k) * mc + j * b.cols() + l];
          z = x * y;
          a.field().normalize(z);
        }
    }
  return m;
}

Matrix kron(const std::vector<Matrix>& factors) {
  if (factors.empty()) throw Error(ErrorKind::DimensionMismatch, "empty Kronecker product");
  Matrix m = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) m = kron(m, factors[i]);
  return m;
}

Matrix hstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw Error(ErrorKind::DimensionMismatch, "empty hstack");
  std::size_t R = blocks[0].rows(), C = 0;
  for (const auto& b : blocks) {
    if (b.rows() != R) throw Error(ErrorKind::DimensionMismatch, "hstack row mismatch");
    C += b.cols();
  }
  Matrix m(blocks[0].field(), R, C);
  auto& d = m.raw();
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) d[i * C + off + j] = b(i, j);
    off += b.cols();
  }
  return m;
}

Matrix vstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw Error(ErrorKind::DimensionMismatch, "empty vstack");
  std::size_t C = blocks[0].cols(), R = 0;
  for (const auto& b : blocks) {
    if (b.cols() != C) throw Error(ErrorKind::DimensionMismatch, "vstack column mismatch");
    R += b.rows();
  }
  Matrix m(blocks[0].field(), R, C);
  auto& d = m.raw();
  std::size_t off = 0;
  for (const auto& b : blocks) {
    std::copy(b.data().begin(), b.data().end(), d.begin() + static_cast<long>(off * C));
    off += b.rows();
  }
  return m;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

std::vector<Matrix> kernel_basis(const Matrix& m) {
  Matrix k = kernel_matrix(m);
  std::vector<Matrix> out;
  for (std::size_t j = 0; j < k.cols(); ++j) out.push_back(k.col(j));
  return out;
}

Matrix kernel_matrix(const Matrix& m) {
  const Field& f = m.field();
  const std::size_t C = m.cols();
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(C, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < C; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix k(f, C, free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    k.set(free[j], j, Scalar(1));
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      const Scalar& x = e.reduced(i, free[j]);
      if (x != 0) k.set(e.pivots[i], j, -x);
    }
  }
  return k;
}

Matrix image_matrix(const Matrix& m) { return m.select_cols(rref(m).pivots); }

std::optional<Matrix> solve_particular(const Matrix& m, const Matrix& b) {
  if (b.rows() != m.rows())
    throw Error(ErrorKind::DimensionMismatch, "right-hand side has " + std::to_string(b.rows()) + " rows, expected " +
                                                  std::to_string(m.rows()));
  RowEchelon e = rref(hstack({m, b}));
  const std::size_t C = m.cols();
  Matrix x(m.field(), C, b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] >= C) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x.set(e.pivots[i], j, e.reduced(i, C + j));
  }
  return x;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (b.rows() != m.rows())
    throw Error(ErrorKind::DimensionMismatch, "right-hand side has " + std::to_string(b.rows()) + " rows, expected " +
                                                  std::to_string(m.rows()));
  RowEchelon e = rref(hstack({m, b}));
  std::size_t mp = 0;
  for (auto p : e.pivots) {
    if (p >= m.cols()) return std::nullopt;
    ++mp;
  }
  if (mp != m.cols()) return std::nullopt;
  Matrix x(m.field(), m.cols(), b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x.set(e.pivots[i], j, e.reduced(i, m.cols() + j));
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  return solve(m, Matrix::identity(m.field(), m.rows()));
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

bool same_column_space(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) return false;
  std::size_t ra = rank(a), rb = rank(b);
  return ra == rb && rank(hstack({a, b})) == ra;
}

/* ---------------- tensor bookkeeping ---------------- */

TensorShape::TensorShape(std::vector<std::size_t> dims) : dims_(std::move(dims)) {}

std::size_t TensorShape::flat_size() const {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>());
}

std::size_t TensorShape::flatten(std::span<const std::size_t> index) const {
  if (index.size() != dims_.size()) throw Error(ErrorKind::IndexOutOfRange, "multi-index has wrong arity");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (index[k] >= dims_[k])
      throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(index[k]) + " in factor of dimension " +
                                                  std::to_string(dims_[k]));
    flat = flat * dims_[k] + index[k];
  }
  return flat;
}

std::size_t TensorShape::flatten(std::initializer_list<std::size_t> index) const {
  return flatten(std::span<const std::size_t>(index.begin(), index.size()));
}

std::vector<std::size_t> TensorShape::unflatten(std::size_t flat) const {
  if (flat >= flat_size()) throw Error(ErrorKind::IndexOutOfRange, "flat index " + std::to_string(flat));
  std::vector<std::size_t> idx(dims_.size());
  for (std::size_t k = dims_.size(); k-- > 0;) {
    idx[k] = flat % dims_[k];
    flat /= dims_[k];
  }
  return idx;
}

Permutation::Permutation(Field f, std::vector<std::size_t> image) : field_(std::move(f)), image_(std::move(image)) {}

Matrix Permutation::matrix() const {
  Matrix m(field_, size(), size());
  for (std::size_t i = 0; i < size(); ++i) m.set(image_[i], i, Scalar(1));
  return m;
}

Matrix operator*(const Permutation& p, const Matrix& m) {
  if (p.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "permutation times matrix");
  std::vector<std::size_t> pre(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) pre[p.image()[i]] = i;
  return m.select_rows(pre);
}

Matrix operator*(const Matrix& m, const Permutation& p) {
  if (p.size() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "matrix times permutation");
  return m.select_cols(p.image());
}

Permutation factor_permutation(const Field& f, const TensorShape& shape, const std::vector<std::size_t>& perm) {
  const auto& dims = shape.dims();
  if (perm.size() != dims.size()) throw Error(ErrorKind::DimensionMismatch, "permutation arity");
  std::vector<std::size_t> out_dims(dims.size());
  for (std::size_t k = 0; k < perm.size(); ++k) out_dims[k] = dims.at(perm[k]);
  TensorShape out(out_dims);
  const std::size_t n = shape.flat_size();
  std::vector<std::size_t> image(n), j(dims.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto idx = shape.unflatten(i);
    for (std::size_t k = 0; k < perm.size(); ++k) j[k] = idx[perm[k]];
    image[i] = out.flatten(j);
  }
  return Permutation(f, std::move(image));
}

/* M (X ⊗ I_n), without forming the Kronecker product. */
Matrix times_kron_identity(const Matrix& m, const Matrix& x, std::size_t n) {
  Matrix out(m.field(), m.rows(), x.cols() * n);
  auto& d = out.raw();
  const std::size_t oc = out.cols();
  for (std::size_t q = 0; q < m.rows(); ++q)
    for (std::size_t p = 0; p < x.rows(); ++p)
      for (std::size_t l = 0; l < n; ++l) {
        const Scalar& a = m(q, p * n + l);
        if (a == 0) continue;
        for (std::size_t i = 0; i < x.cols(); ++i)
          if (x(p, i) != 0) d[q * oc + i * n + l] += a * x(p, i);
      }
  out.renormalize();
  return out;
}

/* (X ⊗ I_n) M */
Matrix kron_identity_times(const Matrix& x, std::size_t n, const Matrix& m) {
  Matrix out(m.field(), x.rows() * n, m.cols());
  auto& d = out.raw();
  const std::size_t oc = out.cols();
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t p = 0; p < x.cols(); ++p) {
      const Scalar& a = x(i, p);
      if (a == 0) continue;
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t c = 0; c < m.cols(); ++c)
          if (m(p * n + l, c) != 0) d[(i * n + l) * oc + c] += a * m(p * n + l, c);
    }
  out.renormalize();
  return out;
}

/* (I_n ⊗ X) M */
Matrix identity_kron_times(std::size_t n, const Matrix& x, const Matrix& m) {
  Matrix out(m.field(), n * x.rows(), m.cols());
  auto& d = out.raw();
  const std::size_t oc = out.cols();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < x.rows(); ++k)
      for (std::size_t p = 0; p < x.cols(); ++p) {
        const Scalar& a = x(k, p);
        if (a == 0) continue;
        for (std::size_t c = 0; c < m.cols(); ++c)
          if (m(j * x.cols() + p, c) != 0) d[(j * x.rows() + k) * oc + c] += a * m(j * x.cols() + p, c);
      }
  out.renormalize();
  return out;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.field().format(m(i, j));
  }
  os << "]";
  return os.str();
}

}  // namespace hopfkit
