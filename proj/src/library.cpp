#include "hopfkit/library.hpp"

#include "checks.hpp"

namespace hopfkit {

namespace {

Tensor3 zeros(std::size_t n) {
  return Tensor3(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar(0))));
}

}  // namespace

HopfAlgebra group_hopf(const GroupPresentation& g, const Field& f) {
  const std::size_t n = g.order;
  Tensor3 m = zeros(n), d = zeros(n);
  std::vector<Scalar> unit(n, Scalar(0)), counit(n, Scalar(1));
  unit[g.identity] = 1;
  for (std::size_t x = 0; x < n; ++x) {
    d[x][x][x] = 1;
    for (std::size_t y = 0; y < n; ++y) m[x][y][g.mul(x, y)] = 1;
  }
  Matrix s(f, n, n);
  for (std::size_t x = 0; x < n; ++x) s.set(g.inverse[x], x, Scalar(1));
  return {{Algebra::from_tensor(f, m, unit), Coalgebra::from_tensor(f, d, counit)}, s};
}

Bialgebra sweedler_h4(const Field& f) {
  /* 0 = 1, 1 = g, 2 = x, 3 = gx */
  Tensor3 m = zeros(4), d = zeros(4);
  const Scalar one(1), neg(f.from_int(-1));
  for (std::size_t i = 0; i < 4; ++i) {
    m[0][i][i] = one;
    m[i][0][i] = one;
  }
  m[1][1][0] = one;  // g g = 1
  m[1][2][3] = one;  // g x = gx
  m[1][3][2] = one;  // g gx = x
  m[2][1][3] = neg;  // x g = −gx
  m[3][1][2] = neg;  // gx g = −x
  /* x x = x gx = gx x = gx gx = 0 */
  d[0][0][0] = one;
  d[1][1][1] = one;
  d[2][2][0] = one;  // x⊗1
  d[2][1][2] = one;  // g⊗x
  d[3][3][1] = one;  // gx⊗g
  d[3][0][3] = one;  // 1⊗gx
  return {Algebra::from_tensor(f, m, {one, 0, 0, 0}), Coalgebra::from_tensor(f, d, {one, one, 0, 0})};
}

Bialgebra idempotent_monoid(const Field& f) {
  Tensor3 m = zeros(2), d = zeros(2);
  m[0][0][0] = 1;
  m[0][1][1] = 1;
  m[1][0][1] = 1;
  m[1][1][1] = 1;
  d[0][0][0] = 1;
  d[1][1][1] = 1;
  return {Algebra::from_tensor(f, m, {1, 0}), Coalgebra::from_tensor(f, d, {1, 1})};
}

Algebra prime_power_field(std::uint64_t p, const std::vector<long>& low_coeffs) {
  Field f = Field::prime(p);
  const std::size_t n = low_coeffs.size();
  if (n == 0) throw Error(ErrorKind::DimensionMismatch, "extension of degree 0");
  /* t^k reduced modulo m, for k < 2n−1 */
  std::vector<std::vector<Scalar>> power(2 * n - 1, std::vector<Scalar>(n, Scalar(0)));
  for (std::size_t k = 0; k < n; ++k) power[k][k] = 1;
  for (std::size_t k = n; k < 2 * n - 1; ++k) {
    /* t^k = t·t^{k−1}, with t^n = −Σ m_i t^i */
    const auto& prev = power[k - 1];
    std::vector<Scalar> next(n, Scalar(0));
    for (std::size_t i = 0; i + 1 < n; ++i) next[i + 1] = prev[i];
    for (std::size_t i = 0; i < n; ++i) next[i] -= prev[n - 1] * f.from_int(low_coeffs[i]);
    for (auto& s : next) f.normalize(s);
    power[k] = next;
  }
  Tensor3 m = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = power[i + j];
  std::vector<Scalar> unit(n, Scalar(0));
  unit[0] = 1;
  return Algebra::from_tensor(f, m, unit);
}

GroupAction frobenius_action(const Algebra& ext, std::size_t degree) {
  const Field& f = ext.field();
  if (!f.is_finite()) throw Error(ErrorKind::InvalidStructure, "Frobenius needs a finite field");
  const std::size_t n = ext.dim();
  /* σ(e_i) = e_i^p */
  Matrix sigma(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix x = Matrix::unit_vector(f, n, i), y = ext.unit();
    for (std::uint64_t k = 0; k < f.characteristic(); ++k) y = ext.product(y, x);
    for (std::size_t r = 0; r < n; ++r) sigma.set(r, i, y(r, 0));
  }
  GroupAction act{cyclic_group(degree), ext, {}};
  Matrix power = detail::eye(f, n);
  for (std::size_t k = 0; k < degree; ++k) {
    act.maps.push_back(power);
    power = sigma * power;
  }
  return act;
}

GroupAction trivial_action(const GroupPresentation& g, const Algebra& a) {
  return {g, a, std::vector<Matrix>(g.order, detail::eye(a.field(), a.dim()))};
}

Algebra gf4() { return prime_power_field(2, {1, 1}); }
Algebra gf8() { return prime_power_field(2, {1, 1, 0}); }

}  // namespace hopfkit
