#pragma once

#include <string>
#include <vector>

#include "hopfkit/exactla.hpp"

namespace hopfkit::detail {

inline Matrix eye(const Field& f, std::size_t n) { return Matrix::identity(f, n); }

/* First differing entry as (column, row). */
inline void expect_equal(CheckReport& rep, const std::string& axiom, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    rep.push_back({axiom + " (shape)", {a.rows(), a.cols(), b.rows(), b.cols()}});
    return;
  }
  for (std::size_t c = 0; c < a.cols(); ++c)
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (a(r, c) != b(r, c)) {
        rep.push_back({axiom, {c, r}});
        return;
      }
}

inline void append(CheckReport& rep, const CheckReport& more, const std::string& prefix) {
  for (const auto& v : more) rep.push_back({prefix + v.axiom, v.witness});
}

/*
 * Visits every vector in coeffs^n, most significant digit first, so the
 * visiting order is lexicographic. Stops early when fn returns false.
 */
template <class Fn>
void for_each_vector(const std::vector<Scalar>& coeffs, std::size_t n, Fn&& fn) {
  std::vector<std::size_t> digits(n, 0);
  std::vector<Scalar> v(n, coeffs.empty() ? Scalar(0) : coeffs[0]);
  if (coeffs.empty()) return;
  for (;;) {
    if (!fn(static_cast<const std::vector<Scalar>&>(v))) return;
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < coeffs.size()) {
        v[pos] = coeffs[digits[pos]];
        break;
      }
      digits[pos] = 0;
      v[pos] = coeffs[0];
      if (pos == 0) return;
    }
    if (n == 0) return;
  }
}

/* |coeffs|^n, saturating. */
inline double search_size(std::size_t coeffs, std::size_t n) {
  double s = 1;
  for (std::size_t i = 0; i < n; ++i) s *= double(coeffs);
  return s;
}

}  // namespace hopfkit::detail
