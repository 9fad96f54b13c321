#pragma once
// Brute-force reference checks used by the tests. Everything here works on raw
// nested arrays with plain loops and shares no code with the library.

#include <gmpxx.h>

#include <cstdint>
#include <json.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace oracle {

using json = nlohmann::json;
using Q = mpq_class;
using T3 = std::vector<std::vector<std::vector<Q>>>;
using Mat = std::vector<std::vector<Q>>;  // row-major

struct Arith {
  std::uint64_t p = 0;  // 0 for the rationals

  static Arith from_name(const std::string& field) {
    Arith a;
    if (field != "Q") a.p = std::stoull(field.substr(3, field.size() - 4));
    return a;
  }

  Q reduce(const Q& x) const {
    if (p == 0) return x;
    mpz_class P(static_cast<unsigned long>(p)), n = x.get_num() % P, d = x.get_den() % P, inv;
    if (n < 0) n += P;
    mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), P.get_mpz_t());
    mpz_class r = (n * inv) % P;
    return Q(r);
  }
  bool eq(const Q& a, const Q& b) const { return reduce(a - b) == 0; }
  bool zero(const Q& a) const { return reduce(a) == 0; }

  Q scalar(const json& j) const {
    if (j.is_number_integer()) return reduce(Q(j.get<long>()));
    Q q(j.get<std::string>());
    q.canonicalize();
    return reduce(q);
  }
  std::vector<Q> vec(const json& j) const {
    std::vector<Q> v;
    for (auto& x : j) v.push_back(scalar(x));
    return v;
  }
  T3 t3(const json& j) const {
    T3 t;
    for (auto& a : j) {
      t.emplace_back();
      for (auto& b : a) t.back().push_back(vec(b));
    }
    return t;
  }

  /* Gaussian elimination, one pivot per column. */
  std::size_t rank(Mat m) const {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
      std::size_t piv = m.size();
      for (std::size_t i = r; i < m.size(); ++i)
        if (!zero(m[i][c])) piv = i;
      if (piv == m.size()) continue;
      std::swap(m[piv], m[r]);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i == r || zero(m[i][c])) continue;
        Q f = m[i][c] / m[r][c];
        for (std::size_t k = 0; k < cols; ++k) m[i][k] = reduce(m[i][k] - f * m[r][k]);
      }
      ++r;
    }
    return r;
  }
  bool invertible(const Mat& m) const { return rank(m) == m.size(); }
};

inline Q delta(std::size_t a, std::size_t b) { return a == b ? 1 : 0; }

/* m[i][j][k]: coefficient of e_k in e_i e_j */
inline bool algebra_ok(const Arith& F, const T3& m, const std::vector<Q>& u) {
  const std::size_t n = u.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Q lhs = 0, rhs = 0;
          for (std::size_t t = 0; t < n; ++t) {
            lhs += m[i][j][t] * m[t][k][l];
            rhs += m[j][k][t] * m[i][t][l];
          }
          if (!F.eq(lhs, rhs)) return false;
        }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Q l = 0, r = 0;
      for (std::size_t i = 0; i < n; ++i) {
        l += u[i] * m[i][j][k];
        r += u[i] * m[j][i][k];
      }
      if (!F.eq(l, delta(j, k)) || !F.eq(r, delta(j, k))) return false;
    }
  return true;
}

/* d[i][j][k]: coefficient of e_j⊗e_k in Δe_i */
inline bool coalgebra_ok(const Arith& F, const T3& d, const std::vector<Q>& e) {
  const std::size_t n = e.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          Q lhs = 0, rhs = 0;
          for (std::size_t t = 0; t < n; ++t) {
            lhs += d[i][t][c] * d[t][a][b];
            rhs += d[i][a][t] * d[t][b][c];
          }
          if (!F.eq(lhs, rhs)) return false;
        }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Q l = 0, r = 0;
      for (std::size_t j = 0; j < n; ++j) {
        l += e[j] * d[i][j][k];
        r += e[j] * d[i][k][j];
      }
      if (!F.eq(l, delta(i, k)) || !F.eq(r, delta(i, k))) return false;
    }
  return true;
}

inline bool bialgebra_ok(const Arith& F, const T3& m, const std::vector<Q>& u, const T3& d, const std::vector<Q>& e) {
  if (!algebra_ok(F, m, u) || !coalgebra_ok(F, d, e)) return false;
  const std::size_t n = u.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Q eps = 0;
      for (std::size_t t = 0; t < n; ++t) eps += m[i][j][t] * e[t];
      if (!F.eq(eps, e[i] * e[j])) return false;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          Q lhs = 0, rhs = 0;
          for (std::size_t t = 0; t < n; ++t) lhs += m[i][j][t] * d[t][a][b];
          for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
              if (F.zero(d[i][p][q])) continue;
              for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = 0; s < n; ++s) rhs += d[i][p][q] * d[j][r][s] * m[p][r][a] * m[q][s][b];
            }
          if (!F.eq(lhs, rhs)) return false;
        }
    }
  Q eu = 0;
  for (std::size_t t = 0; t < n; ++t) eu += u[t] * e[t];
  if (!F.eq(eu, 1)) return false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Q du = 0;
      for (std::size_t t = 0; t < n; ++t) du += u[t] * d[t][a][b];
      if (!F.eq(du, u[a] * u[b])) return false;
    }
  return true;
}

struct Bialg {
  T3 m, d;
  std::vector<Q> u, e;
};
struct Alg {
  T3 m;
  std::vector<Q> u;
};

/* nu[a][h][a']: coefficient of e_h⊗e_a' in ν(e_a) */
inline bool comodule_algebra_ok(const Arith& F, const Bialg& H, const Alg& A, const T3& nu) {
  const std::size_t nh = H.u.size(), na = A.u.size();
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t x = 0; x < na; ++x) {
      Q c = 0;
      for (std::size_t h = 0; h < nh; ++h) c += H.e[h] * nu[a][h][x];
      if (!F.eq(c, delta(a, x))) return false;
      for (std::size_t h1 = 0; h1 < nh; ++h1)
        for (std::size_t h2 = 0; h2 < nh; ++h2) {
          Q lhs = 0, rhs = 0;
          for (std::size_t h = 0; h < nh; ++h) lhs += nu[a][h][x] * H.d[h][h1][h2];
          for (std::size_t b = 0; b < na; ++b) rhs += nu[a][h1][b] * nu[b][h2][x];
          if (!F.eq(lhs, rhs)) return false;
        }
    }
  for (std::size_t h = 0; h < nh; ++h)
    for (std::size_t x = 0; x < na; ++x) {
      Q lhs = 0;
      for (std::size_t t = 0; t < na; ++t) lhs += A.u[t] * nu[t][h][x];
      if (!F.eq(lhs, H.u[h] * A.u[x])) return false;
    }
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t h = 0; h < nh; ++h)
        for (std::size_t x = 0; x < na; ++x) {
          Q lhs = 0, rhs = 0;
          for (std::size_t t = 0; t < na; ++t) lhs += A.m[i][j][t] * nu[t][h][x];
          for (std::size_t h1 = 0; h1 < nh; ++h1)
            for (std::size_t b1 = 0; b1 < na; ++b1) {
              if (F.zero(nu[i][h1][b1])) continue;
              for (std::size_t h2 = 0; h2 < nh; ++h2)
                for (std::size_t b2 = 0; b2 < na; ++b2)
                  rhs += nu[i][h1][b1] * nu[j][h2][b2] * H.m[h1][h2][h] * A.m[b1][b2][x];
            }
          if (!F.eq(lhs, rhs)) return false;
        }
  return true;
}

/* act[a][m][m'] and co[m][z][m'] for a Hopf module over Z = H */
inline bool hopf_module_ok(const Arith& F, const Bialg& H, const Alg& A, const T3& nu, const T3& act, const T3& co) {
  const std::size_t nh = H.u.size(), na = A.u.size(), n = co.size();
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < na; ++b)
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t x = 0; x < n; ++x) {
          Q lhs = 0, rhs = 0;
          for (std::size_t t = 0; t < n; ++t) lhs += act[b][m][t] * act[a][t][x];
          for (std::size_t c = 0; c < na; ++c) rhs += A.m[a][b][c] * act[c][m][x];
          if (!F.eq(lhs, rhs)) return false;
        }
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t x = 0; x < n; ++x) {
      Q un = 0, cu = 0;
      for (std::size_t a = 0; a < na; ++a) un += A.u[a] * act[a][m][x];
      for (std::size_t z = 0; z < nh; ++z) cu += H.e[z] * co[m][z][x];
      if (!F.eq(un, delta(m, x)) || !F.eq(cu, delta(m, x))) return false;
      for (std::size_t z1 = 0; z1 < nh; ++z1)
        for (std::size_t z2 = 0; z2 < nh; ++z2) {
          Q lhs = 0, rhs = 0;
          for (std::size_t z = 0; z < nh; ++z) lhs += co[m][z][x] * H.d[z][z1][z2];
          for (std::size_t t = 0; t < n; ++t) rhs += co[m][z1][t] * co[t][z2][x];
          if (!F.eq(lhs, rhs)) return false;
        }
    }
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t z = 0; z < nh; ++z)
        for (std::size_t x = 0; x < n; ++x) {
          Q lhs = 0, rhs = 0;
          for (std::size_t t = 0; t < n; ++t) lhs += act[a][m][t] * co[t][z][x];
          for (std::size_t h = 0; h < nh; ++h)
            for (std::size_t b = 0; b < na; ++b) {
              if (F.zero(nu[a][h][b])) continue;
              for (std::size_t y = 0; y < nh; ++y)
                for (std::size_t k = 0; k < n; ++k) rhs += nu[a][h][b] * co[m][y][k] * H.m[h][y][z] * act[b][k][x];
            }
          if (!F.eq(lhs, rhs)) return false;
        }
  return true;
}

struct Group {
  std::vector<std::vector<std::size_t>> table;
  std::size_t identity() const {
    for (std::size_t e = 0; e < table.size(); ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < table.size(); ++x) ok = ok && table[e][x] == x && table[x][e] == x;
      if (ok) return e;
    }
    return table.size();
  }
  std::size_t inverse(std::size_t x) const {
    for (std::size_t y = 0; y < table.size(); ++y)
      if (table[x][y] == identity()) return y;
    return table.size();
  }
};

/* maps[g][a][a']: coefficient of e_a' in g·e_a */
inline bool group_action_ok(const Arith& F, const Group& G, const Alg& A, const T3& maps) {
  const std::size_t n = A.u.size(), order = G.table.size();
  const std::size_t e = G.identity();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < n; ++x)
      if (!F.eq(maps[e][a][x], delta(a, x))) return false;
  for (std::size_t g = 0; g < order; ++g) {
    for (std::size_t x = 0; x < n; ++x) {
      Q one = 0;
      for (std::size_t t = 0; t < n; ++t) one += A.u[t] * maps[g][t][x];
      if (!F.eq(one, A.u[x])) return false;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t x = 0; x < n; ++x) {
          Q lhs = 0, rhs = 0;
          for (std::size_t t = 0; t < n; ++t) lhs += A.m[i][j][t] * maps[g][t][x];
          for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) rhs += maps[g][i][p] * maps[g][j][q] * A.m[p][q][x];
          if (!F.eq(lhs, rhs)) return false;
        }
    for (std::size_t h = 0; h < order; ++h)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t x = 0; x < n; ++x) {
          Q comp = 0;
          for (std::size_t b = 0; b < n; ++b) comp += maps[h][a][b] * maps[g][b][x];
          if (!F.eq(maps[G.table[g][h]][a][x], comp)) return false;
        }
  }
  return true;
}

/* values[g][m][m'] on N = A with ρ_g = maps[g]: φ(xy) = φ(x) ρ_x φ(y) ρ_x⁻¹ */
inline bool cocycle_ok(const Arith& F, const Group& G, const Alg& A, const T3& maps, const T3& values) {
  const std::size_t n = A.u.size(), order = G.table.size();
  auto as_mat = [&](const std::vector<std::vector<Q>>& t) {
    Mat m(n, std::vector<Q>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t o = 0; o < n; ++o) m[o][i] = t[i][o];
    return m;
  };
  auto mul = [&](const Mat& a, const Mat& b) {
    Mat c(n, std::vector<Q>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
  };
  for (std::size_t g = 0; g < order; ++g) {
    Mat v = as_mat(values[g]);
    if (!F.invertible(v)) return false;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t x = 0; x < n; ++x) {
          Q lhs = 0, rhs = 0;
          for (std::size_t t = 0; t < n; ++t) {
            lhs += A.m[a][m][t] * values[g][t][x];
            rhs += values[g][m][t] * A.m[a][t][x];
          }
          if (!F.eq(lhs, rhs)) return false;
        }
  }
  const std::size_t e = G.identity();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < n; ++x)
      if (!F.eq(values[e][a][x], delta(a, x))) return false;
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      Mat rhs = mul(mul(mul(as_mat(values[x]), as_mat(maps[x])), as_mat(values[y])), as_mat(maps[G.inverse(x)]));
      Mat lhs = as_mat(values[G.table[x][y]]);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!F.eq(lhs[i][j], rhs[i][j])) return false;
    }
  return true;
}

/* table[g][h] = gh: associative, with identity and inverses */
inline bool group_ok(const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = table.size();
  for (auto& row : table) {
    if (row.size() != n) return false;
    for (auto x : row)
      if (x >= n) return false;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) return false;
  Group g{table};
  if (g.identity() == n) return false;
  for (std::size_t x = 0; x < n; ++x)
    if (g.inverse(x) == n || table[g.inverse(x)][x] != g.identity()) return false;
  return true;
}

/*
 * Cocycles on the regular module of a commutative A are multiplications by
 * units. Enumerate every unit assignment, keep the cocycles, and group them
 * under u ~ u' iff α u(g) = u'(g) g(α) for some unit α.
 */
struct BruteH1 {
  std::size_t cocycles = 0;
  std::size_t classes = 0;
};

inline BruteH1 brute_h1(const json& doc, const std::string& action) {
  Arith F = Arith::from_name(doc["field"].get<std::string>());
  json act, alg, grp;
  for (auto& o : doc["objects"])
    if (o["name"] == action) act = o;
  for (auto& o : doc["objects"]) {
    if (o["name"] == act["algebra"]) alg = o;
    if (o["name"] == act["group"]) grp = o;
  }
  Alg A{F.t3(alg["mult"]), F.vec(alg["unit"])};
  T3 maps = F.t3(act["maps"]);
  Group G;
  for (auto& row : grp["table"]) G.table.push_back(row.get<std::vector<std::size_t>>());
  const std::size_t n = A.u.size(), order = G.table.size();

  using Vec = std::vector<Q>;
  auto mul = [&](const Vec& x, const Vec& y) {
    Vec z(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) z[k] = F.reduce(z[k] + x[i] * y[j] * A.m[i][j][k]);
    return z;
  };
  auto apply = [&](std::size_t g, const Vec& x) {
    Vec z(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) z[k] = F.reduce(z[k] + x[i] * maps[g][i][k]);
    return z;
  };
  auto same = [&](const Vec& x, const Vec& y) {
    for (std::size_t i = 0; i < n; ++i)
      if (!F.eq(x[i], y[i])) return false;
    return true;
  };

  std::vector<Vec> units;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= F.p;
  for (std::size_t code = 0; code < total; ++code) {
    Vec x(n);
    for (std::size_t i = 0, c = code; i < n; ++i, c /= F.p) x[i] = Q(static_cast<long>(c % F.p));
    Mat lx(n, std::vector<Q>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) lx[k][j] += x[i] * A.m[i][j][k];
    if (F.invertible(lx)) units.push_back(x);
  }

  std::vector<std::vector<Vec>> cocycles;
  std::vector<std::size_t> pick(order, 0);
  while (true) {
    T3 values(order, std::vector<std::vector<Q>>(n, std::vector<Q>(n)));
    for (std::size_t g = 0; g < order; ++g)
      for (std::size_t m = 0; m < n; ++m) {
        Vec e(n);
        e[m] = 1;
        values[g][m] = mul(units[pick[g]], e);
      }
    if (cocycle_ok(F, G, A, maps, values)) {
      std::vector<Vec> c;
      for (std::size_t g = 0; g < order; ++g) c.push_back(units[pick[g]]);
      cocycles.push_back(c);
    }
    std::size_t g = 0;
    while (g < order && ++pick[g] == units.size()) pick[g++] = 0;
    if (g == order) break;
  }

  std::vector<bool> seen(cocycles.size());
  BruteH1 out;
  out.cocycles = cocycles.size();
  for (std::size_t i = 0; i < cocycles.size(); ++i) {
    if (seen[i]) continue;
    ++out.classes;
    for (std::size_t j = i; j < cocycles.size(); ++j)
      for (auto& alpha : units) {
        bool ok = true;
        for (std::size_t g = 0; g < order && ok; ++g)
          ok = same(mul(alpha, cocycles[i][g]), mul(cocycles[j][g], apply(g, alpha)));
        if (ok) {
          seen[j] = true;
          break;
        }
      }
  }
  return out;
}

/* a⊗a' ↦ Σ a_{-1}⊗a_0 a' over the ground field, rows h*dimA + x */
inline Mat canonical_over_ground(const Bialg& H, const Alg& A, const T3& nu) {
  const std::size_t nh = H.u.size(), na = A.u.size();
  Mat can(nh * na, std::vector<Q>(na * na));
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t a2 = 0; a2 < na; ++a2)
      for (std::size_t h = 0; h < nh; ++h)
        for (std::size_t b = 0; b < na; ++b)
          for (std::size_t x = 0; x < na; ++x) can[h * na + x][a * na + a2] += nu[a][h][b] * A.m[b][a2][x];
  return can;
}

/* dim of {m : ζ(m) = 1⊗m} */
inline std::size_t coinvariant_dim(const Arith& F, const Bialg& H, const T3& co) {
  const std::size_t n = co.size(), nh = H.u.size();
  Mat eq;
  for (std::size_t z = 0; z < nh; ++z)
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<Q> row(n);
      for (std::size_t m = 0; m < n; ++m) row[m] = co[m][z][x] - H.u[z] * delta(m, x);
      eq.push_back(row);
    }
  return n - F.rank(eq);
}

/* Verdict for one named object of a document, from the raw JSON. */
class Document {
 public:
  explicit Document(const json& doc) : doc_(doc), F_(Arith::from_name(doc["field"].get<std::string>())) {
    for (auto& o : doc_["objects"]) by_name_[o["name"].get<std::string>()] = &o;
  }

  const Arith& arith() const { return F_; }
  const json& object(const std::string& name) const { return obj(name); }
  Bialg bialgebra(const std::string& name) const { return bialg(name); }
  Alg algebra(const std::string& name) const { return alg(json(name)); }

  std::optional<bool> valid(const std::string& name) const {
    const json& o = obj(name);
    const std::string type = o["type"].get<std::string>();
    if (type == "algebra") return algebra_ok(F_, F_.t3(o["mult"]), F_.vec(o["unit"]));
    if (type == "coalgebra") return coalgebra_ok(F_, F_.t3(o["comult"]), F_.vec(o["counit"]));
    if (type == "bialgebra") {
      Bialg h = bialg(name);
      return bialgebra_ok(F_, h.m, h.u, h.d, h.e);
    }
    if (type == "comodule-algebra")
      return comodule_algebra_ok(F_, bialg(o["bialgebra"]), alg(o["algebra"]), F_.t3(o["coaction"]));
    if (type == "hopf-module") {
      if (o.contains("module-coalgebra")) return std::nullopt;
      const json& ca = obj(o["comodule-algebra"]);
      return hopf_module_ok(F_, bialg(ca["bialgebra"]), alg(ca["algebra"]), F_.t3(ca["coaction"]), F_.t3(o["action"]),
                            F_.t3(o["coaction"]));
    }
    if (type == "group") return group_ok(group(o["name"]).table);
    if (type == "group-action") return group_action_ok(F_, group(o["group"]), alg(o["algebra"]), F_.t3(o["maps"]));
    if (type == "cocycle") {
      const json& act = obj(o["action"]);
      return cocycle_ok(F_, group(act["group"]), alg(act["algebra"]), F_.t3(act["maps"]), F_.t3(o["values"]));
    }
    return std::nullopt;
  }

 private:
  const json& obj(const json& name) const { return *by_name_.at(name.get<std::string>()); }
  const json& obj(const std::string& name) const { return *by_name_.at(name); }
  Bialg bialg(const json& name) const { return bialg(name.get<std::string>()); }
  Bialg bialg(const std::string& name) const {
    const json& o = obj(name);
    return {F_.t3(o["mult"]), F_.t3(o["comult"]), F_.vec(o["unit"]), F_.vec(o["counit"])};
  }
  Alg alg(const json& name) const {
    const json& o = obj(name);
    return {F_.t3(o["mult"]), F_.vec(o["unit"])};
  }
  Group group(const json& name) const {
    Group g;
    for (auto& row : obj(name)["table"]) g.table.push_back(row.get<std::vector<std::size_t>>());
    return g;
  }

  json doc_;
  Arith F_;
  std::map<std::string, const json*> by_name_;
};

}  // namespace oracle
