// Parallel kernels against their serial references.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "hopfkit/families.hpp"
#include "hopfkit/library.hpp"

using namespace hopfkit;

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937& rng) {
  std::uniform_int_distribution<long> d(-9, 9);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, f.from_int(d(rng)));
  return m;
}

template <class Fn>
double best_ms(int reps, Fn&& fn) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* name, double par, double ser, bool same) {
  std::printf("%-28s %10.2f %10.2f %7.2fx  %s\n", name, par, ser, ser / par, same ? "agree" : "DIFFER");
}

}  // namespace

int main() {
  std::mt19937 rng(20260101);
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %10s %10s %8s\n", "kernel", "par ms", "ser ms", "speedup");

  for (auto [f, n] : {std::pair{Field::rationals(), std::size_t(60)}, std::pair{Field::prime(101), std::size_t(120)}}) {
    Matrix a = random_matrix(f, n, n, rng), b = random_matrix(f, n, n, rng);
    Matrix p, s;
    double tp = best_ms(3, [&] { p = multiply(a, b); });
    double ts = best_ms(3, [&] { s = multiply_serial(a, b); });
    std::string label = "multiply " + std::to_string(n) + (f.is_finite() ? " GF(101)" : " Q");
    row(label.c_str(), tp, ts, p == s);

    RowEchelon rp, rs;
    tp = best_ms(3, [&] { rp = rref(a); });
    ts = best_ms(3, [&] { rs = rref_serial(a); });
    label = "rref " + std::to_string(n) + (f.is_finite() ? " GF(101)" : " Q");
    row(label.c_str(), tp, ts, rp.reduced == rs.reduced && rp.pivots == rs.pivots);
  }

  /* the batch of adjunction maps over every F4 test object */
  Field f2 = Field::prime(2);
  GroupAction frob = frobenius_action(gf4(), 2);
  ComoduleAlgebra ca = action_to_comodule_algebra(frob);
  Coalgebra c = trivial_coalgebra(f2);
  FamilyOptions opt;
  opt.max_dim = 4;
  auto units = enumerate_bc_modules(ca.base.sub, c, opt);
  auto counits = enumerate_dk_modules(ca, free_module_coalgebra(ca.H, c), opt);
  FthmReport rp, rs;
  double tp = best_ms(1, [&] { rp = fthm_report(ca, c, units.members, counits.members, BatchMode::Parallel); });
  double ts = best_ms(1, [&] { rs = fthm_report(ca, c, units.members, counits.members, BatchMode::Serial); });
  bool same = rp.units.size() == rs.units.size() && rp.counits.size() == rs.counits.size();
  for (std::size_t i = 0; same && i < rp.counits.size(); ++i)
    same = rp.counits[i].name == rs.counits[i].name && rp.counits[i].bijective == rs.counits[i].bijective;
  row("fthm batch F4 / k", tp, ts, same);
  return 0;
}
