#pragma once

#include <string>

#include "paralp/model.hpp"
#include "paralp/rng.hpp"
#include "paralp/simplex.hpp"

namespace paralp {

/// Deformed-hypercube worst case: max sum_j 10^(D-j) x_j subject to
///   2 * sum_{j<i} 10^(i-j) x_j + x_i <= 100^(i-1),  i = 1..D,  x >= 0,
/// in standard form with D slacks and negated cost. Dantzig's rule from the
/// origin-slack basis walks all 2^D vertices.
template <class T>
LinearProgram<T> gen_klee_minty(std::size_t D) {
  if (D < 1 || D > 12)
    throw Error(Error::Code::dimension_mismatch, "klee-minty needs 1 <= D <= 12");
  auto pow = [](T base, std::size_t e) {
    T r(1);
    while (e--) r *= base;
    return r;
  };
  LinearProgram<T> lp;
  lp.name = "km_D" + std::to_string(D);
  lp.A = Mat<T>(D, 2 * D);
  lp.b = Vec<T>(D);
  lp.c = Vec<T>(2 * D, T(0));
  for (std::size_t i = 0; i < D; ++i) {
    for (std::size_t j = 0; j < i; ++j) lp.A(i, j) = T(2) * pow(T(10), i - j);
    lp.A(i, i) = T(1);
    lp.A(i, D + i) = T(1);
    lp.b[i] = pow(T(100), i);
    lp.c[i] = -pow(T(10), D - 1 - i);
  }
  return lp;
}

/// The slack basis (prescribed start vertex, the origin).
inline Basis klee_minty_start_basis(std::size_t D) {
  Basis b(D);
  for (std::size_t i = 0; i < D; ++i) b[i] = D + i;
  return b;
}

/// Random instance that is feasible and bounded by construction: b = A x0 for
/// a sampled x0 >= 0 and c = A^T w + y for sampled w and y >= 0. Sampling
/// order (one splitmix64 stream): A row-major in [-9,9], x0 in [0,9],
/// w in [-9,9], y in [0,9].
template <class T>
LinearProgram<T> gen_random_bounded(std::size_t m, std::size_t n, std::uint64_t seed) {
  if (m < 1 || m >= n || n > 30)
    throw Error(Error::Code::dimension_mismatch,
                "gen_random_bounded needs 1 <= m < n <= 30");
  SplitMix64 rng(seed);
  LinearProgram<T> lp;
  lp.name = "rnd_m" + std::to_string(m) + "_n" + std::to_string(n) + "_s" +
            std::to_string(seed);
  lp.A = Mat<T>(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) lp.A(i, j) = T(rng.next_int(-9, 9));
  Vec<T> x0(n);
  for (auto& v : x0) v = T(rng.next_int(0, 9));
  Vec<T> w(m);
  for (auto& v : w) v = T(rng.next_int(-9, 9));
  Vec<T> y(n);
  for (auto& v : y) v = T(rng.next_int(0, 9));
  lp.b = matvec(lp.A, x0);
  lp.c = vec_add(tmatvec(lp.A, w), y);
  return lp;
}

/// Fixture used across the test suites: A=[1 1 1], b=3, c=(2,1,0),
/// d=(1,1,1), B=[1 -1 0]; hence a=1, M=[1 1 -2], D=6.
template <class T>
LinearProgram<T> fixture_t1_lp() {
  LinearProgram<T> lp;
  lp.name = "T1";
  lp.A = Mat<T>{{T(1), T(1), T(1)}};
  lp.b = {T(3)};
  lp.c = {T(2), T(1), T(0)};
  return lp;
}

template <class T>
ParametricPair<T> fixture_t1_pair() {
  Mat<T> B{{T(1), T(-1), T(0)}};
  return build_parametric_pair(fixture_t1_lp<T>(), Vec<T>{T(1), T(1), T(1)}, B);
}

}  // namespace paralp
