#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "paralp/model.hpp"

namespace paralp {

using Basis = std::vector<std::size_t>;  // ordered basic column indices

enum class PivotRule { bland, dantzig, parametric };

enum class SolveStatus { optimal, infeasible, unbounded };

template <class T>
struct PivotStep {
  std::size_t enter;
  std::size_t leave;
  T objective;  // after the step
};

template <class T>
struct PivotTrace {
  PivotRule rule = PivotRule::bland;
  std::size_t phase1_steps = 0;
  std::vector<PivotStep<T>> steps;
};

template <class T>
struct SimplexSolution {
  SolveStatus status = SolveStatus::optimal;
  Vec<T> x;
  Vec<T> w;    // dual multipliers
  Vec<T> y;    // reduced costs
  Vec<T> ray;  // improving ray when unbounded
  T objective{};
  Basis basis;
  PivotTrace<T> trace;
};

struct SolveOptions {
  std::uint64_t iteration_limit = 0;  // 0: default 10 * 2^min(n,20)
};

namespace detail {

inline std::uint64_t default_iteration_limit(std::size_t n) {
  std::size_t k = std::min<std::size_t>(n, 20);
  return std::uint64_t(10) << k;
}

template <class T>
Mat<T> basis_matrix(const Mat<T>& A, const Basis& basis) {
  Mat<T> B(A.rows, basis.size());
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t k = 0; k < basis.size(); ++k) B(i, k) = A(i, basis[k]);
  return B;
}

template <class T>
Mat<T> basis_matrix_t(const Mat<T>& A, const Basis& basis) {
  Mat<T> Bt(basis.size(), A.rows);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t k = 0; k < basis.size(); ++k) Bt(k, i) = A(i, basis[k]);
  return Bt;
}

template <class T>
Vec<T> basic_solution(const Mat<T>& A, const Vec<T>& b, const Basis& basis) {
  auto xb = solve_square(basis_matrix(A, basis), b);
  if (!xb) throw Error(Error::Code::singular_basis, "singular basis matrix");
  Vec<T> x(A.cols, T(0));
  for (std::size_t k = 0; k < basis.size(); ++k) x[basis[k]] = (*xb)[k];
  return x;
}

}  // namespace detail

/// Dual multipliers and reduced costs for a basis: B^T w = c_B, y = c - A^T w.
template <class T>
std::pair<Vec<T>, Vec<T>> reduced_costs(const LinearProgram<T>& lp, const Basis& basis) {
  Vec<T> cb(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) cb[k] = lp.c[basis[k]];
  auto w = solve_square(detail::basis_matrix_t(lp.A, basis), cb);
  if (!w) throw Error(Error::Code::singular_basis, "singular basis matrix");
  Vec<T> y = vec_sub(lp.c, tmatvec(lp.A, *w));
  for (auto j : basis) y[j] = T(0);
  return {*w, y};
}

namespace detail {

/// One revised-simplex phase-II run on the given cost vector, starting from a
/// feasible basis. `allowed` can shrink the entering candidates (phase I uses
/// it to keep artificials out once they leave).
template <class T>
struct PhaseResult {
  SolveStatus status = SolveStatus::optimal;
  Basis basis;
  Vec<T> x;
  Vec<T> ray;
  std::size_t steps = 0;
};

template <class T, class Recorder>
PhaseResult<T> run_phase(const Mat<T>& A, const Vec<T>& b, const Vec<T>& cost,
                         Basis basis, PivotRule rule, std::uint64_t limit,
                         Recorder&& record, const std::vector<bool>* allowed = nullptr) {
  const std::size_t n = A.cols;
  PhaseResult<T> out;
  Vec<T> x = basic_solution(A, b, basis);
  std::vector<bool> in_basis(n, false);
  for (auto j : basis) in_basis[j] = true;

  for (std::uint64_t iter = 0;; ++iter) {
    if (iter >= limit)
      throw Error(Error::Code::iteration_limit, "simplex iteration limit exceeded");
    Vec<T> cb(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) cb[k] = cost[basis[k]];
    auto w = solve_square(basis_matrix_t(A, basis), cb);
    if (!w) throw Error(Error::Code::singular_basis, "singular basis matrix");
    Vec<T> y = vec_sub(cost, tmatvec(A, *w));

    std::size_t enter = n;
    if (rule == PivotRule::bland) {
      for (std::size_t j = 0; j < n; ++j) {
        if (in_basis[j] || (allowed && !(*allowed)[j])) continue;
        if (arith<T>::strict_neg(y[j])) { enter = j; break; }
      }
    } else {  // dantzig, ties by smallest index
      for (std::size_t j = 0; j < n; ++j) {
        if (in_basis[j] || (allowed && !(*allowed)[j])) continue;
        if (arith<T>::strict_neg(y[j]) && (enter == n || y[j] < y[enter])) enter = j;
      }
    }
    if (enter == n) {
      out.status = SolveStatus::optimal;
      out.basis = std::move(basis);
      out.x = std::move(x);
      return out;
    }

    auto dir = solve_square(basis_matrix(A, basis), A.col(enter));
    if (!dir) throw Error(Error::Code::singular_basis, "singular basis matrix");

    // Ratio test, ties broken by smallest leaving column index.
    std::size_t leave_pos = basis.size();
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!arith<T>::strict_pos((*dir)[k])) continue;
      if (leave_pos == basis.size()) { leave_pos = k; continue; }
      T lhs = x[basis[k]] * (*dir)[leave_pos];
      T rhs = x[basis[leave_pos]] * (*dir)[k];
      if (lhs < rhs || (lhs == rhs && basis[k] < basis[leave_pos])) leave_pos = k;
    }
    if (leave_pos == basis.size()) {
      out.status = SolveStatus::unbounded;
      out.basis = std::move(basis);
      out.x = std::move(x);
      out.ray.assign(n, T(0));
      out.ray[enter] = T(1);
      for (std::size_t k = 0; k < out.basis.size(); ++k)
        out.ray[out.basis[k]] = -(*dir)[k];
      return out;
    }

    std::size_t leave = basis[leave_pos];
    T step = x[leave] / (*dir)[leave_pos];
    for (std::size_t k = 0; k < basis.size(); ++k) x[basis[k]] -= step * (*dir)[k];
    x[leave] = T(0);
    x[enter] = step;
    in_basis[leave] = false;
    in_basis[enter] = true;
    basis[leave_pos] = enter;
    ++out.steps;
    record(enter, leave, dot(cost, x));
  }
}

}  // namespace detail

template <class T>
struct Phase1Result {
  std::optional<Basis> basis;  // nullopt: infeasible
  std::size_t steps = 0;
};

/// Two-phase start: artificial columns with identity structure, minimized out
/// under Bland's rule; surviving zero-level artificials are pivoted out
/// (always possible once A has full row rank).
template <class T>
Phase1Result<T> phase1(const LinearProgram<T>& lp, const SolveOptions& opts = {}) {
  const std::size_t m = lp.m(), n = lp.n();
  Phase1Result<T> out;
  if (m == 0) {
    out.basis = Basis{};
    return out;
  }
  Mat<T> A_aux(m, n + m);
  Vec<T> b_aux(m);
  for (std::size_t i = 0; i < m; ++i) {
    bool flip = arith<T>::strict_neg(lp.b[i]);
    for (std::size_t j = 0; j < n; ++j) A_aux(i, j) = flip ? -lp.A(i, j) : lp.A(i, j);
    b_aux[i] = flip ? -lp.b[i] : lp.b[i];
    A_aux(i, n + i) = T(1);
  }
  Vec<T> cost(n + m, T(0));
  for (std::size_t i = 0; i < m; ++i) cost[n + i] = T(1);
  Basis start(m);
  for (std::size_t i = 0; i < m; ++i) start[i] = n + i;

  std::uint64_t limit =
      opts.iteration_limit ? opts.iteration_limit : detail::default_iteration_limit(n + m);
  auto res = detail::run_phase(A_aux, b_aux, cost, std::move(start), PivotRule::bland,
                               limit, [](std::size_t, std::size_t, const T&) {});
  out.steps = res.steps;
  T opt(0);
  for (std::size_t i = 0; i < m; ++i) opt += res.x[n + i];
  if (!arith<T>::is_zero(opt)) return out;  // infeasible

  // Drive remaining artificials (at level zero) out of the basis.
  Basis basis = res.basis;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (basis[k] < n) continue;
    bool swapped = false;
    for (std::size_t j = 0; j < n && !swapped; ++j) {
      if (std::find(basis.begin(), basis.end(), j) != basis.end()) continue;
      Basis trial = basis;
      trial[k] = j;
      if (solve_square(detail::basis_matrix(A_aux, trial), b_aux)) {
        basis = trial;
        swapped = true;
      }
    }
    if (!swapped)
      throw Error(Error::Code::internal, "artificial stuck in basis of full-rank system");
  }
  out.basis = std::move(basis);
  return out;
}

/// Two-phase revised simplex. Optimal solutions come with KKT-checkable
/// certificates; unbounded verdicts carry an improving ray.
template <class T>
SimplexSolution<T> solve(const LinearProgram<T>& lp, PivotRule rule,
                         std::optional<Basis> start = {}, const SolveOptions& opts = {}) {
  SimplexSolution<T> sol;
  sol.trace.rule = rule;
  Basis basis;
  if (start) {
    basis = *start;
  } else {
    auto p1 = phase1(lp, opts);
    sol.trace.phase1_steps = p1.steps;
    if (!p1.basis) {
      sol.status = SolveStatus::infeasible;
      return sol;
    }
    basis = std::move(*p1.basis);
  }

  std::uint64_t limit =
      opts.iteration_limit ? opts.iteration_limit : detail::default_iteration_limit(lp.n());
  auto res = detail::run_phase(
      lp.A, lp.b, lp.c, std::move(basis), rule, limit,
      [&sol](std::size_t enter, std::size_t leave, const T& obj) {
        sol.trace.steps.push_back({enter, leave, obj});
      });
  sol.basis = res.basis;
  sol.x = res.x;
  if (res.status == SolveStatus::unbounded) {
    sol.status = SolveStatus::unbounded;
    sol.ray = res.ray;
    return sol;
  }
  sol.status = SolveStatus::optimal;
  auto [w, y] = reduced_costs(lp, sol.basis);
  sol.w = std::move(w);
  sol.y = std::move(y);
  sol.objective = dot(lp.c, sol.x);
  return sol;
}

template <class T>
struct BruteForceResult {
  SolveStatus status = SolveStatus::infeasible;
  T value{};
  std::vector<Vec<T>> vertices;  // all optimal vertices when optimal
};

/// Exhaustive oracle: enumerates all m-subsets of columns, keeps the
/// nonsingular feasible ones, and scans their edge directions for improving
/// rays. Intended for desk-scale cross-checks only.
template <class T>
BruteForceResult<T> brute_force_optimum(const LinearProgram<T>& lp,
                                        std::size_t size_guard = 24) {
  const std::size_t m = lp.m(), n = lp.n();
  if (n > size_guard)
    throw Error(Error::Code::size_guard, "brute force limited to n <= " +
                                             std::to_string(size_guard));
  BruteForceResult<T> out;
  bool have_value = false;

  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  auto advance = [&]() {
    std::size_t k = m;
    while (k-- > 0) {
      if (idx[k] != n - m + k) {
        ++idx[k];
        for (std::size_t j = k + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
        return true;
      }
    }
    return false;
  };

  do {
    auto xb = solve_square(detail::basis_matrix(lp.A, idx), lp.b);
    if (!xb) continue;
    bool feasible = true;
    for (const auto& v : *xb)
      if (!arith<T>::nonneg(v)) { feasible = false; break; }
    if (!feasible) continue;

    Vec<T> x(n, T(0));
    for (std::size_t k = 0; k < m; ++k) x[idx[k]] = (*xb)[k];

    // Edge directions out of this vertex: if one is a nonnegative ray that
    // improves the objective, the problem is unbounded.
    std::vector<bool> in_basis(n, false);
    for (auto j : idx) in_basis[j] = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (in_basis[j]) continue;
      auto dir = solve_square(detail::basis_matrix(lp.A, idx), lp.A.col(j));
      bool ray_ok = true;
      for (const auto& v : *dir)
        if (arith<T>::strict_pos(v)) { ray_ok = false; break; }
      if (!ray_ok) continue;
      Vec<T> r(n, T(0));
      r[j] = T(1);
      for (std::size_t k = 0; k < m; ++k) r[idx[k]] = -(*dir)[k];
      if (arith<T>::strict_neg(dot(lp.c, r))) {
        out.status = SolveStatus::unbounded;
        return out;
      }
    }

    T value = dot(lp.c, x);
    if (!have_value || value < out.value) {
      have_value = true;
      out.value = value;
      out.vertices.clear();
    }
    if (value == out.value &&
        std::find(out.vertices.begin(), out.vertices.end(), x) == out.vertices.end())
      out.vertices.push_back(std::move(x));
  } while (m > 0 && advance());

  if (m == 0) {
    // No constraints: x = 0 is the only vertex; any negative cost is a ray.
    for (std::size_t j = 0; j < n; ++j)
      if (arith<T>::strict_neg(lp.c[j])) {
        out.status = SolveStatus::unbounded;
        return out;
      }
    out.status = SolveStatus::optimal;
    out.value = T(0);
    out.vertices.push_back(Vec<T>(n, T(0)));
    return out;
  }
  out.status = have_value ? SolveStatus::optimal : SolveStatus::infeasible;
  return out;
}

}  // namespace paralp
