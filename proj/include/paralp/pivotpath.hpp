#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paralp/parametric.hpp"
#include "paralp/rng.hpp"
#include "paralp/simplex.hpp"

namespace paralp {

/// An LP embedded into the rank-1 parametric construction: l = 1,
/// r = n - m - 1, tilt direction g = M^T s, and the rank-1 projection
/// S = s s^T / <s, s> implied by s.
template <class T>
struct Embedding {
  ParametricPair<T> pair;  // lp carries the shifted cost c' = c + A^T w
  Vec<T> s;                // canonicalized direction in M-coordinates
  Vec<T> g;                // M^T s
  Vec<T> c_shift_w;        // empty when no shift was found
  bool shift_found = false;
  bool assumption_clean = false;
  std::optional<std::uint64_t> fallback_seed;  // set when s came from the rng
  Basis start_basis;       // phase-1 vertex whose solution is the anchor d
  std::size_t phase1_steps = 0;

  /// S x = <s, x> s / <s, s>.
  Mat<T> projection() const {
    const std::size_t r = s.size();
    Mat<T> S(r, r);
    T ss = dot(s, s);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) S(i, j) = s[i] * s[j] / ss;
    return S;
  }
};

namespace detail {

/// Finds w with c + A^T w >= 0 by phase-1 feasibility on
/// A^T p - A^T q - slack = -c, (p, q, slack) >= 0.
template <class T>
std::optional<Vec<T>> cost_shift(const Mat<T>& A, const Vec<T>& c) {
  const std::size_t m = A.rows, n = A.cols;
  LinearProgram<T> raw;
  raw.A = Mat<T>(n, 2 * m + n);
  raw.b = Vec<T>(n);
  raw.c = Vec<T>(2 * m + n, T(0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      raw.A(j, i) = A(i, j);
      raw.A(j, m + i) = -A(i, j);
    }
    raw.A(j, 2 * m + j) = T(-1);
    raw.b[j] = -c[j];
  }
  LinearProgram<T> lp = validate_standard_form(raw);
  auto p1 = phase1(lp);
  if (!p1.basis) return std::nullopt;
  Vec<T> z = basic_solution(lp.A, lp.b, *p1.basis);
  // Rows may have been dropped by validation, but variables are untouched.
  Vec<T> w(m);
  for (std::size_t i = 0; i < m; ++i) w[i] = z[i] - z[m + i];
  return w;
}

}  // namespace detail

/// Builds the rank-1 embedding behind path following: anchor d from a
/// phase-1 vertex, B spanned by the cost component orthogonal to rowspace(A),
/// M the remaining complement, and s the M-projection of an interior normal
/// cone vector at the anchor vertex.
template <class T>
Embedding<T> synthesize_embedding(const LinearProgram<T>& lp,
                                  std::uint64_t fallback_seed = 0x5EEDULL) {
  const std::size_t m = lp.m(), n = lp.n();
  if (n < m + 2)
    throw Error(Error::Code::no_parametric_direction,
                "need n >= m + 2 for a rank-1 embedding");
  Embedding<T> emb;
  auto p1 = phase1(lp);
  emb.phase1_steps = p1.steps;
  if (!p1.basis) throw Error(Error::Code::contract, "infeasible LP has no embedding");
  emb.start_basis = *p1.basis;
  Vec<T> d = detail::basic_solution(lp.A, lp.b, emb.start_basis);

  auto w = detail::cost_shift(lp.A, lp.c);
  Vec<T> c_shifted = lp.c;
  if (w) {
    emb.shift_found = true;
    emb.c_shift_w = *w;
    c_shifted = vec_add(lp.c, tmatvec(lp.A, *w));
  }

  // B: the component of the (shifted) cost orthogonal to rowspace(A); when
  // that vanishes, any complement row will do.
  Vec<T> brow;
  if (m > 0) {
    Mat<T> gram(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k) gram(i, k) = dot(lp.A.row(i), lp.A.row(k));
    auto t = solve_square(gram, matvec(lp.A, c_shifted));
    if (!t) throw Error(Error::Code::internal, "A A^T singular on full-row-rank A");
    brow = vec_sub(c_shifted, tmatvec(lp.A, *t));
  } else {
    brow = c_shifted;
  }
  if (is_zero_vec(brow)) {
    OrthoComplement<T> oc = orthogonal_complement(lp.A);
    brow = oc.M.row(0);
  }
  brow = canonicalize(std::move(brow));
  Mat<T> B;
  B.cols = n;
  B.append_row(brow);

  LinearProgram<T> shifted = lp;
  shifted.c = c_shifted;
  emb.pair = build_parametric_pair(shifted, d, B);
  if (emb.pair.r() != n - m - 1)
    throw Error(Error::Code::internal, "embedding rank mismatch");
  emb.assumption_clean = emb.pair.assumption_clean;

  // Interior normal-cone vector at the anchor vertex: all-ones on nonbasic
  // coordinates. Its M-projection coefficients are (M z)_i / D_i.
  Vec<T> z(n, T(1));
  for (auto j : emb.start_basis) z[j] = T(0);
  Vec<T> Mz = matvec(emb.pair.M, z);
  Vec<T> s(emb.pair.r());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = Mz[i] / emb.pair.D[i];
  if (is_zero_vec(s)) {
    SplitMix64 rng(fallback_seed);
    do {
      for (auto& si : s) si = T(static_cast<long>(rng.next_int(-9, 9)));
    } while (is_zero_vec(s));
    emb.fallback_seed = fallback_seed;
  }
  emb.s = canonicalize(std::move(s));
  emb.g = tmatvec(emb.pair.M, emb.s);
  return emb;
}

template <class T>
struct PathStep {
  T t;       // breakpoint parameter
  Vec<T> x;  // vertex after the crossing
  Vec<T> y;  // reduced costs of c + t g at that vertex
};

template <class T>
struct PathReport {
  std::string instance;
  std::size_t n = 0;
  std::size_t pivots_phase2 = 0;    // parametric pivots
  std::size_t pivots_bootstrap = 0; // phase 1 + reaching the t_max vertex
  bool bound_holds = false;         // pivots_phase2 <= n
  std::vector<T> breakpoints;       // strictly decreasing toward 0
  T optimal_value{};
  bool optimal_verified = false;
  Vec<T> s;
  std::optional<std::uint64_t> seed;
  bool bootstrap_flagged = false;   // bootstrap exceeded n^2 pivots
};

template <class T>
struct PathSolveResult {
  SimplexSolution<T> solution;
  PathReport<T> report;
  Embedding<T> embedding;
  std::vector<PathStep<T>> steps;
};

/// Parametric-objective path following on cost c + t g from t_max down to 0.
/// Each pivot crosses one transition point of the projected parameter; the
/// basis left at t = 0 is optimal for the original cost.
template <class T>
PathSolveResult<T> parametric_path_solve(const LinearProgram<T>& lp,
                                         const SolveOptions& opts = {}) {
  PathSolveResult<T> out;
  out.report.instance = lp.name;
  out.report.n = lp.n();
  out.solution.trace.rule = PivotRule::parametric;

  {
    auto p1 = phase1(lp, opts);
    if (!p1.basis) {
      out.solution.status = SolveStatus::infeasible;
      return out;
    }
  }
  out.embedding = synthesize_embedding(lp);
  out.report.s = out.embedding.s;
  out.report.seed = out.embedding.fallback_seed;
  const Vec<T>& g = out.embedding.g;
  const Mat<T>& A = lp.A;
  const std::size_t n = lp.n();
  std::uint64_t limit =
      opts.iteration_limit ? opts.iteration_limit : detail::default_iteration_limit(n);

  // t_max makes the tilt dominate any cost coefficient.
  T t_max(1);
  {
    T cnorm(0);
    for (const auto& cj : lp.c) cnorm += arith<T>::abs(cj);
    bool any = false;
    T inv_min(0);
    for (const auto& gj : g)
      if (!arith<T>::is_zero(gj)) {
        T inv = T(1) / arith<T>::abs(gj);
        if (!any || inv > inv_min) inv_min = inv;
        any = true;
      }
    if (any) t_max += cnorm * inv_min;
  }

  // Bootstrap to a vertex optimal at t_max. A tilted-unbounded verdict whose
  // ray does not improve the true cost only caps t_max lower; a ray improving
  // the true cost settles the original problem.
  Basis basis = out.embedding.start_basis;
  std::size_t bootstrap = out.embedding.phase1_steps;
  for (;;) {
    Vec<T> cost(n);
    for (std::size_t j = 0; j < n; ++j) cost[j] = lp.c[j] + t_max * g[j];
    auto res = detail::run_phase(A, lp.b, cost, std::move(basis), PivotRule::bland,
                                 limit, [](std::size_t, std::size_t, const T&) {});
    bootstrap += res.steps;
    basis = std::move(res.basis);
    if (res.status == SolveStatus::optimal) break;
    T cr = dot(lp.c, res.ray);
    if (arith<T>::strict_neg(cr)) {
      out.solution.status = SolveStatus::unbounded;
      out.solution.x = res.x;
      out.solution.ray = res.ray;
      out.report.pivots_bootstrap = bootstrap;
      return out;
    }
    T gr = dot(g, res.ray);
    if (!arith<T>::strict_neg(gr))
      throw Error(Error::Code::internal, "non-improving unbounded ray in bootstrap");
    t_max = -cr / gr;  // strictly below the previous t_max
  }
  out.report.pivots_bootstrap = bootstrap;
  out.report.bootstrap_flagged = bootstrap > n * n;

  // Walk t downward; a basis stays optimal until a nonbasic reduced cost of
  // c + t g crosses zero.
  T t = t_max;
  LinearProgram<T> lp_g = lp;
  lp_g.c = g;
  for (std::uint64_t iter = 0;; ++iter) {
    if (iter >= limit)
      throw Error(Error::Code::iteration_limit, "parametric path iteration limit");
    auto [wc, yc] = reduced_costs(lp, basis);
    auto [wg, yg] = reduced_costs(lp_g, basis);
    std::vector<bool> in_basis(n, false);
    for (auto j : basis) in_basis[j] = true;

    bool have = false;
    T t_next{};
    std::size_t enter = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (in_basis[j] || !arith<T>::strict_pos(yg[j])) continue;
      T tj = -yc[j] / yg[j];
      if (!arith<T>::strict_pos(tj)) continue;
      if (tj > t) tj = t;  // guard against float noise
      if (!have || tj > t_next) {
        have = true;
        t_next = tj;
        enter = j;
      }
    }
    if (!have) break;  // optimal down to and at t = 0

    auto dir = solve_square(detail::basis_matrix(A, basis), A.col(enter));
    if (!dir) throw Error(Error::Code::singular_basis, "singular basis matrix");
    std::size_t leave_pos = basis.size();
    Vec<T> x = detail::basic_solution(A, lp.b, basis);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!arith<T>::strict_pos((*dir)[k])) continue;
      if (leave_pos == basis.size()) { leave_pos = k; continue; }
      T lhs = x[basis[k]] * (*dir)[leave_pos];
      T rhs = x[basis[leave_pos]] * (*dir)[k];
      if (lhs < rhs || (lhs == rhs && basis[k] < basis[leave_pos])) leave_pos = k;
    }
    if (leave_pos == basis.size()) {
      // The entering edge is a feasible ray improving the true cost.
      out.solution.status = SolveStatus::unbounded;
      out.solution.x = x;
      out.solution.ray.assign(n, T(0));
      out.solution.ray[enter] = T(1);
      for (std::size_t k = 0; k < basis.size(); ++k)
        out.solution.ray[basis[k]] = -(*dir)[k];
      return out;
    }
    std::size_t leave = basis[leave_pos];
    basis[leave_pos] = enter;
    ++out.report.pivots_phase2;
    if (out.report.breakpoints.empty() || t_next < out.report.breakpoints.back())
      out.report.breakpoints.push_back(t_next);
    t = t_next;

    Vec<T> x_new = detail::basic_solution(A, lp.b, basis);
    auto [wc2, yc2] = reduced_costs(lp, basis);
    auto [wg2, yg2] = reduced_costs(lp_g, basis);
    Vec<T> y_t(n);
    for (std::size_t j = 0; j < n; ++j) y_t[j] = yc2[j] + t * yg2[j];
    out.steps.push_back({t, x_new, y_t});
    out.solution.trace.steps.push_back({enter, leave, dot(lp.c, x_new)});
  }

  out.solution.status = SolveStatus::optimal;
  out.solution.basis = basis;
  out.solution.x = detail::basic_solution(A, lp.b, basis);
  auto [w, y] = reduced_costs(lp, basis);
  out.solution.w = w;
  out.solution.y = y;
  out.solution.objective = dot(lp.c, out.solution.x);
  out.report.optimal_value = out.solution.objective;
  out.report.optimal_verified =
      kkt_check(lp, KktCertificate<T>{out.solution.x, w, y}).ok;
  out.report.bound_holds = out.report.pivots_phase2 <= lp.n();
  return out;
}

template <class T>
struct BoundSummary {
  std::size_t holds = 0;
  std::size_t fails = 0;
  T max_ratio{};  // max pivots_phase2 / n
  bool has_ratio = false;
  std::vector<std::string> counterexamples;  // instances with bound_holds=false
};

/// Aggregates measured pivot counts against the claimed n bound. Reports must
/// all be verified optima; the bound itself is data, not an assertion.
template <class T>
BoundSummary<T> bound_report(const std::vector<PathReport<T>>& reports) {
  BoundSummary<T> sum;
  for (const auto& rep : reports) {
    if (!rep.optimal_verified)
      throw Error(Error::Code::contract,
                  "bound_report rejects unverified report: " + rep.instance);
    if (rep.bound_holds)
      ++sum.holds;
    else {
      ++sum.fails;
      sum.counterexamples.push_back(rep.instance);
    }
    T ratio = T(static_cast<long>(rep.pivots_phase2)) / T(static_cast<long>(rep.n));
    if (!sum.has_ratio || ratio > sum.max_ratio) {
      sum.max_ratio = ratio;
      sum.has_ratio = true;
    }
  }
  return sum;
}

}  // namespace paralp
