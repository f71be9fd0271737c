#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "paralp/interval.hpp"
#include "paralp/simplex.hpp"

namespace paralp {

enum class Side { primal, dual };

inline std::string to_string(Side s) { return s == Side::primal ? "primal" : "dual"; }

namespace detail {

template <class T>
struct LinOpt {
  SolveStatus status = SolveStatus::infeasible;
  T value{};
  Vec<T> x;
};

/// Minimizes cost over {rows * x = rhs, x >= 0}; rank-reduces first so callers
/// may stack redundant rows freely. An inconsistent stack is infeasible.
template <class T>
LinOpt<T> minimize_over(const Mat<T>& rows, const Vec<T>& rhs, const Vec<T>& cost) {
  LinearProgram<T> raw;
  raw.A = rows;
  raw.b = rhs;
  raw.c = cost;
  LinOpt<T> out;
  LinearProgram<T> lp;
  try {
    lp = validate_standard_form(raw);
  } catch (const Error& e) {
    if (e.code() == Error::Code::inconsistent_rows) return out;  // infeasible
    throw;
  }
  auto sol = solve(lp, PivotRule::bland);
  out.status = sol.status;
  if (sol.status == SolveStatus::optimal) {
    out.value = sol.objective;
    out.x = sol.x;
  }
  return out;
}

template <class T>
void require_rank1(const ParametricPair<T>& pair) {
  if (pair.r() != 1)
    throw Error(Error::Code::no_parametric_direction,
                "operation requires r = 1, got r = " + std::to_string(pair.r()));
}

}  // namespace detail

/// Endpoint optimizers backing an interval image of phi or psi. The argument
/// vectors attain the finite endpoints (arg_lo the lower, arg_hi the upper);
/// for an unbounded side the vector on that side is the optimizer of the
/// bounded one.
template <class T>
struct FaceImage {
  Interval<T> range;
  Vec<T> arg_lo;
  Vec<T> arg_hi;
};

/// Projection interval of the chosen side: the set of scalar parameters for
/// which the rhs-perturbed problem stays feasible. Two LP solves.
template <class T>
Interval<T> theta_interval(const ParametricPair<T>& pair, Side side) {
  detail::require_rank1(pair);
  const Mat<T>& rows = side == Side::primal ? pair.lp.A : pair.B;
  const Vec<T>& rhs = side == Side::primal ? pair.lp.b : pair.a;
  const Vec<T>& anchor = side == Side::primal ? pair.d : pair.lp.c;
  Vec<T> mrow = pair.M.row(0);
  const T d0 = pair.D[0];
  const T offset = dot(mrow, anchor);

  auto lo = detail::minimize_over(rows, rhs, mrow);
  if (lo.status == SolveStatus::infeasible) return Interval<T>::none();
  Vec<T> neg(mrow.size());
  for (std::size_t j = 0; j < mrow.size(); ++j) neg[j] = -mrow[j];
  auto hi = detail::minimize_over(rows, rhs, neg);

  Interval<T> iv;
  if (lo.status == SolveStatus::optimal) {
    iv.has_lo = true;
    iv.lo = (lo.value - offset) / d0;
    iv.lo_closed = true;
  }
  if (hi.status == SolveStatus::optimal) {
    iv.has_hi = true;
    iv.hi = (-hi.value - offset) / d0;
    iv.hi_closed = true;
  }
  return iv;
}

namespace detail {

/// Shared core of phi and psi: solve the perturbed problem, then min/max the
/// projected coordinate over its optimal face (the face restriction is the
/// linear stand-in for the complementarity condition).
template <class T>
FaceImage<T> face_image(const Mat<T>& rows, const Vec<T>& rhs, const Vec<T>& cost,
                        const Vec<T>& mrow, const T& offset, const T& d0) {
  auto base = minimize_over(rows, rhs, cost);
  if (base.status == SolveStatus::infeasible)
    throw Error(Error::Code::internal, "face_image on infeasible region");
  if (base.status == SolveStatus::unbounded)
    throw Error(Error::Code::internal,
                "perturbed problem unbounded for an in-theta parameter");

  Mat<T> face_rows = rows;
  face_rows.append_row(cost);
  Vec<T> face_rhs = rhs;
  face_rhs.push_back(base.value);

  auto lo = minimize_over(face_rows, face_rhs, mrow);
  Vec<T> neg(mrow.size());
  for (std::size_t j = 0; j < mrow.size(); ++j) neg[j] = -mrow[j];
  auto hi = minimize_over(face_rows, face_rhs, neg);

  FaceImage<T> img;
  if (lo.status == SolveStatus::optimal) {
    img.range.has_lo = true;
    img.range.lo = (lo.value - offset) / d0;
    img.range.lo_closed = true;
    img.arg_lo = lo.x;
  } else {
    img.arg_lo = base.x;
  }
  if (hi.status == SolveStatus::optimal) {
    img.range.has_hi = true;
    img.range.hi = (-hi.value - offset) / d0;
    img.range.hi_closed = true;
    img.arg_hi = hi.x;
  } else {
    img.arg_hi = base.x;
  }
  return img;
}

template <class T>
bool in_theta(const ParametricPair<T>& pair, Side side, const T& value) {
  const Mat<T>& rows = side == Side::primal ? pair.lp.A : pair.B;
  const Vec<T>& rhs = side == Side::primal ? pair.lp.b : pair.a;
  const Vec<T>& anchor = side == Side::primal ? pair.d : pair.lp.c;
  Mat<T> stacked = rows;
  stacked.append_row(pair.M.row(0));
  Vec<T> srhs = rhs;
  srhs.push_back(dot(pair.M.row(0), anchor) + pair.D[0] * value);
  Vec<T> zero(stacked.cols, T(0));
  return minimize_over(stacked, srhs, zero).status == SolveStatus::optimal;
}

}  // namespace detail

/// Phi(u): the projected image of the optimal face of the objective-perturbed
/// primal. D-scaled convention: cost c + u * M_row, image (M x - M d) / D.
template <class T>
FaceImage<T> phi_image(const ParametricPair<T>& pair, const T& u) {
  detail::require_rank1(pair);
  if (!detail::in_theta(pair, Side::dual, u))
    throw Error(Error::Code::outside_theta, "u outside Theta_D");
  Vec<T> mrow = pair.M.row(0);
  Vec<T> cost = pair.lp.c;
  for (std::size_t j = 0; j < cost.size(); ++j) cost[j] += u * mrow[j];
  return detail::face_image(pair.lp.A, pair.lp.b, cost, mrow,
                            dot(mrow, pair.d), pair.D[0]);
}

template <class T>
Interval<T> phi(const ParametricPair<T>& pair, const T& u) {
  return phi_image(pair, u).range;
}

/// Psi(v): the projected image of the optimal face of the rhs-perturbed dual,
/// cost d + v * M_row over {By = a, y >= 0}, image (M y - M c) / D.
template <class T>
FaceImage<T> psi_image(const ParametricPair<T>& pair, const T& v) {
  detail::require_rank1(pair);
  if (!detail::in_theta(pair, Side::primal, v))
    throw Error(Error::Code::outside_theta, "v outside Theta_P");
  Vec<T> mrow = pair.M.row(0);
  Vec<T> cost = pair.d;
  for (std::size_t j = 0; j < cost.size(); ++j) cost[j] += v * mrow[j];
  return detail::face_image(pair.B, pair.a, cost, mrow,
                            dot(mrow, pair.lp.c), pair.D[0]);
}

template <class T>
Interval<T> psi(const ParametricPair<T>& pair, const T& v) {
  return psi_image(pair, v).range;
}

/// Optimal-face description attached to a transition point: the two endpoint
/// optimizers of the (nondegenerate) image interval.
template <class T>
struct TransitionWitness {
  T point{};
  Vec<T> arg_lo;
  Vec<T> arg_hi;
};

template <class T>
struct InvariancyDecomposition {
  Side side = Side::primal;
  Interval<T> theta;
  std::vector<T> transition_points;          // strictly increasing
  std::vector<Interval<T>> intervals;        // open, pairwise disjoint
  std::vector<TransitionWitness<T>> witnesses;  // parallel to transition_points
  bool converged = true;
  std::string diagnostic;
};

/// Decomposes the projection interval of one side into transition points and
/// open invariancy intervals by endpoint hopping: a transition point's image
/// (through the opposite map) is a nondegenerate interval whose endpoints map
/// back to the adjacent invariancy intervals; an interior point's image is a
/// singleton whose preimage is the closure of its invariancy interval.
template <class T>
InvariancyDecomposition<T> sweep(const ParametricPair<T>& pair, Side side) {
  detail::require_rank1(pair);
  InvariancyDecomposition<T> dec;
  dec.side = side;
  dec.theta = theta_interval(pair, side);
  if (dec.theta.empty) return dec;

  auto F = [&](const T& t) {  // this-side parameter -> other-side image
    return side == Side::primal ? psi_image(pair, t) : phi_image(pair, t);
  };
  auto G = [&](const T& s) {  // other-side parameter -> this-side image
    return side == Side::primal ? phi_image(pair, s) : psi_image(pair, s);
  };
  auto eq = [](const T& a, const T& b) { return arith<T>::is_zero(a - b); };

  std::map<T, TransitionWitness<T>> points;
  std::vector<Interval<T>> intervals;
  auto record_interval = [&](const Interval<T>& closed) {
    Interval<T> open = closed;
    open.lo_closed = open.hi_closed = false;
    for (const auto& iv : intervals)
      if (iv == open) return;
    intervals.push_back(open);
  };

  if (dec.theta.singleton()) {
    auto img = F(dec.theta.lo);
    points[dec.theta.lo] = {dec.theta.lo, img.arg_lo, img.arg_hi};
  } else {
    const std::size_t hop_cap = pair.n() + 2;
    // Walks one direction from `start`, alternating F and G evaluations.
    auto walk = [&](T start, bool rightward) {
      T v = start;
      for (std::size_t hop = 0;; ++hop) {
        if (hop >= hop_cap) {
          dec.converged = false;
          dec.diagnostic = "hop limit exceeded (transition count bound violated?)";
          return;
        }
        auto img = F(v);
        if (img.range.singleton()) {
          // Interior point (or a degenerate zero-length crossing).
          auto back = G(img.range.lo);
          const Interval<T>& J = back.range;
          if (J.singleton() && eq(J.lo, v)) {
            // Zero-length invariancy interval: merge into a transition point
            // and step past it through an interior probe.
            points.insert({v, {v, back.arg_lo, back.arg_hi}});
            T next;
            if (rightward) {
              if (dec.theta.has_hi) {
                if (eq(dec.theta.hi, v)) return;
                next = (v + dec.theta.hi) / T(2);
              } else {
                next = v + T(1);
              }
            } else {
              if (dec.theta.has_lo) {
                if (eq(dec.theta.lo, v)) return;
                next = (v + dec.theta.lo) / T(2);
              } else {
                next = v - T(1);
              }
            }
            v = next;
            continue;
          }
          record_interval(J);
          if (rightward) {
            if (!J.has_hi) return;
            v = J.hi;
          } else {
            if (!J.has_lo) return;
            v = J.lo;
          }
          continue;
        }
        // Transition point.
        points.insert({v, {v, img.arg_lo, img.arg_hi}});
        bool advanced = false;
        for (int which = 0; which < 2 && !advanced; ++which) {
          bool use_lo = which == 0;
          if (use_lo ? !img.range.has_lo : !img.range.has_hi) continue;
          T e = use_lo ? img.range.lo : img.range.hi;
          auto back = G(e);
          const Interval<T>& J = back.range;
          if (rightward) {
            if (J.has_lo && eq(J.lo, v) && (!J.has_hi || J.hi > v)) {
              record_interval(J);
              if (!J.has_hi) return;
              v = J.hi;
              advanced = true;
            }
          } else {
            if (J.has_hi && eq(J.hi, v) && (!J.has_lo || J.lo < v)) {
              record_interval(J);
              if (!J.has_lo) return;
              v = J.lo;
              advanced = true;
            }
          }
        }
        if (!advanced) {
          bool at_border = rightward ? (dec.theta.has_hi && eq(dec.theta.hi, v))
                                     : (dec.theta.has_lo && eq(dec.theta.lo, v));
          if (!at_border) {
            dec.converged = false;
            dec.diagnostic = "no continuation from transition point";
          }
          return;
        }
      }
    };

    if (dec.theta.has_lo) {
      walk(dec.theta.lo, true);
    } else if (dec.theta.has_hi) {
      walk(dec.theta.hi, false);
    } else {
      // Two-sided unbounded: seed at 0.
      auto img = F(T(0));
      if (img.range.singleton()) {
        auto back = G(img.range.lo);
        record_interval(back.range);
        if (back.range.has_hi) walk(back.range.hi, true);
        if (back.range.has_lo) walk(back.range.lo, false);
      } else {
        walk(T(0), true);
        walk(T(0), false);
      }
    }
  }

  for (auto& [pt, wit] : points) {
    dec.transition_points.push_back(pt);
    dec.witnesses.push_back(wit);
  }
  dec.intervals = intervals;
  std::sort(dec.intervals.begin(), dec.intervals.end(),
            [](const Interval<T>& a, const Interval<T>& b) {
              if (a.has_lo != b.has_lo) return !a.has_lo;
              if (!a.has_lo) return false;
              return a.lo < b.lo;
            });

  // Covering check: closures of the intervals plus the transition points must
  // tile theta exactly.
  if (dec.converged) {
    auto eqt = [](const T& a, const T& b) { return arith<T>::is_zero(a - b); };
    const auto& tp = dec.transition_points;
    const auto& ivs = dec.intervals;
    bool ok = true;
    if (dec.theta.singleton()) {
      ok = tp.size() == 1 && ivs.empty() && eqt(tp[0], dec.theta.lo);
    } else {
      std::size_t expect = tp.size() + 1;
      if (dec.theta.has_lo && !tp.empty() && eqt(tp.front(), dec.theta.lo)) --expect;
      if (dec.theta.has_hi && !tp.empty() && eqt(tp.back(), dec.theta.hi)) --expect;
      ok = ivs.size() == expect && !tp.empty();
      if (ok) {
        std::size_t k = 0;
        if (!(dec.theta.has_lo && eqt(tp.front(), dec.theta.lo))) {
          ok = ok && !ivs[0].has_lo == !dec.theta.has_lo &&
               (!ivs[0].has_lo || eqt(ivs[0].lo, dec.theta.lo)) && ivs[0].has_hi &&
               eqt(ivs[0].hi, tp.front());
          k = 1;
        }
        for (std::size_t i = 0; i + 1 < tp.size(); ++i, ++k)
          ok = ok && k < ivs.size() && ivs[k].has_lo && eqt(ivs[k].lo, tp[i]) &&
               ivs[k].has_hi && eqt(ivs[k].hi, tp[i + 1]);
        if (!(dec.theta.has_hi && eqt(tp.back(), dec.theta.hi))) {
          ok = ok && k < ivs.size() && ivs[k].has_lo && eqt(ivs[k].lo, tp.back()) &&
               !ivs[k].has_hi == !dec.theta.has_hi &&
               (!ivs[k].has_hi || eqt(ivs[k].hi, dec.theta.hi));
        }
      }
    }
    if (!ok) {
      dec.converged = false;
      dec.diagnostic = "covering verification failed";
    }
  }
  return dec;
}

struct RatioTestResult {
  std::set<std::size_t> J;
};

/// The single-row ratio test J = {j : a / b_1j > 0, b_1j != 0}.
template <class T>
RatioTestResult ratio_test_single_row(const Vec<T>& b_row, const T& a) {
  if (is_zero_vec(b_row)) throw Error(Error::Code::zero_row, "all-zero ratio-test row");
  RatioTestResult out;
  for (std::size_t j = 0; j < b_row.size(); ++j) {
    if (arith<T>::is_zero(b_row[j])) continue;
    if (arith<T>::strict_pos(a / b_row[j])) out.J.insert(j);
  }
  return out;
}

}  // namespace paralp
