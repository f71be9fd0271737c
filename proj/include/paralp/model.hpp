#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "paralp/linalg.hpp"
#include "paralp/scalar.hpp"

namespace paralp {

/// Standard-form LP: minimize <c, x> subject to Ax = b, x >= 0.
/// After validate_standard_form the rows of A are linearly independent.
template <class T>
struct LinearProgram {
  Mat<T> A;
  Vec<T> b;
  Vec<T> c;
  std::string name;

  std::size_t m() const { return A.rows; }
  std::size_t n() const { return A.cols; }

  bool operator==(const LinearProgram&) const = default;
};

struct ValidationReport {
  std::vector<std::size_t> dropped_rows;  // original indices of redundant rows
};

/// Checks dimensions and reduces A to full row rank. A dependent row whose
/// right-hand side is consistent is dropped (and reported); an inconsistent
/// one makes the whole system infeasible.
template <class T>
LinearProgram<T> validate_standard_form(const LinearProgram<T>& raw,
                                        ValidationReport* report = nullptr) {
  if (raw.n() == 0) throw Error(Error::Code::empty_problem, "no variables");
  if (raw.b.size() != raw.m() || raw.c.size() != raw.n())
    throw Error(Error::Code::dimension_mismatch,
                "b/c lengths do not match A (" + std::to_string(raw.m()) + "x" +
                    std::to_string(raw.n()) + ")");

  LinearProgram<T> lp;
  lp.c = raw.c;
  lp.name = raw.name;
  lp.A.cols = raw.n();

  // Augmented RREF of the rows kept so far; a new row reduces to zero against
  // it iff it is dependent on the kept rows.
  Mat<T> red;
  red.cols = raw.n() + 1;
  for (std::size_t i = 0; i < raw.m(); ++i) {
    Vec<T> aug = raw.A.row(i);
    aug.push_back(raw.b[i]);
    Mat<T> trial = red;
    trial.append_row(aug);
    if (rref(trial).size() == red.rows) {
      // Fully dependent including rhs: redundant.
      if (report) report->dropped_rows.push_back(i);
      continue;
    }
    Mat<T> trial_A;
    trial_A.cols = raw.n();
    for (std::size_t r = 0; r < red.rows; ++r) {
      Vec<T> row = red.row(r);
      row.pop_back();
      trial_A.append_row(row);
    }
    {
      Vec<T> row = raw.A.row(i);
      trial_A.append_row(row);
    }
    if (rref(trial_A).size() == red.rows)
      throw Error(Error::Code::inconsistent_rows,
                  "row " + std::to_string(i) + " is dependent with inconsistent rhs");
    lp.A.append_row(raw.A.row(i));
    lp.b.push_back(raw.b[i]);
    red = trial;
    rref(red);
  }
  return lp;
}

template <class T>
struct OrthoComplement {
  Mat<T> M;   // r x n, mutually orthogonal rows
  Vec<T> D;   // diagonal of M M^T, strictly positive
};

/// Rows spanning the orthogonal complement of rowspace(A) (+ rowspace(B) when
/// given). Exact mode keeps unnormalized integer-proportional rows so that
/// D = diag(M M^T) carries the scaling; float mode normalizes so D is I.
template <class T>
OrthoComplement<T> orthogonal_complement(const Mat<T>& A,
                                         const std::optional<Mat<T>>& B_opt = {}) {
  Mat<T> stacked = A;
  if (B_opt) {
    const Mat<T>& B = *B_opt;
    if (B.cols != A.cols)
      throw Error(Error::Code::dimension_mismatch, "B column count mismatch");
    for (std::size_t i = 0; i < B.rows; ++i)
      for (std::size_t k = 0; k < A.rows; ++k)
        if (!arith<T>::is_zero(dot(B.row(i), A.row(k))))
          throw Error(Error::Code::not_orthogonal, "B row not orthogonal to A");
    if (matrix_rank(B) != B.rows)
      throw Error(Error::Code::rank_deficient, "B rows dependent");
    for (std::size_t i = 0; i < B.rows; ++i) stacked.append_row(B.row(i));
  }
  OrthoComplement<T> out;
  out.M.cols = A.cols;
  std::vector<Vec<T>> basis = null_space(stacked);
  if (basis.empty()) return out;
  basis = orthogonalize(std::move(basis));
  for (auto& row : basis) out.M.append_row(canonicalize(std::move(row)));
  for (std::size_t i = 0; i < out.M.rows; ++i)
    out.D.push_back(dot(out.M.row(i), out.M.row(i)));
  return out;
}

/// The r=1..r parametric construction tying the objective-side and rhs-side
/// perturbed problems together. Rowspaces of A, B, M are mutually orthogonal
/// and sum to R^n; b = Ad and a = Bc.
template <class T>
struct ParametricPair {
  LinearProgram<T> lp;
  Vec<T> d;
  Mat<T> B;
  Vec<T> a;
  Mat<T> M;
  Vec<T> D;  // diagonal of M M^T
  bool assumption_clean = false;  // (d, c) >= 0

  std::size_t n() const { return lp.n(); }
  std::size_t m() const { return lp.m(); }
  std::size_t l() const { return B.rows; }
  std::size_t r() const { return M.rows; }
};

template <class T>
ParametricPair<T> build_parametric_pair(const LinearProgram<T>& lp, const Vec<T>& d,
                                        const Mat<T>& B) {
  if (d.size() != lp.n())
    throw Error(Error::Code::dimension_mismatch, "d length mismatch");
  Vec<T> Ad = matvec(lp.A, d);
  for (std::size_t i = 0; i < lp.m(); ++i)
    if (!arith<T>::is_zero(Ad[i] - lp.b[i]))
      throw Error(Error::Code::anchor_mismatch, "Ad != b");

  ParametricPair<T> pair;
  pair.lp = lp;
  pair.d = d;
  pair.B = B;
  pair.a = matvec(B, lp.c);
  OrthoComplement<T> oc = orthogonal_complement(lp.A, std::optional<Mat<T>>(B));
  pair.M = oc.M;
  pair.D = oc.D;
  if (lp.m() + pair.l() + pair.r() != lp.n())
    throw Error(Error::Code::rank_deficient, "rank A + rank B + rank M != n");

  pair.assumption_clean = true;
  for (const auto& x : d)
    if (!arith<T>::nonneg(x)) pair.assumption_clean = false;
  for (const auto& x : lp.c)
    if (!arith<T>::nonneg(x)) pair.assumption_clean = false;
  return pair;
}

template <class T>
struct KktCertificate {
  Vec<T> x;  // primal point
  Vec<T> w;  // dual multipliers
  Vec<T> y;  // dual slacks
};

struct KktVerdict {
  bool ok = true;
  std::vector<std::string> violations;

  void fail(const std::string& what) {
    ok = false;
    violations.push_back(what);
  }
  explicit operator bool() const { return ok; }
};

/// Checks Ax=b, x>=0, A^T w + y = c, y>=0, <x,y>=0.
template <class T>
KktVerdict kkt_check(const LinearProgram<T>& lp, const KktCertificate<T>& cert) {
  KktVerdict v;
  if (cert.x.size() != lp.n() || cert.w.size() != lp.m() || cert.y.size() != lp.n())
    throw Error(Error::Code::dimension_mismatch, "certificate dimensions");
  Vec<T> Ax = matvec(lp.A, cert.x);
  for (std::size_t i = 0; i < lp.m(); ++i)
    if (!arith<T>::is_zero(Ax[i] - lp.b[i])) { v.fail("Ax=b"); break; }
  for (const auto& xi : cert.x)
    if (!arith<T>::nonneg(xi)) { v.fail("x>=0"); break; }
  Vec<T> Atw = tmatvec(lp.A, cert.w);
  for (std::size_t j = 0; j < lp.n(); ++j)
    if (!arith<T>::is_zero(Atw[j] + cert.y[j] - lp.c[j])) { v.fail("A^Tw+y=c"); break; }
  for (const auto& yj : cert.y)
    if (!arith<T>::nonneg(yj)) { v.fail("y>=0"); break; }
  if (!arith<T>::is_zero(dot(cert.x, cert.y))) v.fail("<x,y>=0");
  return v;
}

template <class T>
struct ParametricCertificate {
  Vec<T> x_bar;
  Vec<T> y_bar;
  Vec<T> u;
  Vec<T> v;
};

/// The D-scaled parametric KKT system:
///   A xbar = Ad,  M xbar = Md + Dv,  xbar >= 0,
///   B ybar = Bc,  M ybar = Mc + Du,  ybar >= 0,  <xbar, ybar> = 0.
template <class T>
KktVerdict parametric_kkt_check(const ParametricPair<T>& pair,
                                const ParametricCertificate<T>& cert) {
  KktVerdict verdict;
  if (cert.x_bar.size() != pair.n() || cert.y_bar.size() != pair.n() ||
      cert.u.size() != pair.r() || cert.v.size() != pair.r())
    throw Error(Error::Code::dimension_mismatch, "parametric certificate dimensions");

  const auto& lp = pair.lp;
  Vec<T> Ax = matvec(lp.A, cert.x_bar);
  Vec<T> Ad = matvec(lp.A, pair.d);
  for (std::size_t i = 0; i < pair.m(); ++i)
    if (!arith<T>::is_zero(Ax[i] - Ad[i])) { verdict.fail("A xbar = Ad"); break; }

  Vec<T> Mx = matvec(pair.M, cert.x_bar);
  Vec<T> Md = matvec(pair.M, pair.d);
  for (std::size_t i = 0; i < pair.r(); ++i)
    if (!arith<T>::is_zero(Mx[i] - Md[i] - pair.D[i] * cert.v[i])) {
      verdict.fail("M xbar = Md + Dv");
      break;
    }
  for (const auto& x : cert.x_bar)
    if (!arith<T>::nonneg(x)) { verdict.fail("xbar >= 0"); break; }

  Vec<T> By = matvec(pair.B, cert.y_bar);
  Vec<T> Bc = matvec(pair.B, lp.c);
  for (std::size_t i = 0; i < pair.l(); ++i)
    if (!arith<T>::is_zero(By[i] - Bc[i])) { verdict.fail("B ybar = Bc"); break; }

  Vec<T> My = matvec(pair.M, cert.y_bar);
  Vec<T> Mc = matvec(pair.M, lp.c);
  for (std::size_t i = 0; i < pair.r(); ++i)
    if (!arith<T>::is_zero(My[i] - Mc[i] - pair.D[i] * cert.u[i])) {
      verdict.fail("M ybar = Mc + Du");
      break;
    }
  for (const auto& y : cert.y_bar)
    if (!arith<T>::nonneg(y)) { verdict.fail("ybar >= 0"); break; }

  if (!arith<T>::is_zero(dot(cert.x_bar, cert.y_bar)))
    verdict.fail("<xbar, ybar> = 0");
  return verdict;
}

}  // namespace paralp
