#include <catch_amalgamated.hpp>

#include "paralp/generators.hpp"
#include "paralp/parametric.hpp"

using namespace paralp;
using R = Rational;

namespace {

// Random assumption-clean pair with l = r = 1: m = n - 2, anchor and cost
// nonnegative by construction, B the first complement row of A.
ParametricPair<R> random_clean_pair(std::uint64_t seed) {
  SplitMix64 rng(seed);
  for (int attempt = 0;; ++attempt) {
    std::size_t n = 3 + rng.next() % 8;  // 3..10
    std::size_t m = n - 2;
    Mat<R> A(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) A(i, j) = R(rng.next_int(-9, 9));
    if (matrix_rank(A) != m) continue;
    Vec<R> d(n), c(n);
    for (auto& v : d) v = R(rng.next_int(0, 9));
    for (auto& v : c) v = R(rng.next_int(0, 9));
    LinearProgram<R> lp;
    lp.A = A;
    lp.b = matvec(A, d);
    lp.c = c;
    lp.name = "pair_s" + std::to_string(seed);
    auto oc = orthogonal_complement(A);
    Mat<R> B;
    B.cols = n;
    B.append_row(oc.M.row(0));
    return build_parametric_pair(lp, d, B);
  }
}

}  // namespace

TEST_CASE("theta intervals of the fixture") {
  auto pair = fixture_t1_pair<R>();
  auto thp = theta_interval(pair, Side::primal);
  CHECK(thp == Interval<R>::closed(R(-1), R(1) / 2));
  auto thd = theta_interval(pair, Side::dual);
  CHECK(thd == Interval<R>::whole());
}

TEST_CASE("theta requires a parametric direction") {
  LinearProgram<R> lp;
  lp.A = Mat<R>{{R(1), R(0)}, {R(0), R(1)}};
  lp.b = {R(1), R(1)};
  lp.c = {R(1), R(1)};
  Mat<R> B;
  B.cols = 2;  // l = 0, and A spans everything: r = 0
  auto pair = build_parametric_pair(lp, Vec<R>{R(1), R(1)}, B);
  try {
    theta_interval(pair, Side::primal);
    FAIL("expected r=1 requirement");
  } catch (const Error& e) {
    CHECK(e.code() == Error::Code::no_parametric_direction);
  }
}

TEST_CASE("phi values on the fixture") {
  auto pair = fixture_t1_pair<R>();
  CHECK(phi(pair, R(-1) / 3) == Interval<R>::closed(R(-1), R(1) / 2));
  CHECK(phi(pair, R(-1)) == Interval<R>::point(R(1) / 2));
  CHECK(phi(pair, R(1)) == Interval<R>::point(R(-1)));
}

TEST_CASE("psi values on the fixture") {
  auto pair = fixture_t1_pair<R>();
  CHECK(psi(pair, R(0)) == Interval<R>::point(R(-1) / 3));
  CHECK(psi(pair, R(1) / 2) == Interval<R>::ray_down(R(-1) / 3));
  CHECK(psi(pair, R(-1)) == Interval<R>::ray_up(R(-1) / 3));
}

TEST_CASE("psi rejects parameters outside theta") {
  auto pair = fixture_t1_pair<R>();
  try {
    psi(pair, R(2));
    FAIL("expected outside-theta");
  } catch (const Error& e) {
    CHECK(e.code() == Error::Code::outside_theta);
  }
}

TEST_CASE("primal sweep of the fixture") {
  auto pair = fixture_t1_pair<R>();
  auto dec = sweep(pair, Side::primal);
  CHECK(dec.converged);
  CHECK(dec.transition_points == std::vector<R>{R(-1), R(1) / 2});
  REQUIRE(dec.intervals.size() == 1);
  CHECK(dec.intervals[0] == Interval<R>::open(R(-1), R(1) / 2));
  REQUIRE(dec.witnesses.size() == 2);
  // A primal transition point's witnesses live in the dual-side feasible set.
  CHECK(matvec(pair.B, dec.witnesses[0].arg_lo) == pair.a);
}

TEST_CASE("dual sweep of the fixture") {
  auto pair = fixture_t1_pair<R>();
  auto dec = sweep(pair, Side::dual);
  CHECK(dec.converged);
  CHECK(dec.transition_points == std::vector<R>{R(-1) / 3});
  REQUIRE(dec.intervals.size() == 2);
  CHECK(dec.intervals[0] == Interval<R>::ray_down(R(-1) / 3, false));
  CHECK(dec.intervals[1] == Interval<R>::ray_up(R(-1) / 3, false));
}

TEST_CASE("single-point theta gives one transition point and no intervals") {
  // Unique feasible point: x1 + x2 = 0 over x >= 0.
  LinearProgram<R> lp;
  lp.A = Mat<R>{{R(1), R(1)}};
  lp.b = {R(0)};
  lp.c = {R(1), R(2)};
  Mat<R> B;
  B.cols = 2;  // l = 0
  auto pair = build_parametric_pair(lp, Vec<R>{R(0), R(0)}, B);
  REQUIRE(pair.r() == 1);
  auto dec = sweep(pair, Side::primal);
  CHECK(dec.converged);
  CHECK(dec.theta.singleton());
  CHECK(dec.transition_points.size() == 1);
  CHECK(dec.intervals.empty());
}

TEST_CASE("ratio test single row") {
  CHECK(ratio_test_single_row(Vec<R>{R(1), R(-1), R(0)}, R(1)).J ==
        std::set<std::size_t>{0});
  CHECK(ratio_test_single_row(Vec<R>{R(1), R(-1), R(0)}, R(-1)).J ==
        std::set<std::size_t>{1});
  CHECK_THROWS_AS(ratio_test_single_row(Vec<R>{R(0), R(0), R(0)}, R(1)), Error);
}

TEST_CASE("phi images stay inside the primal theta interval") {
  auto pair = fixture_t1_pair<R>();
  auto thp = theta_interval(pair, Side::primal);
  for (int k = -3; k <= 3; ++k) {
    auto img = phi(pair, R(k) / 2);
    if (img.has_lo) CHECK(thp.contains(img.lo));
    if (img.has_hi) CHECK(thp.contains(img.hi));
  }
}

TEST_CASE("biconditional between phi and psi on sampled grids") {
  for (std::uint64_t seed : {7ULL, 8ULL, 11ULL}) {
    auto pair = random_clean_pair(seed);
    auto thp = theta_interval(pair, Side::primal);
    auto thd = theta_interval(pair, Side::dual);
    auto window = [](const Interval<R>& iv) {
      R lo = iv.has_lo ? iv.lo : R(-5);
      R hi = iv.has_hi ? iv.hi : R(5);
      if (lo > hi) lo = hi;
      return std::pair<R, R>(lo, hi);
    };
    auto [ulo, uhi] = window(thd);
    auto [vlo, vhi] = window(thp);
    std::vector<R> us, vs;
    std::vector<Interval<R>> phis, psis;
    for (int k = 0; k <= 4; ++k) {
      R u = ulo + (uhi - ulo) * k / 4;
      R v = vlo + (vhi - vlo) * k / 4;
      us.push_back(u);
      vs.push_back(v);
      phis.push_back(phi(pair, u));
      psis.push_back(psi(pair, v));
    }
    for (std::size_t i = 0; i < us.size(); ++i)
      for (std::size_t j = 0; j < vs.size(); ++j) {
        bool v_in_phi = phis[i].closure().contains(vs[j]);
        bool u_in_psi = psis[j].closure().contains(us[i]);
        CHECK(v_in_phi == u_in_psi);
      }
  }
}

TEST_CASE("sweep structure on random clean pairs") {
  for (std::uint64_t seed = 20; seed < 35; ++seed) {
    auto pair = random_clean_pair(seed);
    auto dec = sweep(pair, Side::primal);
    INFO("pair seed " << seed);
    REQUIRE(dec.converged);
    // Count bound (recorded as data elsewhere; here the corpus satisfies it).
    CHECK(dec.transition_points.size() <= pair.n());
    CHECK(dec.intervals.size() <= pair.n());
    // Transition points strictly increasing, intervals pairwise disjoint.
    for (std::size_t i = 0; i + 1 < dec.transition_points.size(); ++i)
      CHECK(dec.transition_points[i] < dec.transition_points[i + 1]);
    for (std::size_t i = 0; i + 1 < dec.intervals.size(); ++i) {
      REQUIRE(dec.intervals[i].has_hi);
      REQUIRE(dec.intervals[i + 1].has_lo);
      CHECK(dec.intervals[i].hi <= dec.intervals[i + 1].lo);
    }
  }
}

TEST_CASE("alternation: the image of an interior point maps back to the interval") {
  for (std::uint64_t seed : {40ULL, 41ULL, 42ULL, 43ULL}) {
    auto pair = random_clean_pair(seed);
    auto dec = sweep(pair, Side::primal);
    REQUIRE(dec.converged);
    for (const auto& iv : dec.intervals) {
      if (!iv.has_lo || !iv.has_hi) continue;
      R mid = (iv.lo + iv.hi) / 2;
      auto img = psi(pair, mid);
      REQUIRE(img.singleton());
      CHECK(phi(pair, img.lo) == Interval<R>::closed(iv.lo, iv.hi));
    }
  }
}

TEST_CASE("finite theta endpoints map to one-sided rays") {
  auto pair = fixture_t1_pair<R>();
  auto thp = theta_interval(pair, Side::primal);
  REQUIRE((thp.has_lo && thp.has_hi));
  auto left = psi(pair, thp.lo);
  CHECK((left.has_lo && !left.has_hi));
  auto right = psi(pair, thp.hi);
  CHECK((!right.has_lo && right.has_hi));
}

TEST_CASE("covering: phi over dual transition points tiles the primal theta") {
  auto pair = fixture_t1_pair<R>();
  auto thp = theta_interval(pair, Side::primal);
  auto dual = sweep(pair, Side::dual);
  REQUIRE(dual.converged);
  // Union of phi over dual transition points plus interior images.
  std::vector<Interval<R>> pieces;
  for (const auto& u : dual.transition_points) pieces.push_back(phi(pair, u));
  for (const auto& iv : dual.intervals) {
    R probe = iv.has_lo ? (iv.has_hi ? R((iv.lo + iv.hi) / 2) : R(iv.lo + 1))
                        : (iv.has_hi ? R(iv.hi - 1) : R(0));
    pieces.push_back(phi(pair, probe));
  }
  // Every piece inside theta, and theta's endpoints reached.
  bool hit_lo = false, hit_hi = false;
  for (const auto& p : pieces) {
    REQUIRE(p.has_lo);
    REQUIRE(p.has_hi);
    CHECK(thp.contains(p.lo));
    CHECK(thp.contains(p.hi));
    if (p.lo == thp.lo) hit_lo = true;
    if (p.hi == thp.hi) hit_hi = true;
  }
  CHECK(hit_lo);
  CHECK(hit_hi);
}
