#include <catch_amalgamated.hpp>

#include "paralp/generators.hpp"
#include "paralp/simplex.hpp"

using namespace paralp;
using R = Rational;

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("phase1 finds a feasible basis on the fixture") {
  auto lp = validate_standard_form(fixture_t1_lp<R>());
  auto p1 = phase1(lp);
  REQUIRE(p1.basis.has_value());
  Vec<R> x = detail::basic_solution(lp.A, lp.b, *p1.basis);
  for (const auto& v : x) CHECK(v >= 0);
  CHECK(matvec(lp.A, x) == lp.b);
}

TEST_CASE("phase1 detects infeasibility") {
  LinearProgram<R> lp;
  lp.A = Mat<R>{{R(1), R(1)}};
  lp.b = {R(-1)};
  lp.c = {R(0), R(0)};
  CHECK_FALSE(phase1(validate_standard_form(lp)).basis.has_value());
}

TEST_CASE("phase1 on an identity system") {
  LinearProgram<R> lp;
  lp.A = Mat<R>{{R(1), R(0)}, {R(0), R(1)}};
  lp.b = {R(1), R(1)};
  lp.c = {R(0), R(0)};
  auto p1 = phase1(validate_standard_form(lp));
  REQUIRE(p1.basis.has_value());
  Vec<R> x = detail::basic_solution(lp.A, lp.b, *p1.basis);
  CHECK(x == Vec<R>{R(1), R(1)});
}

TEST_CASE("solve reaches the fixture optimum from a given vertex") {
  auto lp = validate_standard_form(fixture_t1_lp<R>());
  auto sol = solve(lp, PivotRule::bland, Basis{0});
  REQUIRE(sol.status == SolveStatus::optimal);
  CHECK(sol.x == Vec<R>{R(0), R(0), R(3)});
  CHECK(sol.objective == R(0));
  CHECK(kkt_check(lp, {sol.x, sol.w, sol.y}).ok);
}

TEST_CASE("zero cost means zero phase-II pivots") {
  auto lp = validate_standard_form(fixture_t1_lp<R>());
  lp.c = {R(0), R(0), R(0)};
  auto sol = solve(lp, PivotRule::bland);
  REQUIRE(sol.status == SolveStatus::optimal);
  CHECK(sol.objective == R(0));
  CHECK(sol.trace.steps.empty());
}

TEST_CASE("unbounded problem yields an improving ray certificate") {
  LinearProgram<R> lp;
  lp.A = Mat<R>{{R(1), R(-1)}};
  lp.b = {R(0)};
  lp.c = {R(-1), R(0)};
  auto sol = solve(validate_standard_form(lp), PivotRule::bland);
  REQUIRE(sol.status == SolveStatus::unbounded);
  CHECK(is_zero_vec(matvec(lp.A, sol.ray)));
  for (const auto& v : sol.ray) CHECK(v >= 0);
  CHECK(dot(lp.c, sol.ray) < 0);
  CHECK(sol.ray == Vec<R>{R(1), R(1)});
}

TEST_CASE("reduced costs per basis") {
  auto lp = validate_standard_form(fixture_t1_lp<R>());
  {
    auto [w, y] = reduced_costs(lp, Basis{2});
    CHECK(w == Vec<R>{R(0)});
    CHECK(y == Vec<R>{R(2), R(1), R(0)});
  }
  {
    auto [w, y] = reduced_costs(lp, Basis{0});
    CHECK(w == Vec<R>{R(2)});
    CHECK(y == Vec<R>{R(0), R(-1), R(-2)});
  }
  {
    LinearProgram<R> sq;
    sq.A = Mat<R>{{R(1), R(0)}, {R(0), R(1)}};
    sq.b = {R(1), R(2)};
    sq.c = {R(5), R(-7)};
    auto [w, y] = reduced_costs(validate_standard_form(sq), Basis{0, 1});
    CHECK(w == Vec<R>{R(5), R(-7)});
    CHECK(y == Vec<R>{R(0), R(0)});
  }
}

TEST_CASE("brute force on the fixture") {
  auto lp = validate_standard_form(fixture_t1_lp<R>());
  auto res = brute_force_optimum(lp);
  REQUIRE(res.status == SolveStatus::optimal);
  CHECK(res.value == R(0));
  REQUIRE(res.vertices.size() == 1);
  CHECK(res.vertices[0] == Vec<R>{R(0), R(0), R(3)});

  lp.c = {R(0), R(0), R(0)};
  auto all = brute_force_optimum(lp);
  REQUIRE(all.status == SolveStatus::optimal);
  CHECK(all.vertices.size() == 3);
}

TEST_CASE("brute force detects unboundedness") {
  LinearProgram<R> lp;
  lp.A = Mat<R>{{R(1), R(-1)}};
  lp.b = {R(0)};
  lp.c = {R(-1), R(0)};
  CHECK(brute_force_optimum(validate_standard_form(lp)).status ==
        SolveStatus::unbounded);
}

TEST_CASE("brute force size guard") {
  LinearProgram<R> lp;
  lp.A = Mat<R>(1, 30);
  for (std::size_t j = 0; j < 30; ++j) lp.A(0, j) = R(1);
  lp.b = {R(1)};
  lp.c = Vec<R>(30, R(0));
  CHECK_THROWS_AS(brute_force_optimum(lp), Error);
}

TEST_CASE("solver agrees with brute force on random instances") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    SplitMix64 mix(seed);
    std::size_t m = 1 + mix.next() % 4;
    std::size_t n = m + 1 + mix.next() % (10 - m);
    auto lp = validate_standard_form(gen_random_bounded<R>(m, n, seed));
    auto sol = solve(lp, PivotRule::bland);
    auto oracle = brute_force_optimum(lp);
    REQUIRE(sol.status == oracle.status);
    REQUIRE(sol.status == SolveStatus::optimal);
    CHECK(sol.objective == oracle.value);
    CHECK(kkt_check(lp, {sol.x, sol.w, sol.y}).ok);
    // Bland's rule can never revisit a basis in exact arithmetic.
    CHECK(sol.trace.steps.size() <= lp.n() * binom(lp.n(), lp.m()));
  }
}

TEST_CASE("dantzig matches bland on optima") {
  for (std::uint64_t seed = 300; seed < 310; ++seed) {
    auto lp = validate_standard_form(gen_random_bounded<R>(2, 6, seed));
    auto a = solve(lp, PivotRule::bland);
    auto b = solve(lp, PivotRule::dantzig);
    REQUIRE(a.status == SolveStatus::optimal);
    REQUIRE(b.status == SolveStatus::optimal);
    CHECK(a.objective == b.objective);
  }
}

TEST_CASE("phase-II objective never increases under bland or dantzig") {
  for (PivotRule rule : {PivotRule::bland, PivotRule::dantzig}) {
    auto lp = validate_standard_form(gen_klee_minty<R>(4));
    auto sol = solve(lp, rule, klee_minty_start_basis(4));
    REQUIRE(sol.status == SolveStatus::optimal);
    R prev = dot(lp.c, detail::basic_solution(lp.A, lp.b, klee_minty_start_basis(4)));
    for (const auto& step : sol.trace.steps) {
      CHECK(step.objective <= prev);
      prev = step.objective;
    }
  }
}

TEST_CASE("dantzig walks the whole deformed cube") {
  for (std::size_t D = 3; D <= 5; ++D) {
    auto lp = validate_standard_form(gen_klee_minty<R>(D));
    auto sol = solve(lp, PivotRule::dantzig, klee_minty_start_basis(D));
    REQUIRE(sol.status == SolveStatus::optimal);
    CHECK(sol.trace.steps.size() == (std::size_t(1) << D) - 1);
  }
}

TEST_CASE("float mode solves the fixture within tolerance") {
  auto lp = validate_standard_form(fixture_t1_lp<double>());
  auto sol = solve(lp, PivotRule::bland);
  REQUIRE(sol.status == SolveStatus::optimal);
  CHECK(sol.objective == Catch::Approx(0.0).margin(1e-8));
}
