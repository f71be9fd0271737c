#pragma once

#include <algorithm>
#include <chrono>
#include <string>
#include <vector>

#include "paralp/generators.hpp"
#include "paralp/io.hpp"
#include "paralp/pivotpath.hpp"

namespace paralp {

/// Deterministic instance description; the same spec always reproduces a
/// bit-identical instance.
struct InstanceSpec {
  enum class Kind { klee_minty, random_bounded, fixture };
  Kind kind = Kind::fixture;
  std::string name;       // fixture name, or derived when empty
  std::size_t D = 3;      // klee_minty
  std::size_t m = 2;      // random_bounded
  std::size_t n = 5;
  std::uint64_t seed = 1;
};

inline InstanceSpec instance_spec_from_json(const json& j) {
  InstanceSpec spec;
  std::string kind = j.value("kind", "fixture");
  if (kind == "klee-minty" || kind == "klee_minty") {
    spec.kind = InstanceSpec::Kind::klee_minty;
    spec.D = j.value("D", 3);
  } else if (kind == "random" || kind == "random_bounded") {
    spec.kind = InstanceSpec::Kind::random_bounded;
    spec.m = j.value("m", 2);
    spec.n = j.value("n", 5);
    spec.seed = j.value("seed", 1);
  } else if (kind == "fixture") {
    spec.kind = InstanceSpec::Kind::fixture;
  } else {
    throw Error(Error::Code::schema_error, "unknown instance kind: " + kind);
  }
  spec.name = j.value("name", "");
  return spec;
}

template <class T>
LinearProgram<T> materialize(const InstanceSpec& spec) {
  LinearProgram<T> lp;
  switch (spec.kind) {
    case InstanceSpec::Kind::klee_minty:
      lp = gen_klee_minty<T>(spec.D);
      break;
    case InstanceSpec::Kind::random_bounded:
      lp = gen_random_bounded<T>(spec.m, spec.n, spec.seed);
      break;
    case InstanceSpec::Kind::fixture:
      if (!spec.name.empty() && spec.name != "T1")
        throw Error(Error::Code::schema_error, "unknown fixture: " + spec.name);
      lp = fixture_t1_lp<T>();
      break;
  }
  if (!spec.name.empty()) lp.name = spec.name;
  return lp;
}

struct BenchRecord {
  std::string instance;
  std::string rule;
  std::string status;
  std::size_t n = 0;
  std::size_t pivots = 0;
  bool bound_holds = false;
  bool optimal_verified = false;
  double runtime_ms = 0;
  json optimal_value;
};

struct BenchReport {
  std::vector<BenchRecord> records;
  std::size_t total_pivots = 0;
  std::size_t bound_holds = 0;
  std::size_t bound_fails = 0;
};

inline json bench_report_to_json(const BenchReport& rep) {
  json recs = json::array();
  for (const auto& r : rep.records)
    recs.push_back({{"instance", r.instance},
                    {"rule", r.rule},
                    {"status", r.status},
                    {"n", r.n},
                    {"pivots", r.pivots},
                    {"bound_holds", r.bound_holds},
                    {"optimal_verified", r.optimal_verified},
                    {"runtime_ms", r.runtime_ms},
                    {"optimal_value", r.optimal_value}});
  return json{{"records", recs},
              {"summary",
               {{"records", rep.records.size()},
                {"total_pivots", rep.total_pivots},
                {"bound_holds", rep.bound_holds},
                {"bound_fails", rep.bound_fails}}}};
}

inline std::string status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::unbounded: return "unbounded";
  }
  return "?";
}

/// Runs every (instance, rule) pair, KKT-verifying each optimum and
/// cross-checking against the brute-force oracle at desk scale. The pivot
/// bound is recorded, never asserted; an unverifiable optimum aborts the
/// suite with its trace attached.
template <class T>
BenchReport run_bench(const std::vector<InstanceSpec>& specs,
                      const std::vector<PivotRule>& rules) {
  BenchReport report;
  for (const auto& spec : specs) {
    LinearProgram<T> lp = validate_standard_form(materialize<T>(spec));
    for (PivotRule rule : rules) {
      BenchRecord rec;
      rec.instance = lp.name;
      rec.rule = rule_name(rule);
      rec.n = lp.n();
      auto t0 = std::chrono::steady_clock::now();
      SimplexSolution<T> sol;
      if (rule == PivotRule::parametric) {
        auto path = parametric_path_solve(lp);
        sol = path.solution;
        rec.pivots = path.report.pivots_phase2;
      } else {
        std::optional<Basis> start;
        if (spec.kind == InstanceSpec::Kind::klee_minty)
          start = klee_minty_start_basis(spec.D);
        sol = solve(lp, rule, start);
        rec.pivots = sol.trace.steps.size();
      }
      rec.runtime_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
      rec.status = status_name(sol.status);
      rec.bound_holds = rec.pivots <= lp.n();
      if (sol.status == SolveStatus::optimal) {
        rec.optimal_value = scalar_to_json(sol.objective);
        rec.optimal_verified =
            kkt_check(lp, KktCertificate<T>{sol.x, sol.w, sol.y}).ok;
        if (lp.n() <= 10) {
          auto oracle = brute_force_optimum(lp);
          if (oracle.status != SolveStatus::optimal ||
              !arith<T>::is_zero(oracle.value - sol.objective))
            rec.optimal_verified = false;
        }
        if (!rec.optimal_verified)
          throw Error(Error::Code::contract,
                      "unverified optimum on " + lp.name + " (" + rec.rule +
                          "); trace: " + trace_to_json(sol.trace).dump());
      }
      report.total_pivots += rec.pivots;
      if (rec.bound_holds)
        ++report.bound_holds;
      else
        ++report.bound_fails;
      report.records.push_back(std::move(rec));
    }
  }
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const BenchRecord& a, const BenchRecord& b) {
                     return a.instance < b.instance;
                   });
  return report;
}

}  // namespace paralp
