// Command-line front end: solve / sweep / phi / psi / gen / bench.
// Exit codes: 0 success or optimal, 2 infeasible, 3 unbounded,
// 4 assumption violated (flagged but solved), 1 usage or internal error.

#include <CLI11.hpp>

#include <iostream>

#include "paralp/paralp.hpp"

namespace {

using namespace paralp;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitUnbounded = 3;
constexpr int kExitAssumption = 4;

template <class T>
T parse_value(const std::string& s) {
  if constexpr (arith<T>::exact)
    return parse_rational(s);
  else
    return std::stod(s);
}

template <class T>
ParametricPair<T> pair_from_files(const std::string& lp_path,
                                  const std::string& pair_path) {
  LpFile<T> f = load_lp<T>(lp_path);
  if (!pair_path.empty()) {
    json j = load_json(pair_path);
    if (j.contains("d")) f.d = vec_from_json<T>(j.at("d"));
    if (j.contains("B")) f.B = mat_from_json<T>(j.at("B"));
  }
  if (!f.d || !f.B)
    throw Error(Error::Code::schema_error,
                "parametric block {d, B} required (in FILE or --pair PAIRFILE)");
  return build_parametric_pair(validate_standard_form(f.lp), *f.d, *f.B);
}

template <class T>
int cmd_solve(const std::string& file, const std::string& rule_str,
              const std::string& trace_out) {
  LpFile<T> f = load_lp<T>(file);
  LinearProgram<T> lp = validate_standard_form(f.lp);
  PivotRule rule = rule_from_name(rule_str);
  SimplexSolution<T> sol;
  bool assumption_violated = false;
  if (rule == PivotRule::parametric) {
    auto path = parametric_path_solve(lp);
    sol = path.solution;
    assumption_violated = !path.embedding.assumption_clean;
    std::cout << path_report_to_json(path.report).dump(2) << "\n";
  } else {
    sol = solve(lp, rule);
    json out{{"status", status_name(sol.status)}};
    if (sol.status == SolveStatus::optimal) {
      out["objective"] = scalar_to_json(sol.objective);
      out["x"] = vec_to_json(sol.x);
      out["w"] = vec_to_json(sol.w);
      out["y"] = vec_to_json(sol.y);
    } else if (sol.status == SolveStatus::unbounded) {
      out["ray"] = vec_to_json(sol.ray);
    }
    std::cout << out.dump(2) << "\n";
  }
  if (!trace_out.empty()) save_json(trace_to_json(sol.trace), trace_out);
  if (sol.status == SolveStatus::infeasible) return kExitInfeasible;
  if (sol.status == SolveStatus::unbounded) return kExitUnbounded;
  return assumption_violated ? kExitAssumption : kExitOk;
}

template <class T>
int cmd_sweep(const std::string& file, const std::string& side_str,
              const std::string& pair_path, const std::string& out_path) {
  auto pair = pair_from_files<T>(file, pair_path);
  Side side = side_str == "dual" ? Side::dual : Side::primal;
  auto dec = sweep(pair, side);
  json j = decomposition_to_json(dec);
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    save_json(j, out_path);
  return pair.assumption_clean ? kExitOk : kExitAssumption;
}

template <class T>
int cmd_map(const std::string& file, const std::string& pair_path,
            const std::string& value, bool is_phi) {
  auto pair = pair_from_files<T>(file, pair_path);
  T param = parse_value<T>(value);
  Interval<T> iv = is_phi ? phi(pair, param) : psi(pair, param);
  std::cout << interval_to_json(iv).dump(2) << "\n";
  return kExitOk;
}

template <class T>
int cmd_gen(const std::string& kind, std::size_t D, std::size_t m, std::size_t n,
            std::uint64_t seed, const std::string& out_path) {
  LinearProgram<T> lp;
  if (kind == "klee-minty")
    lp = gen_klee_minty<T>(D);
  else if (kind == "random")
    lp = gen_random_bounded<T>(m, n, seed);
  else
    throw Error(Error::Code::schema_error, "unknown kind: " + kind);
  save_lp(lp, out_path);
  return kExitOk;
}

template <class T>
int cmd_bench(const std::string& suite_path, const std::string& report_path) {
  json suite = load_json(suite_path);
  std::vector<InstanceSpec> specs;
  for (const auto& j : suite.value("instances", json::array()))
    specs.push_back(instance_spec_from_json(j));
  std::vector<PivotRule> rules;
  for (const auto& r : suite.value("rules", json::array()))
    rules.push_back(rule_from_name(r.get<std::string>()));
  BenchReport report = run_bench<T>(specs, rules);
  save_json(bench_report_to_json(report), report_path);
  std::cout << "records: " << report.records.size()
            << "  total pivots: " << report.total_pivots
            << "  bound holds/fails: " << report.bound_holds << "/"
            << report.bound_fails << "\n";
  return kExitOk;
}

template <class F>
int dispatch(const std::string& arith_mode, F&& f) {
  if (arith_mode == "float") return f.template operator()<double>();
  return f.template operator()<Rational>();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parametric linear programming toolkit"};
  app.require_subcommand(1);
  std::string arith_mode = "exact";

  auto* solve_cmd = app.add_subcommand("solve", "solve an LP from a JSON file");
  std::string solve_file, solve_rule = "bland", solve_trace;
  solve_cmd->add_option("file", solve_file)->required();
  solve_cmd->add_option("--rule", solve_rule)
      ->check(CLI::IsMember({"bland", "dantzig", "parametric"}));
  solve_cmd->add_option("--arith", arith_mode)->check(CLI::IsMember({"exact", "float"}));
  solve_cmd->add_option("--trace", solve_trace, "write the pivot trace JSON here");

  auto* sweep_cmd = app.add_subcommand("sweep", "invariancy decomposition of one side");
  std::string sweep_file, sweep_side = "primal", sweep_pair, sweep_out;
  sweep_cmd->add_option("file", sweep_file)->required();
  sweep_cmd->add_option("--side", sweep_side)->check(CLI::IsMember({"primal", "dual"}));
  sweep_cmd->add_option("--pair", sweep_pair, "separate JSON file with {d, B}");
  sweep_cmd->add_option("-o,--output", sweep_out);
  sweep_cmd->add_option("--arith", arith_mode)->check(CLI::IsMember({"exact", "float"}));

  auto* phi_cmd = app.add_subcommand("phi", "image of an objective-side parameter");
  std::string phi_file, phi_pair, phi_u;
  phi_cmd->add_option("file", phi_file)->required();
  phi_cmd->add_option("--u", phi_u)->required();
  phi_cmd->add_option("--pair", phi_pair);
  phi_cmd->add_option("--arith", arith_mode)->check(CLI::IsMember({"exact", "float"}));

  auto* psi_cmd = app.add_subcommand("psi", "image of a rhs-side parameter");
  std::string psi_file, psi_pair, psi_v;
  psi_cmd->add_option("file", psi_file)->required();
  psi_cmd->add_option("--v", psi_v)->required();
  psi_cmd->add_option("--pair", psi_pair);
  psi_cmd->add_option("--arith", arith_mode)->check(CLI::IsMember({"exact", "float"}));

  auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
  std::string gen_kind, gen_out;
  std::size_t gen_D = 3, gen_m = 2, gen_n = 5;
  std::uint64_t gen_seed = 1;
  gen_cmd->add_option("--kind", gen_kind)
      ->required()
      ->check(CLI::IsMember({"klee-minty", "random"}));
  gen_cmd->add_option("--D", gen_D);
  gen_cmd->add_option("--m", gen_m);
  gen_cmd->add_option("--n", gen_n);
  gen_cmd->add_option("--seed", gen_seed);
  gen_cmd->add_option("-o,--output", gen_out)->required();

  auto* bench_cmd = app.add_subcommand("bench", "run a benchmark suite");
  std::string bench_suite, bench_report;
  bench_cmd->add_option("--suite", bench_suite)->required();
  bench_cmd->add_option("--report", bench_report)->required();
  bench_cmd->add_option("--arith", arith_mode)->check(CLI::IsMember({"exact", "float"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed())
      return dispatch(arith_mode, [&]<class T>() {
        return cmd_solve<T>(solve_file, solve_rule, solve_trace);
      });
    if (sweep_cmd->parsed())
      return dispatch(arith_mode, [&]<class T>() {
        return cmd_sweep<T>(sweep_file, sweep_side, sweep_pair, sweep_out);
      });
    if (phi_cmd->parsed())
      return dispatch(arith_mode, [&]<class T>() {
        return cmd_map<T>(phi_file, phi_pair, phi_u, true);
      });
    if (psi_cmd->parsed())
      return dispatch(arith_mode, [&]<class T>() {
        return cmd_map<T>(psi_file, psi_pair, psi_v, false);
      });
    if (gen_cmd->parsed())
      return dispatch(arith_mode, [&]<class T>() {
        return cmd_gen<T>(gen_kind, gen_D, gen_m, gen_n, gen_seed, gen_out);
      });
    if (bench_cmd->parsed())
      return dispatch(arith_mode, [&]<class T>() {
        return cmd_bench<T>(bench_suite, bench_report);
      });
  } catch (const paralp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == paralp::Error::Code::inconsistent_rows) return kExitInfeasible;
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
