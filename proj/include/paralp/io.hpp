#pragma once

#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

#include "paralp/interval.hpp"
#include "paralp/model.hpp"
#include "paralp/parametric.hpp"
#include "paralp/pivotpath.hpp"
#include "paralp/simplex.hpp"

namespace paralp {

using nlohmann::json;

// Scalars on the wire are numbers or "p/q" strings. Exact mode emits exact
// representations and rejects float literals; float mode accepts both.

inline json scalar_to_json(const Rational& x) {
  using boost::multiprecision::mpz_int;
  if (denominator(x) == 1) {
    mpz_int num = numerator(x);
    if (num >= std::numeric_limits<std::int64_t>::min() &&
        num <= std::numeric_limits<std::int64_t>::max())
      return num.convert_to<std::int64_t>();
  }
  return x.str();
}

inline json scalar_to_json(double x) { return x; }

template <class T>
T scalar_from_json(const json& j);

template <>
inline Rational scalar_from_json<Rational>(const json& j) {
  if (j.is_number_integer())
    return Rational(j.get<std::int64_t>());
  if (j.is_number())
    throw Error(Error::Code::mode_error, "float literal in exact mode: " + j.dump());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(Error::Code::schema_error, "bad scalar: " + j.dump());
}

template <>
inline double scalar_from_json<double>(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string())
    return parse_rational(j.get<std::string>()).convert_to<double>();
  throw Error(Error::Code::schema_error, "bad scalar: " + j.dump());
}

template <class T>
json vec_to_json(const Vec<T>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(scalar_to_json(x));
  return arr;
}

template <class T>
Vec<T> vec_from_json(const json& j) {
  if (!j.is_array()) throw Error(Error::Code::schema_error, "expected array");
  Vec<T> v;
  for (const auto& x : j) v.push_back(scalar_from_json<T>(x));
  return v;
}

template <class T>
json mat_to_json(const Mat<T>& M) {
  json arr = json::array();
  for (std::size_t i = 0; i < M.rows; ++i) arr.push_back(vec_to_json(M.row(i)));
  return arr;
}

template <class T>
Mat<T> mat_from_json(const json& j) {
  if (!j.is_array()) throw Error(Error::Code::schema_error, "expected matrix");
  Mat<T> M;
  for (const auto& row : j) M.append_row(vec_from_json<T>(row));
  return M;
}

/// An LP file: {"name", "A", "b", "c"} with an optional parametric block
/// {"d", "B"}.
template <class T>
struct LpFile {
  LinearProgram<T> lp;
  std::optional<Vec<T>> d;
  std::optional<Mat<T>> B;
};

template <class T>
json lp_to_json(const LinearProgram<T>& lp) {
  return json{{"name", lp.name},
              {"A", mat_to_json(lp.A)},
              {"b", vec_to_json(lp.b)},
              {"c", vec_to_json(lp.c)}};
}

template <class T>
LpFile<T> lp_from_json(const json& j) {
  for (const char* key : {"A", "b", "c"})
    if (!j.contains(key))
      throw Error(Error::Code::schema_error, std::string("missing key: ") + key);
  LpFile<T> f;
  f.lp.name = j.value("name", "");
  f.lp.A = mat_from_json<T>(j.at("A"));
  f.lp.b = vec_from_json<T>(j.at("b"));
  f.lp.c = vec_from_json<T>(j.at("c"));
  if (j.contains("d")) f.d = vec_from_json<T>(j.at("d"));
  if (j.contains("B")) f.B = mat_from_json<T>(j.at("B"));
  return f;
}

inline json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Error::Code::schema_error, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error(Error::Code::schema_error, "malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

inline void save_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Error::Code::schema_error, "cannot write " + path);
  out << j.dump(2) << "\n";
}

template <class T>
LpFile<T> load_lp(const std::string& path) {
  return lp_from_json<T>(load_json(path));
}

template <class T>
void save_lp(const LinearProgram<T>& lp, const std::string& path,
             const std::optional<Vec<T>>& d = {}, const std::optional<Mat<T>>& B = {}) {
  json j = lp_to_json(lp);
  if (d) j["d"] = vec_to_json(*d);
  if (B) j["B"] = mat_to_json(*B);
  save_json(j, path);
}

inline std::string rule_name(PivotRule r) {
  switch (r) {
    case PivotRule::bland: return "bland";
    case PivotRule::dantzig: return "dantzig";
    case PivotRule::parametric: return "parametric";
  }
  return "?";
}

inline PivotRule rule_from_name(const std::string& s) {
  if (s == "bland") return PivotRule::bland;
  if (s == "dantzig") return PivotRule::dantzig;
  if (s == "parametric") return PivotRule::parametric;
  throw Error(Error::Code::schema_error, "unknown rule: " + s);
}

template <class T>
json trace_to_json(const PivotTrace<T>& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps)
    steps.push_back({{"enter", s.enter},
                     {"leave", s.leave},
                     {"objective", scalar_to_json(s.objective)}});
  return json{{"rule", rule_name(trace.rule)},
              {"phase1_steps", trace.phase1_steps},
              {"steps", steps}};
}

template <class T>
json interval_to_json(const Interval<T>& iv) {
  json j;
  j["lo"] = iv.has_lo ? scalar_to_json(iv.lo) : json("-inf");
  j["hi"] = iv.has_hi ? scalar_to_json(iv.hi) : json("+inf");
  j["lo_closed"] = iv.lo_closed;
  j["hi_closed"] = iv.hi_closed;
  if (iv.empty) j["empty"] = true;
  return j;
}

template <class T>
json decomposition_to_json(const InvariancyDecomposition<T>& dec) {
  json pts = json::array();
  for (const auto& p : dec.transition_points) pts.push_back(scalar_to_json(p));
  json ivs = json::array();
  for (const auto& iv : dec.intervals)
    ivs.push_back({{"lo", iv.has_lo ? scalar_to_json(iv.lo) : json("-inf")},
                   {"hi", iv.has_hi ? scalar_to_json(iv.hi) : json("+inf")}});
  json wits = json::array();
  for (const auto& w : dec.witnesses)
    wits.push_back({{"point", scalar_to_json(w.point)},
                    {"arg_lo", vec_to_json(w.arg_lo)},
                    {"arg_hi", vec_to_json(w.arg_hi)}});
  json j{{"side", to_string(dec.side)},
         {"theta",
          {{"lo", dec.theta.has_lo ? scalar_to_json(dec.theta.lo) : json("-inf")},
           {"hi", dec.theta.has_hi ? scalar_to_json(dec.theta.hi) : json("+inf")}}},
         {"transition_points", pts},
         {"intervals", ivs},
         {"witnesses", wits},
         {"converged", dec.converged}};
  if (!dec.diagnostic.empty()) j["diagnostic"] = dec.diagnostic;
  return j;
}

template <class T>
json path_report_to_json(const PathReport<T>& rep) {
  json bps = json::array();
  for (const auto& t : rep.breakpoints) bps.push_back(scalar_to_json(t));
  json j{{"instance", rep.instance},
         {"n", rep.n},
         {"pivots_phase2", rep.pivots_phase2},
         {"pivots_bootstrap", rep.pivots_bootstrap},
         {"bound_holds", rep.bound_holds},
         {"breakpoints", bps},
         {"optimal_value", scalar_to_json(rep.optimal_value)},
         {"optimal_verified", rep.optimal_verified},
         {"s", vec_to_json(rep.s)}};
  j["seed"] = rep.seed ? json(*rep.seed) : json(nullptr);
  if (rep.bootstrap_flagged) j["bootstrap_flagged"] = true;
  return j;
}

}  // namespace paralp
