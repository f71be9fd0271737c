#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace paralp {

/// Arbitrary-precision rational, the scalar of exact-mode computations.
using Rational = boost::multiprecision::mpq_rational;

/// Tolerances used by float-mode comparisons. Exact mode ignores them.
struct FloatTolerances {
  double feas = 1e-8;   // feasibility / zero tests
  double pivot = 1e-9;  // pivot eligibility
};

inline FloatTolerances& float_tolerances() {
  static FloatTolerances t;
  return t;
}

/// Comparison policy per arithmetic mode. A computation never mixes modes:
/// everything downstream is templated on the scalar type.
template <class T>
struct arith;

template <>
struct arith<Rational> {
  static constexpr bool exact = true;
  static bool is_zero(const Rational& x) { return x == 0; }
  static bool nonneg(const Rational& x) { return x >= 0; }
  static bool strict_pos(const Rational& x) { return x > 0; }
  static bool strict_neg(const Rational& x) { return x < 0; }
  static Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }
  static double to_double(const Rational& x) { return x.convert_to<double>(); }
};

template <>
struct arith<double> {
  static constexpr bool exact = false;
  static bool is_zero(double x) { return std::fabs(x) <= float_tolerances().feas; }
  static bool nonneg(double x) { return x >= -float_tolerances().feas; }
  static bool strict_pos(double x) { return x > float_tolerances().pivot; }
  static bool strict_neg(double x) { return x < -float_tolerances().pivot; }
  static double abs(double x) { return std::fabs(x); }
  static double to_double(double x) { return x; }
};

class Error : public std::runtime_error {
 public:
  enum class Code {
    dimension_mismatch,
    inconsistent_rows,
    empty_problem,
    anchor_mismatch,      // Ad != b
    not_orthogonal,
    rank_deficient,
    no_parametric_direction,
    outside_theta,
    zero_row,
    size_guard,
    singular_basis,
    iteration_limit,
    mode_error,           // float literal fed to exact mode
    schema_error,
    internal,
    contract,
  };

  Error(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

/// Parses "p/q" or a plain integer string into a rational.
inline Rational parse_rational(const std::string& s) {
  try {
    Rational q(s);
    return q;
  } catch (const std::exception&) {
    throw Error(Error::Code::schema_error, "bad rational literal: " + s);
  }
}

inline std::string to_string(const Rational& x) { return x.str(); }
inline std::string to_string(double x) { return std::to_string(x); }

}  // namespace paralp
