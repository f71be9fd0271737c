#pragma once

#include <string>

#include "paralp/scalar.hpp"

namespace paralp {

/// Closed, half-open or unbounded scalar interval. Infinite endpoints are
/// always open; `empty` marks the empty set.
template <class T>
struct Interval {
  bool empty = false;
  bool has_lo = false;  // finite lower endpoint
  bool has_hi = false;  // finite upper endpoint
  T lo{};
  T hi{};
  bool lo_closed = false;
  bool hi_closed = false;

  static Interval none() {
    Interval iv;
    iv.empty = true;
    return iv;
  }
  static Interval whole() { return Interval{}; }
  static Interval point(const T& p) {
    Interval iv;
    iv.has_lo = iv.has_hi = true;
    iv.lo = iv.hi = p;
    iv.lo_closed = iv.hi_closed = true;
    return iv;
  }
  static Interval closed(const T& a, const T& b) {
    Interval iv;
    iv.has_lo = iv.has_hi = true;
    iv.lo = a;
    iv.hi = b;
    iv.lo_closed = iv.hi_closed = true;
    return iv;
  }
  static Interval open(const T& a, const T& b) {
    Interval iv;
    iv.has_lo = iv.has_hi = true;
    iv.lo = a;
    iv.hi = b;
    return iv;
  }
  /// [a, +inf) when closed, (a, +inf) otherwise.
  static Interval ray_up(const T& a, bool closed_end = true) {
    Interval iv;
    iv.has_lo = true;
    iv.lo = a;
    iv.lo_closed = closed_end;
    return iv;
  }
  static Interval ray_down(const T& b, bool closed_end = true) {
    Interval iv;
    iv.has_hi = true;
    iv.hi = b;
    iv.hi_closed = closed_end;
    return iv;
  }

  bool singleton() const {
    return !empty && has_lo && has_hi && lo == hi && lo_closed && hi_closed;
  }
  bool bounded() const { return !empty && has_lo && has_hi; }

  bool contains(const T& x) const {
    if (empty) return false;
    if (has_lo && (lo_closed ? x < lo : x <= lo)) return false;
    if (has_hi && (hi_closed ? x > hi : x >= hi)) return false;
    return true;
  }

  Interval closure() const {
    Interval iv = *this;
    if (iv.has_lo) iv.lo_closed = true;
    if (iv.has_hi) iv.hi_closed = true;
    return iv;
  }

  bool operator==(const Interval&) const = default;

  std::string str() const {
    using paralp::to_string;
    if (empty) return "{}";
    std::string s = has_lo ? (lo_closed ? "[" : "(") + to_string(lo) : "(-inf";
    s += ", ";
    s += has_hi ? to_string(hi) + (hi_closed ? "]" : ")") : "+inf)";
    return s;
  }
};

}  // namespace paralp
