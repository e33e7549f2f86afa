#ifndef CYCLEBOUND_BOUNDS_HPP
#define CYCLEBOUND_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "cyclebound/critical.hpp"
#include "cyclebound/rational.hpp"

namespace cyclebound {

/// Closed interval with optional ends (nullopt is -inf / +inf). A tight end
/// is attained with equality by construction.
struct Interval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  bool lo_tight = false;
  bool hi_tight = false;

  static Interval point(const Rational& v) { return {v, v, true, true}; }
  static Interval at_least(const Rational& v) { return {v, std::nullopt, false, false}; }
  static Interval at_most(const Rational& v) { return {std::nullopt, v, false, false}; }
  static Interval unbounded() { return {}; }

  [[nodiscard]] bool contains(const Rational& v) const { return (!lo || *lo <= v) && (!hi || v <= *hi); }
  [[nodiscard]] bool is_unbounded() const { return !lo && !hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// The sign of w(L) implied by the optimum cycle means alone.
enum class SignClass { positive, negative, nonnegative, zero, indeterminate };

inline const char* to_string(SignClass s) {
  switch (s) {
    case SignClass::positive: return "positive";
    case SignClass::negative: return "negative";
    case SignClass::nonnegative: return "nonnegative";
    case SignClass::zero: return "zero";
    case SignClass::indeterminate: return "indeterminate";
  }
  return "?";
}

namespace detail {
inline void require_ordered(const Rational& lambda_min, const Rational& lambda_max) {
  if (lambda_max < lambda_min) throw std::invalid_argument("lambda_min exceeds lambda_max");
}
inline void require_nonempty(const CriticalSetStats& s) {
  if (s.count == 0) throw std::invalid_argument("empty critical set");
}
// |C| is integral, so rational length bounds can be rounded inward.
inline Rational ceil_length(const Rational& r) { return Rational(r.ceil()); }
inline Rational floor_length(const Rational& r) { return Rational(r.floor()); }
}  // namespace detail

inline SignClass sign_condition(const Rational& lambda_min, const Rational& lambda_max) {
  detail::require_ordered(lambda_min, lambda_max);
  if (lambda_min.sign() > 0) return SignClass::positive;
  if (lambda_max.sign() < 0) return SignClass::negative;
  if (lambda_max.is_zero()) return SignClass::zero;
  if (lambda_min.is_zero()) return SignClass::nonnegative;
  return SignClass::indeterminate;
}

/// Result of one case-split theorem: an interval on the cycle's weight and
/// one on its length. `theorem_case` records which branch fired (1, 2 or 3);
/// `possibly_loose` is set when the critical set was truncated.
struct CycleBounds {
  Interval weight;
  Interval length;
  int theorem_case = 0;
  bool possibly_loose = false;

  friend bool operator==(const CycleBounds&, const CycleBounds&) = default;
};

/// Bounds on the max-weight cycle L_w from the max-critical set.
inline CycleBounds max_weight_bounds(const Rational& lambda_min, const Rational& lambda_max,
                                     const CriticalSetStats& critical_max) {
  detail::require_ordered(lambda_min, lambda_max);
  detail::require_nonempty(critical_max);
  CycleBounds b;
  b.possibly_loose = critical_max.truncated;
  if (lambda_max.sign() > 0) {
    b.theorem_case = 1;
    b.length = Interval::at_least(Rational(critical_max.max_length));
    b.weight = Interval::at_least(Rational(critical_max.max_length) * lambda_min);
  } else if (lambda_max.sign() < 0) {
    b.theorem_case = 2;
    b.length = Interval::at_most(Rational(critical_max.min_length));
    b.weight = Interval::at_most(Rational(critical_max.min_length) * lambda_max);
  } else {
    b.theorem_case = 3;
    b.weight = Interval::point(Rational(0));
  }
  return b;
}

/// Bounds on the max-length cycle L_l from the min-critical set.
inline CycleBounds max_length_bounds(const Rational& lambda_min, const Rational& lambda_max,
                                     const CriticalSetStats& critical_min) {
  detail::require_ordered(lambda_min, lambda_max);
  detail::require_nonempty(critical_min);
  CycleBounds b;
  b.possibly_loose = critical_min.truncated;
  if (lambda_min.sign() > 0) {
    b.theorem_case = 1;
    const Rational heaviest(critical_min.max_weight);
    b.weight = Interval::at_least(heaviest);
    b.length = Interval::at_least(detail::ceil_length(heaviest / lambda_max));
  } else if (lambda_min.sign() < 0) {
    // Only the parametric |L| lambda_min <= w(L) <= |L| lambda_max applies.
    b.theorem_case = 2;
  } else {
    b.theorem_case = 3;
    b.weight = Interval::at_least(Rational(0));
  }
  return b;
}

/// Bounds on the min-weight cycle S_w from the min-critical set.
inline CycleBounds min_weight_bounds(const Rational& lambda_min, const Rational& lambda_max,
                                     const CriticalSetStats& critical_min) {
  detail::require_ordered(lambda_min, lambda_max);
  detail::require_nonempty(critical_min);
  CycleBounds b;
  b.possibly_loose = critical_min.truncated;
  if (lambda_min.sign() > 0) {
    b.theorem_case = 1;
    b.length = Interval::at_most(Rational(critical_min.min_length));
    b.weight = Interval::at_most(Rational(critical_min.min_length) * lambda_max);
  } else if (lambda_min.sign() < 0) {
    b.theorem_case = 2;
    b.length = Interval::at_least(Rational(critical_min.max_length));
    b.weight = Interval::at_most(Rational(critical_min.min_length) * lambda_max);
  } else {
    b.theorem_case = 3;
    b.weight = Interval::point(Rational(0));
  }
  return b;
}

/// Bounds on the min-length cycle S_l from the max-critical set.
inline CycleBounds min_length_bounds(const Rational& lambda_min, const Rational& lambda_max,
                                     const CriticalSetStats& critical_max) {
  detail::require_ordered(lambda_min, lambda_max);
  detail::require_nonempty(critical_max);
  CycleBounds b;
  b.possibly_loose = critical_max.truncated;
  const Rational lightest(critical_max.min_weight);
  b.weight = Interval::at_most(lightest);
  if (lambda_min.sign() > 0) {
    b.theorem_case = 1;
    // min over C of w(C)/lambda_min is attained at the lightest C.
    b.length = Interval::at_most(detail::floor_length(lightest / lambda_min));
  } else if (lambda_min.sign() < 0) {
    b.theorem_case = 2;
    // Dividing by a negative lambda_min flips the order: max of w(C)/lambda_min
    // is again attained at the lightest C.
    b.length = Interval::at_least(detail::ceil_length(lightest / lambda_min));
  } else {
    b.theorem_case = 3;
    b.weight.lo = Rational(0);
  }
  return b;
}

/// |L| lambda_min <= w(L) <= |L| lambda_max, kept as per-arc coefficients so a
/// caller can instantiate it for a hypothesised length.
struct ParametricBound {
  Rational per_arc_lo;
  Rational per_arc_hi;

  [[nodiscard]] Interval weight_for_length(std::int64_t length) const {
    return {Rational(length) * per_arc_lo, Rational(length) * per_arc_hi, false, false};
  }

  friend bool operator==(const ParametricBound&, const ParametricBound&) = default;
};

/// Lower bounds on the longest simple paths implied by the longest cycles.
struct PathBounds {
  std::optional<std::int64_t> length_lo;  // on |P_l|
  std::optional<Rational> weight_lo;      // on w(P_w)
  bool weight_vacuous = false;            // weight_lo < 0

  friend bool operator==(const PathBounds&, const PathBounds&) = default;
};

struct PathBoundInputs {
  Rational lambda_min;
  Rational lambda_max;
  Weight w_max = 0;
  std::int64_t critical_max_length = 0;       // max |C| over the max-critical set
  std::optional<std::int64_t> longest_length;  // |L_l| when known
  std::optional<Weight> heaviest_weight;       // w(L_w) when known
};

inline PathBounds path_bounds(const PathBoundInputs& in) {
  PathBounds p;
  p.length_lo = (in.longest_length ? *in.longest_length : in.critical_max_length) - 1;
  if (in.heaviest_weight) {
    p.weight_lo = Rational(*in.heaviest_weight) - Rational(in.w_max);
  } else if (in.lambda_max.sign() > 0) {
    p.weight_lo = Rational(in.critical_max_length) * in.lambda_min - Rational(in.w_max);
  }
  p.weight_vacuous = p.weight_lo && p.weight_lo->sign() < 0;
  return p;
}

/// (lambda_max - lambda_min) / |lambda_max|; nullopt when lambda_max = 0.
inline std::optional<Rational> gap_ratio(const Rational& lambda_min, const Rational& lambda_max) {
  if (lambda_max.is_zero()) return std::nullopt;
  return (lambda_max - lambda_min) / lambda_max.abs();
}

/// Every bound derivable from the optimum cycle means and critical sets of
/// one component, without enumeration.
struct BoundReport {
  Rational lambda_min;
  Rational lambda_max;
  Weight w_max = 0;
  CriticalSetStats critical_min;
  CriticalSetStats critical_max;
  SignClass sign = SignClass::indeterminate;
  ParametricBound parametric;
  CycleBounds max_weight;  // L_w
  CycleBounds max_length;  // L_l
  CycleBounds min_weight;  // S_w
  CycleBounds min_length;  // S_l
  PathBounds path;
  std::optional<Rational> rho;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

inline BoundReport evaluate_bounds(const Rational& lambda_min, const Rational& lambda_max,
                                   const CriticalSetStats& critical_min, const CriticalSetStats& critical_max,
                                   Weight w_max) {
  BoundReport r;
  r.lambda_min = lambda_min;
  r.lambda_max = lambda_max;
  r.w_max = w_max;
  r.critical_min = critical_min;
  r.critical_max = critical_max;
  r.sign = sign_condition(lambda_min, lambda_max);
  r.parametric = {lambda_min, lambda_max};
  r.max_weight = max_weight_bounds(lambda_min, lambda_max, critical_max);
  r.max_length = max_length_bounds(lambda_min, lambda_max, critical_min);
  r.min_weight = min_weight_bounds(lambda_min, lambda_max, critical_min);
  r.min_length = min_length_bounds(lambda_min, lambda_max, critical_max);
  r.path = path_bounds({lambda_min, lambda_max, w_max, critical_max.max_length, std::nullopt, std::nullopt});
  r.rho = gap_ratio(lambda_min, lambda_max);
  return r;
}

}  // namespace cyclebound

#endif  // CYCLEBOUND_BOUNDS_HPP
