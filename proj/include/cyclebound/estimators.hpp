#ifndef CYCLEBOUND_ESTIMATORS_HPP
#define CYCLEBOUND_ESTIMATORS_HPP

#include <cmath>
#include <optional>
#include <stdexcept>

#include "cyclebound/rational.hpp"

namespace cyclebound {

/// Point estimates of the longest cycle's mean from (lambda_min, lambda_max),
/// with their guaranteed error bounds. Undefined quantities are nullopt.
///
/// lambda_geo and its relative bound use double precision (correctly rounded
/// sqrt); everything else is exact.
struct EstimateReport {
  Rational lambda_avg;
  std::optional<double> lambda_geo;            // lambda_min > 0
  std::optional<Rational> delta;               // lambda_min + lambda_max != 0
  Rational abs_error_bound_avg;                // (lambda_max - lambda_min) / 2
  std::optional<Rational> rel_error_bound_avg;  // delta
  std::optional<Rational> abs_error_bound_geo;  // lambda_max - lambda_min
  std::optional<double> rel_error_bound_geo;    // (lambda_max - lambda_min) / lambda_geo

  friend bool operator==(const EstimateReport&, const EstimateReport&) = default;
};

inline EstimateReport estimate(const Rational& lambda_min, const Rational& lambda_max) {
  if (lambda_max < lambda_min) throw std::invalid_argument("lambda_min exceeds lambda_max");
  EstimateReport e;
  const Rational width = lambda_max - lambda_min;
  e.lambda_avg = (lambda_min + lambda_max) / Rational(2);
  e.abs_error_bound_avg = width / Rational(2);
  const Rational sum = lambda_min + lambda_max;
  if (!sum.is_zero()) {
    e.delta = width / sum.abs();
    e.rel_error_bound_avg = e.delta;
  }
  if (lambda_min.sign() > 0) {
    const Rational product = lambda_min * lambda_max;
    e.lambda_geo = std::sqrt(static_cast<double>(product.num()) / static_cast<double>(product.den()));
    e.abs_error_bound_geo = width;
    e.rel_error_bound_geo = width.to_double() / *e.lambda_geo;
  }
  return e;
}

/// Which quantity divides the absolute error.
enum class ErrorReference { true_mean, lambda_max };

inline const char* to_string(ErrorReference r) { return r == ErrorReference::true_mean ? "true_mean" : "lambda_max"; }

/// |truth - estimate| / |reference| as a percentage; nullopt when the
/// reference is zero.
inline std::optional<double> heuristic_error(const Rational& truth, double estimate, const Rational& reference) {
  if (reference.is_zero()) return std::nullopt;
  return 100.0 * std::fabs(truth.to_double() - estimate) / std::fabs(reference.to_double());
}

}  // namespace cyclebound

#endif  // CYCLEBOUND_ESTIMATORS_HPP
