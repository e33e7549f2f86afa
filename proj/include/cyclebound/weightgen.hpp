#ifndef CYCLEBOUND_WEIGHTGEN_HPP
#define CYCLEBOUND_WEIGHTGEN_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cyclebound/digraph.hpp"

namespace cyclebound {

enum class WeightDistribution { uniform, lognormal };

inline const char* to_string(WeightDistribution d) { return d == WeightDistribution::uniform ? "uniform" : "lognormal"; }

inline WeightDistribution parse_distribution(std::string_view s) {
  if (s == "uniform") return WeightDistribution::uniform;
  if (s == "lognormal" || s == "log-normal") return WeightDistribution::lognormal;
  throw std::invalid_argument("unknown distribution '" + std::string(s) + "'");
}

struct WeightSpec {
  WeightDistribution distribution = WeightDistribution::uniform;
  Weight lo = 1;
  Weight hi = 3000;
  std::uint64_t seed = 0;
};

/// Name of the bit generator, recorded in reports.
inline constexpr const char* weight_generator_name = "mt19937_64";

inline void validate(const WeightSpec& spec) {
  if (spec.lo >= spec.hi) throw std::invalid_argument("weight range needs lo < hi");
  if (spec.distribution == WeightDistribution::lognormal && spec.lo < 1) {
    throw std::invalid_argument("log-normal weights need lo >= 1");
  }
}

/// Seeded integer weight stream.
///
/// Only the raw 64-bit output of std::mt19937_64 is used (its sequence is
/// fixed by the standard); the mapping to integers and normals is done here
/// rather than with <random> distributions, whose output is
/// implementation-defined.
///
/// Uniform: i.i.d. integers in [lo, hi] by rejection sampling.
/// Log-normal: exp(N(mu, sigma)) with [ln lo, ln hi] = mu -/+ 3 sigma, rounded
/// to the nearest integer and clamped into [lo, hi].
class WeightSampler {
 public:
  explicit WeightSampler(const WeightSpec& spec) : spec_(spec), rng_(spec.seed) {
    validate(spec);
    const double llo = std::log(static_cast<double>(spec.lo));
    const double lhi = std::log(static_cast<double>(spec.hi));
    mu_ = (llo + lhi) / 2.0;
    sigma_ = (lhi - llo) / 6.0;
  }

  [[nodiscard]] double mu() const { return mu_; }
  [[nodiscard]] double sigma() const { return sigma_; }

  Weight next() {
    if (spec_.distribution == WeightDistribution::uniform) return uniform_int();
    const double x = std::nearbyint(raw_lognormal());
    if (x <= static_cast<double>(spec_.lo)) return spec_.lo;
    if (x >= static_cast<double>(spec_.hi)) return spec_.hi;
    return static_cast<Weight>(x);
  }

  /// Unrounded, unclamped log-normal draw.
  double raw_lognormal() { return std::exp(mu_ + sigma_ * standard_normal()); }

 private:
  Weight uniform_int() {
    const std::uint64_t range = static_cast<std::uint64_t>(spec_.hi - spec_.lo) + 1;
    const std::uint64_t limit = range == 0 ? 0 : (UINT64_MAX / range) * range;
    std::uint64_t x = rng_();
    while (limit != 0 && x >= limit) x = rng_();
    return spec_.lo + static_cast<Weight>(range == 0 ? x : x % range);
  }

  // Uniform on the open interval (0, 1) from the top 53 bits.
  double unit_open() { return (static_cast<double>(rng_() >> 11) + 0.5) * 0x1.0p-53; }

  // Box-Muller, cosine branch only.
  double standard_normal() {
    const double u1 = unit_open();
    const double u2 = unit_open();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  WeightSpec spec_;
  std::mt19937_64 rng_;
  double mu_ = 0.0;
  double sigma_ = 1.0;
};

/// Same topology with fresh weights, one draw per arc in arc order.
inline WeightedDigraph assign_weights(const WeightedDigraph& topology, const WeightSpec& spec) {
  WeightSampler sampler(spec);
  std::vector<Weight> weights(topology.arc_count());
  for (Weight& w : weights) w = sampler.next();
  return topology.with_weights(weights);
}

}  // namespace cyclebound

#endif  // CYCLEBOUND_WEIGHTGEN_HPP
