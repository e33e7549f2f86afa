#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cyclebound/enumeration.hpp"
#include "cyclebound/estimators.hpp"
#include "cyclebound/howard.hpp"
#include "cyclebound/transform.hpp"
#include "support.hpp"

namespace cb = cyclebound;
using cb::Rational;

TEST(Estimate, Scc4) {
  const auto e = cb::estimate(Rational(887), Rational(19942, 3));
  EXPECT_EQ(e.lambda_avg, Rational(22603, 6));
  EXPECT_NEAR(e.lambda_avg.to_double(), 3767.17, 0.005);
  ASSERT_TRUE(e.lambda_geo);
  EXPECT_NEAR(*e.lambda_geo, 2428.21, 0.005);
  EXPECT_EQ(e.abs_error_bound_avg, (Rational(19942, 3) - Rational(887)) / Rational(2));
  EXPECT_EQ(e.abs_error_bound_geo, Rational(19942, 3) - Rational(887));
  EXPECT_EQ(e.delta, (Rational(19942, 3) - Rational(887)) / (Rational(19942, 3) + Rational(887)));
}

TEST(Estimate, Scc3) {
  const auto e = cb::estimate(Rational(3436), Rational(6510));
  EXPECT_EQ(e.lambda_avg, Rational(4973));
  EXPECT_NEAR(*e.lambda_geo, 4729.52, 0.005);
}

TEST(Estimate, DegenerateInterval) {
  const auto e = cb::estimate(Rational(42), Rational(42));
  EXPECT_EQ(e.lambda_avg, Rational(42));
  EXPECT_EQ(*e.lambda_geo, 42.0);
  EXPECT_EQ(e.delta, Rational(0));
  EXPECT_EQ(e.abs_error_bound_avg, Rational(0));
  EXPECT_EQ(e.abs_error_bound_geo, Rational(0));
  EXPECT_EQ(e.rel_error_bound_geo, 0.0);
}

TEST(Estimate, UndefinedParts) {
  const auto e = cb::estimate(Rational(-3), Rational(3));
  EXPECT_FALSE(e.delta);
  EXPECT_FALSE(e.rel_error_bound_avg);
  EXPECT_FALSE(e.lambda_geo);
  EXPECT_FALSE(e.abs_error_bound_geo);
  EXPECT_EQ(e.lambda_avg, Rational(0));
  EXPECT_FALSE(cb::estimate(Rational(0), Rational(5)).lambda_geo);
  EXPECT_THROW(cb::estimate(Rational(2), Rational(1)), std::invalid_argument);
}

TEST(HeuristicError, TableConventions) {
  const Rational lmax4(19942, 3);
  const auto e4 = cb::estimate(Rational(887), lmax4);
  EXPECT_NEAR(*cb::heuristic_error(lmax4, e4.lambda_avg.to_double(), lmax4), 43.3, 0.05);
  EXPECT_NEAR(*cb::heuristic_error(lmax4, *e4.lambda_geo, lmax4), 63.5, 0.05);
  const auto e3 = cb::estimate(Rational(3436), Rational(6510));
  EXPECT_NEAR(*cb::heuristic_error(Rational(6510), e3.lambda_avg.to_double(), Rational(6510)), 23.6, 0.05);
  EXPECT_NEAR(*cb::heuristic_error(Rational(6510), *e3.lambda_geo, Rational(6510)), 27.3, 0.05);
  EXPECT_EQ(*cb::heuristic_error(Rational(5), 5.0, Rational(5)), 0.0);
  EXPECT_FALSE(cb::heuristic_error(Rational(0), 1.0, Rational(0)));
}

TEST(Estimate, AmGmAndOrdering) {
  std::mt19937_64 rng(401);
  for (int i = 0; i < 5000; ++i) {
    const Rational a(static_cast<long long>(rng() % 100000) - 20000, 1 + static_cast<long long>(rng() % 50));
    const Rational b = a + Rational(static_cast<long long>(rng() % 100000), 1 + static_cast<long long>(rng() % 50));
    const auto e = cb::estimate(a, b);
    EXPECT_LE(a, e.lambda_avg);
    EXPECT_LE(e.lambda_avg, b);
    if (e.lambda_geo) {
      const double avg = e.lambda_avg.to_double();
      EXPECT_LE(*e.lambda_geo, avg + 1e-9 * avg);
      EXPECT_GE(*e.lambda_geo, a.to_double() - 1e-9 * a.to_double());
      if (a == b) {
        EXPECT_DOUBLE_EQ(*e.lambda_geo, avg);
      }
    }
    EXPECT_EQ(e.delta.has_value(), !(a + b).is_zero());
    EXPECT_EQ(e.lambda_geo.has_value(), a.sign() > 0);
  }
}

TEST(Estimate, GuaranteesAgainstEnumeratedCycles) {
  std::mt19937_64 rng(409);
  for (int it = 0; it < 600; ++it) {
    const std::size_t n = 1 + it % 10;
    const auto g = testsupport::random_strong_multigraph(rng, n, 2 * n, it % 3 ? 1 : -50, 100);
    const Rational lmin = cb::min_cycle_mean(g).lambda, lmax = cb::max_cycle_mean(g).lambda;
    const auto e = cb::estimate(lmin, lmax);
    const auto ex = cb::extremal_cycles(g);
    for (const cb::Cycle* c : {&ex.max_weight, &ex.max_length}) {
      const Rational truth = cb::cycle_mean(*c);
      const Rational dev = (truth - e.lambda_avg).abs();
      EXPECT_LE(dev, e.abs_error_bound_avg);
      if (e.delta) {
        EXPECT_LE(dev / e.lambda_avg.abs(), *e.delta);
      }
      if (e.lambda_geo) {
        const double geo_dev = std::fabs(truth.to_double() - *e.lambda_geo);
        EXPECT_LE(geo_dev, e.abs_error_bound_geo->to_double() * (1 + 1e-12) + 1e-9);
        EXPECT_LE(geo_dev / *e.lambda_geo, *e.rel_error_bound_geo * (1 + 1e-12) + 1e-12);
      }
    }
  }
}

TEST(Estimate, ScaleEquivariance) {
  std::mt19937_64 rng(419);
  for (int it = 0; it < 200; ++it) {
    const auto g = testsupport::random_strong_multigraph(rng, 2 + it % 9, 12, 1, 100);
    const Rational f(1 + static_cast<long long>(rng() % 20), 1 + static_cast<long long>(rng() % 20));
    const auto sc = cb::transform_weights(g, cb::Scale{f});
    const auto e = cb::estimate(cb::min_cycle_mean(g).lambda, cb::max_cycle_mean(g).lambda);
    const auto es = cb::estimate(sc.unlift(cb::min_cycle_mean(sc.graph).lambda), sc.unlift(cb::max_cycle_mean(sc.graph).lambda));
    EXPECT_EQ(es.lambda_avg, e.lambda_avg * f);
    EXPECT_NEAR(*es.lambda_geo, *e.lambda_geo * f.to_double(), 1e-9 * *es.lambda_geo);
    EXPECT_EQ(es.delta, e.delta);
  }
}
