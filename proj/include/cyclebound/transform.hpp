#ifndef CYCLEBOUND_TRANSFORM_HPP
#define CYCLEBOUND_TRANSFORM_HPP

#include <limits>
#include <stdexcept>
#include <variant>
#include <vector>

#include "cyclebound/digraph.hpp"
#include "cyclebound/rational.hpp"

namespace cyclebound {

struct Shift {
  Rational amount;
};
struct Negate {};
struct Scale {
  Rational factor;
};
using WeightTransform = std::variant<Shift, Negate, Scale>;

/// Integer graph standing for rational weights: the weight of arc e is
/// graph.arc(e).weight / denominator.
struct LiftedDigraph {
  WeightedDigraph graph;
  Rational::int_type denominator = 1;

  /// Maps a quantity measured on `graph` (a weight or a mean) back to the
  /// rational weight scale.
  [[nodiscard]] Rational unlift(const Rational& lifted) const { return lifted / Rational(denominator); }
};

namespace detail {
inline Weight narrow_weight(wide_int v) {
  if (v > std::numeric_limits<Weight>::max() || v < std::numeric_limits<Weight>::min()) {
    throw std::overflow_error("transformed weight exceeds 64 bits");
  }
  return static_cast<Weight>(v);
}
}  // namespace detail

/// Applies a shift, negation or positive scaling to every arc weight.
/// Rational parameters are lifted to a common denominator so the result
/// stays an integer graph.
inline LiftedDigraph transform_weights(const LiftedDigraph& in, const WeightTransform& t) {
  const auto& arcs = in.graph.arcs();
  std::vector<Weight> weights(arcs.size());
  LiftedDigraph out;
  if (std::holds_alternative<Negate>(t)) {
    for (std::size_t i = 0; i < arcs.size(); ++i) weights[i] = detail::narrow_weight(-static_cast<wide_int>(arcs[i].weight));
    out.denominator = in.denominator;
  } else if (const auto* s = std::get_if<Shift>(&t)) {
    // w/d + p/q = (w*q + p*d) / (d*q)
    const wide_int q = s->amount.den();
    const wide_int pd = static_cast<wide_int>(s->amount.num()) * in.denominator;
    for (std::size_t i = 0; i < arcs.size(); ++i) weights[i] = detail::narrow_weight(arcs[i].weight * q + pd);
    out.denominator = detail::narrow_weight(q * in.denominator);
  } else {
    const Rational& f = std::get<Scale>(t).factor;
    if (f.sign() <= 0) throw std::invalid_argument("scale factor must be positive");
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      weights[i] = detail::narrow_weight(static_cast<wide_int>(arcs[i].weight) * f.num());
    }
    out.denominator = detail::narrow_weight(static_cast<wide_int>(f.den()) * in.denominator);
  }
  out.graph = in.graph.with_weights(weights);
  return out;
}

inline LiftedDigraph transform_weights(const WeightedDigraph& g, const WeightTransform& t) {
  return transform_weights(LiftedDigraph{g, 1}, t);
}

}  // namespace cyclebound

#endif  // CYCLEBOUND_TRANSFORM_HPP
