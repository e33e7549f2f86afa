#ifndef CYCLEBOUND_DIGRAPH_HPP
#define CYCLEBOUND_DIGRAPH_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclebound/rational.hpp"

namespace cyclebound {

using NodeId = std::uint32_t;
using ArcId = std::uint32_t;
using Weight = std::int64_t;

struct Arc {
  NodeId tail = 0;
  NodeId head = 0;
  Weight weight = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Immutable directed multigraph with integer arc weights.
///
/// Node ids are 0-based here; the text format is 1-based and the conversion
/// happens in parse_edge_list / serialize_edge_list only. Arcs keep their
/// insertion order, and the per-node adjacency lists are sorted by arc id so
/// every traversal is deterministic.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;

  WeightedDigraph(std::size_t node_count, std::vector<Arc> arcs) : node_count_(node_count), arcs_(std::move(arcs)) {
    for (const Arc& a : arcs_) {
      if (a.tail >= node_count_ || a.head >= node_count_) {
        throw std::out_of_range("arc endpoint outside node range");
      }
    }
    build_adjacency();
  }

  [[nodiscard]] std::size_t node_count() const { return node_count_; }
  [[nodiscard]] std::size_t arc_count() const { return arcs_.size(); }
  [[nodiscard]] const std::vector<Arc>& arcs() const { return arcs_; }
  [[nodiscard]] const Arc& arc(ArcId id) const { return arcs_[id]; }

  [[nodiscard]] std::span<const ArcId> out_arcs(NodeId v) const {
    return {out_ids_.data() + out_offsets_[v], out_ids_.data() + out_offsets_[v + 1]};
  }
  [[nodiscard]] std::span<const ArcId> in_arcs(NodeId v) const {
    return {in_ids_.data() + in_offsets_[v], in_ids_.data() + in_offsets_[v + 1]};
  }

  /// Same topology, new weights (one per arc, in arc order).
  [[nodiscard]] WeightedDigraph with_weights(std::span<const Weight> weights) const {
    if (weights.size() != arcs_.size()) throw std::invalid_argument("weight vector size does not match arc count");
    std::vector<Arc> arcs = arcs_;
    for (std::size_t i = 0; i < arcs.size(); ++i) arcs[i].weight = weights[i];
    return WeightedDigraph(node_count_, std::move(arcs));
  }

  [[nodiscard]] Weight min_weight() const {
    if (arcs_.empty()) throw std::logic_error("min_weight of arc-less graph");
    return std::min_element(arcs_.begin(), arcs_.end(), [](const Arc& a, const Arc& b) { return a.weight < b.weight; })
        ->weight;
  }
  [[nodiscard]] Weight max_weight() const {
    if (arcs_.empty()) throw std::logic_error("max_weight of arc-less graph");
    return std::max_element(arcs_.begin(), arcs_.end(), [](const Arc& a, const Arc& b) { return a.weight < b.weight; })
        ->weight;
  }
  [[nodiscard]] wide_int total_weight() const {
    wide_int s = 0;
    for (const Arc& a : arcs_) s += a.weight;
    return s;
  }

  friend bool operator==(const WeightedDigraph& a, const WeightedDigraph& b) {
    return a.node_count_ == b.node_count_ && a.arcs_ == b.arcs_;
  }

 private:
  void build_adjacency() {
    out_offsets_.assign(node_count_ + 1, 0);
    in_offsets_.assign(node_count_ + 1, 0);
    for (const Arc& a : arcs_) {
      ++out_offsets_[a.tail + 1];
      ++in_offsets_[a.head + 1];
    }
    for (std::size_t v = 0; v < node_count_; ++v) {
      out_offsets_[v + 1] += out_offsets_[v];
      in_offsets_[v + 1] += in_offsets_[v];
    }
    out_ids_.resize(arcs_.size());
    in_ids_.resize(arcs_.size());
    std::vector<std::size_t> out_fill(out_offsets_.begin(), out_offsets_.end() - 1);
    std::vector<std::size_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
    for (ArcId id = 0; id < arcs_.size(); ++id) {
      out_ids_[out_fill[arcs_[id].tail]++] = id;
      in_ids_[in_fill[arcs_[id].head]++] = id;
    }
  }

  std::size_t node_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<ArcId> out_ids_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<ArcId> in_ids_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename Int>
bool parse_int(std::string_view token, Int& out) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc{} && ptr == end && !token.empty();
}

}  // namespace detail

/// Reads the `p <n> <m>` / `a <tail> <head> <weight>` edge-list format.
inline WeightedDigraph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<Arc> arcs;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = detail::split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.front() == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (tokens.size() != 3 || !detail::parse_int(tokens[1], n) || !detail::parse_int(tokens[2], m)) {
        throw ParseError(line_no, "malformed header, expected 'p <n> <m>'");
      }
      if (n == 0) throw ParseError(line_no, "node count must be positive");
      if (n > 0xFFFFFFFEull || m > 0xFFFFFFFEull) throw ParseError(line_no, "graph too large");
      have_header = true;
      arcs.reserve(static_cast<std::size_t>(m));
    } else if (tokens.front() == "a") {
      if (!have_header) throw ParseError(line_no, "arc before header");
      std::uint64_t tail = 0;
      std::uint64_t head = 0;
      Weight w = 0;
      if (tokens.size() != 4 || !detail::parse_int(tokens[1], tail) || !detail::parse_int(tokens[2], head)) {
        throw ParseError(line_no, "malformed arc, expected 'a <tail> <head> <weight>'");
      }
      if (!detail::parse_int(tokens[3], w)) throw ParseError(line_no, "non-integer weight '" + std::string(tokens[3]) + "'");
      if (tail < 1 || tail > n || head < 1 || head > n) throw ParseError(line_no, "node id out of range");
      if (arcs.size() == m) throw ParseError(line_no, "more arcs than declared");
      arcs.push_back(Arc{static_cast<NodeId>(tail - 1), static_cast<NodeId>(head - 1), w});
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(tokens.front()) + "'");
    }
  }
  if (!have_header) throw ParseError(line_no, "missing header");
  if (arcs.size() != m) {
    throw ParseError(line_no, "declared " + std::to_string(m) + " arcs, found " + std::to_string(arcs.size()));
  }
  return WeightedDigraph(static_cast<std::size_t>(n), std::move(arcs));
}

inline WeightedDigraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

inline std::string serialize_edge_list(const WeightedDigraph& g) {
  std::string out = "p " + std::to_string(g.node_count()) + " " + std::to_string(g.arc_count()) + "\n";
  for (const Arc& a : g.arcs()) {
    out += "a " + std::to_string(a.tail + 1) + " " + std::to_string(a.head + 1) + " " + std::to_string(a.weight) + "\n";
  }
  return out;
}

}  // namespace cyclebound

#endif  // CYCLEBOUND_DIGRAPH_HPP
