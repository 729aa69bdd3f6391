#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vpoly/graph.hpp"

namespace vpoly::detail {

// Index-based multigraph used by the deletion-contraction recursions. Edges
// carry the rank of their id in the elimination order and are kept sorted by
// rank, so the next edge to eliminate is always edges.front().
struct CompactGraph {
  struct Edge {
    std::size_t rank;
    std::size_t u;
    std::size_t v;
  };

  std::vector<Weight> weights;
  std::vector<Edge> edges;

  // `order` lists every edge id of g exactly once; empty means id order.
  static CompactGraph from(const WeightedGraph& g, std::span<const std::string> order,
                           std::vector<std::string>& rank_to_id);

  CompactGraph without_first_edge() const;
  CompactGraph contract_first_edge() const;

  // Removes vertices with no incident edge and returns their weights.
  std::vector<Weight> take_isolated();

  // Encoding invariant under vertex relabelling; equal keys imply equal
  // V-polynomials. Isolated vertices must have been taken out first.
  std::vector<std::uint64_t> key() const;
};

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& k) const noexcept;
};

}  // namespace vpoly::detail
