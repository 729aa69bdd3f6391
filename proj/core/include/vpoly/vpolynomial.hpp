#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vpoly/graph.hpp"
#include "vpoly/multipoly.hpp"

namespace vpoly {

struct ExpansionLimits {
  // Full expansion has 2^|E| terms.
  std::size_t max_edges = 20;
};

// Fortuin-Kasteleyn sum: over all A in E(g), the product of x_{s_j} over the
// components of (V, A) times the product of t_e over A.
MultiPoly fk_polynomial(const WeightedGraph& g, const ExpansionLimits& limits = {});

struct DeletionContractionOptions {
  // Maximum recursion depth, i.e. number of edges eliminated.
  std::size_t max_depth = 20;
  // Elimination order; empty means ascending edge id.
  std::vector<std::string> edge_order;
};

// Deletion-contraction: V = V(g - e) + t_e V(g / e) for a non-loop e,
// V = (1 + t_e) V(g - e) for a loop, and the product of x_{w(v)} when no edges
// remain. Subgraphs are memoized per call.
MultiPoly dc_polynomial(const WeightedGraph& g, const DeletionContractionOptions& options = {});

// V of g with edge e doubled by a new parallel edge f, built from the deletion
// and contraction of e: V(g - e) + (t_e + t_f + t_e t_f) V(g / e).
MultiPoly doubled_edge_polynomial(const WeightedGraph& g, const std::string& e,
                                  const std::string& f, const ExpansionLimits& limits = {});

// Product of x_{w(v)} over all vertices (the A = empty term).
Monomial vertex_monomial(const WeightedGraph& g);

}  // namespace vpoly
