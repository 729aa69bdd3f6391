#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace vpoly {

// Vertex weight: an element of the semigroup N^k under componentwise addition.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<std::uint64_t> coords);
  Weight(std::initializer_list<std::uint64_t> coords);

  static Weight zero(std::size_t dim);
  // i-th standard basis vector of N^dim.
  static Weight unit(std::size_t dim, std::size_t i);

  std::size_t dim() const { return coords_.size(); }
  std::span<const std::uint64_t> coords() const { return coords_; }
  std::uint64_t operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const;

  // Throws InputError on dimension mismatch or coordinate overflow.
  Weight& operator+=(const Weight& other);
  friend Weight operator+(Weight lhs, const Weight& rhs) {
    lhs += rhs;
    return lhs;
  }

  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;

  // "3" for one coordinate, "1,0,2" otherwise.
  std::string to_string() const;

 private:
  std::vector<std::uint64_t> coords_;
};

struct Edge {
  std::string id;
  std::string u;
  std::string v;

  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Finite multigraph with N^k vertex weights. Loops and parallel edges are
// allowed. Vertices and edges are kept in id order (plain string order), and
// every derived operation returns a new graph.
class WeightedGraph {
 public:
  explicit WeightedGraph(std::size_t weight_dim = 1);

  void add_vertex(const std::string& id, Weight weight);
  void add_edge(const std::string& id, const std::string& u, const std::string& v);

  std::size_t weight_dim() const { return weight_dim_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::map<std::string, Weight>& vertices() const { return vertices_; }
  const std::map<std::string, Edge>& edges() const { return edges_; }

  bool has_vertex(const std::string& id) const { return vertices_.contains(id); }
  bool has_edge(const std::string& id) const { return edges_.contains(id); }
  const Weight& weight(const std::string& vertex_id) const;
  const Edge& edge(const std::string& edge_id) const;

  std::vector<std::string> vertex_ids() const;
  std::vector<std::string> edge_ids() const;
  Weight total_weight() const;
  // Number of incident edge ends (a loop counts twice).
  std::size_t degree(const std::string& vertex_id) const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  std::size_t weight_dim_;
  std::map<std::string, Weight> vertices_;
  std::map<std::string, Edge> edges_;
};

// Components of the spanning subgraph (V(g), A).
struct ComponentDecomposition {
  // Blocks of vertex ids, each sorted; blocks ordered by their first id.
  std::vector<std::vector<std::string>> blocks;
  std::vector<Weight> weights;

  std::size_t count() const { return blocks.size(); }
  friend bool operator==(const ComponentDecomposition&, const ComponentDecomposition&) = default;
};

WeightedGraph delete_edge(const WeightedGraph& g, const std::string& edge_id);

// Merges the endpoints of a non-loop edge. The merged vertex keeps the smaller
// id and the summed weight; resulting loops and parallel edges are kept.
WeightedGraph contract_edge(const WeightedGraph& g, const std::string& edge_id);

// Adds edge `new_edge_id` parallel to the non-loop edge `edge_id`.
WeightedGraph double_edge(const WeightedGraph& g, const std::string& edge_id,
                          const std::string& new_edge_id);

// Union-find route.
ComponentDecomposition components(const WeightedGraph& g, const std::set<std::string>& edge_subset);
// Breadth-first route, kept separate so the two can be cross-checked.
ComponentDecomposition components_bfs(const WeightedGraph& g,
                                      const std::set<std::string>& edge_subset);
bool is_connected(const WeightedGraph& g);

// Replaces the weight of the i-th vertex (id order) by the unit vector e_i in
// N^{#V}. Used by the physical partition function.
WeightedGraph with_unit_vector_weights(const WeightedGraph& g);

// ---------------------------------------------------------------------------
// Graph families. Vertex ids are v1..vk and edge ids e1..em.

// Path v1 - v2 - ... - vn with e_i = (v_i, v_{i+1}).
WeightedGraph make_line(std::size_t n, const std::vector<Weight>& weights);
// Path plus the closing edge e_n = (v_n, v_1). n = 1 is a single loop and
// n = 2 a pair of parallel edges.
WeightedGraph make_cycle(std::size_t n, const std::vector<Weight>& weights);
// Two vertices of weight c1 and c2 joined by m + 1 parallel edges.
WeightedGraph make_banana(std::size_t m, std::uint64_t c1, std::uint64_t c2);
// Full binary tree with `levels` levels in heap order (root v1, children of
// v_k are v_{2k} and v_{2k+1}); edge e_{k-1} joins v_k to its parent. Leaf
// weights are assigned left to right and padded with zero weights.
WeightedGraph make_full_binary_tree(std::size_t levels, const std::vector<Weight>& leaf_weights,
                                    const Weight& internal_weight);
// Caterpillar (1 + 1/n)-ary tree with `internal_nodes` non-leaf nodes on a
// spine v1..vI (root v1). Exactly ceil(I / n) spine nodes branch: those at
// positions I, I - n, I - 2n, ... The last spine node carries two leaves,
// every other branching node one leaf. Leaves are numbered after the spine in
// top-down order; leaf weights are padded with zero weights.
WeightedGraph make_one_plus_1_over_n_tree(std::size_t n, std::size_t internal_nodes,
                                          const std::vector<Weight>& leaf_weights,
                                          const Weight& internal_weight);

// Leaves of a rooted tree in breadth-first order from the root (neighbours
// visited in vertex id order). The root is a leaf only if it is isolated.
std::vector<std::string> tree_leaves(const WeightedGraph& tree, const std::string& root);
// Throws InputError unless the graph is a tree containing `root`.
void require_tree(const WeightedGraph& g, const std::string& root);

}  // namespace vpoly
