#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "vpoly/assignment.hpp"
#include "vpoly/detail/compact_graph.hpp"
#include "vpoly/error.hpp"
#include "vpoly/graph.hpp"

namespace vpoly {

// ---------------------------------------------------------------------------
// Generic evaluation: deletion-contraction over scalars, memoized on the
// canonical subgraph encoding. Practical up to roughly 30 edges on sparse
// families; exponential in general.

namespace detail {

template <EvaluationRing Ring>
class ScalarDc {
 public:
  using value_type = typename Ring::value_type;

  ScalarDc(const Assignment<Ring>& a, std::vector<std::string> rank_to_id)
      : a_(a), ring_(a.ring()) {
    for (const auto& id : rank_to_id) t_.push_back(a.t(id));
  }

  value_type run(CompactGraph g) {
    auto isolated = g.take_isolated();
    value_type v = core(g);
    for (const auto& w : isolated) v = ring_.mul(v, a_.x(w));
    return v;
  }

 private:
  value_type core(const CompactGraph& g) {
    if (g.edges.empty()) return ring_.one();
    auto key = g.key();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const auto& e = g.edges.front();
    const value_type& te = t_[e.rank];
    value_type result;
    if (e.u == e.v) {
      result = ring_.mul(ring_.add(te, ring_.one()), run(g.without_first_edge()));
    } else {
      auto deleted = run(g.without_first_edge());
      auto contracted = run(g.contract_first_edge());
      result = ring_.add(deleted, ring_.mul(te, contracted));
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

  const Assignment<Ring>& a_;
  const Ring& ring_;
  std::vector<value_type> t_;
  std::unordered_map<std::vector<std::uint64_t>, value_type, KeyHash> memo_;
};

}  // namespace detail

template <EvaluationRing Ring>
typename Ring::value_type eval_generic(const WeightedGraph& g, const Assignment<Ring>& a,
                                       std::size_t max_edges = 64) {
  if (g.edge_count() > max_edges)
    throw RefusalError("eval_generic is capped at " + std::to_string(max_edges) + " edges");
  std::vector<std::string> rank_to_id;
  auto compact = detail::CompactGraph::from(g, {}, rank_to_id);
  return detail::ScalarDc<Ring>(a, std::move(rank_to_id)).run(std::move(compact));
}

// ---------------------------------------------------------------------------
// Line graph v1 - ... - vn with edges e1..e_{n-1}.
//
// chi(i, j) = x_{w_i + ... + w_j} * t_{e_i} * ... * t_{e_{j-1}} is the factor
// of a component spanning vertices i..j. With V_{n+1} = 1 the suffix values
// satisfy V_j = sum_{i=j..n} chi(j, i) V_{i+1}, and V_1 is the answer.
// Both phases use O(n^2) ring operations.

// Throws InputError unless g is exactly make_line(n, ...) up to weights.
std::vector<Weight> line_weights(const WeightedGraph& g);
// Same for make_cycle.
std::vector<Weight> cycle_weights(const WeightedGraph& g);

template <EvaluationRing Ring>
typename Ring::value_type eval_line(const std::vector<Weight>& weights, const Assignment<Ring>& a) {
  const std::size_t n = weights.size();
  if (n == 0) throw InputError("line needs at least one vertex");
  const Ring& ring = a.ring();
  using V = typename Ring::value_type;

  std::vector<V> t;
  t.reserve(n);
  for (std::size_t k = 1; k < n; ++k) t.push_back(a.t("e" + std::to_string(k)));

  // chi[i][j - i] for 0-based i <= j.
  std::vector<std::vector<V>> chi(n);
  for (std::size_t i = 0; i < n; ++i) {
    chi[i].reserve(n - i);
    Weight c = weights[i];
    V edges = ring.one();
    chi[i].push_back(a.x(c));
    for (std::size_t j = i + 1; j < n; ++j) {
      c += weights[j];
      edges = ring.mul(edges, t[j - 1]);
      chi[i].push_back(ring.mul(a.x(c), edges));
    }
  }

  std::vector<V> suffix(n + 1, ring.zero());
  suffix[n] = ring.one();
  for (std::size_t j = n; j-- > 0;) {
    V acc = ring.zero();
    for (std::size_t i = j; i < n; ++i) acc = ring.add(acc, ring.mul(chi[j][i - j], suffix[i + 1]));
    suffix[j] = acc;
  }
  return suffix[0];
}

template <EvaluationRing Ring>
typename Ring::value_type eval_line(const WeightedGraph& g, const Assignment<Ring>& a) {
  return eval_line(line_weights(g), a);
}

// Cycle v1..vn with closing edge e_n = (v_n, v_1). Deleting the closing edge
// leaves a line; contracting it leaves the (n-1)-cycle whose first vertex
// absorbed w_n. The 1-cycle is a loop: (1 + t_{e1}) x_{total}. O(n^3).
template <EvaluationRing Ring>
typename Ring::value_type eval_cycle(const std::vector<Weight>& weights, const Assignment<Ring>& a) {
  const std::size_t n = weights.size();
  if (n == 0) throw InputError("cycle needs at least one vertex");
  const Ring& ring = a.ring();

  // merged[k] = w_1 + w_{k+1} + ... + w_n: first vertex of the k-cycle.
  std::vector<Weight> merged(n + 1);
  merged[n] = weights[0];
  for (std::size_t k = n; k-- > 1;) merged[k] = merged[k + 1] + weights[k];

  auto value = ring.mul(ring.add(a.t("e1"), ring.one()), a.x(merged[1]));
  std::vector<Weight> line{merged[1]};
  for (std::size_t k = 2; k <= n; ++k) {
    line[0] = merged[k];
    line.push_back(weights[k - 1]);
    auto deleted = eval_line(line, a);
    value = ring.add(deleted, ring.mul(a.t("e" + std::to_string(k)), value));
  }
  return value;
}

template <EvaluationRing Ring>
typename Ring::value_type eval_cycle(const WeightedGraph& g, const Assignment<Ring>& a) {
  return eval_cycle(cycle_weights(g), a);
}

// ---------------------------------------------------------------------------
// Pseudo-polynomial tree evaluation (weight_dim = 1). The state of a node is
// the weight of the still-open component containing it. Each child edge is
// either taken (weights add, factor t_e) or cut (the child's component closes
// with its x value). States are bounded by the total weight.

inline constexpr std::uint64_t kMaxTreeWeight = 1'000'000;

namespace detail {
// Children lists and a post-order for a validated rooted tree (dim 1, total
// weight within kMaxTreeWeight). Entry i of `order` is a vertex id whose
// children appear earlier.
struct RootedTree {
  std::vector<std::string> order;
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> children;  // (edge, child)
};
RootedTree root_tree(const WeightedGraph& g, const std::string& root);
}  // namespace detail

template <EvaluationRing Ring>
typename Ring::value_type eval_tree(const WeightedGraph& g, const std::string& root,
                                    const Assignment<Ring>& a) {
  const auto tree = detail::root_tree(g, root);
  const Ring& ring = a.ring();
  using V = typename Ring::value_type;
  using Table = std::map<std::uint64_t, V>;

  auto close = [&](const Table& table) {
    V acc = ring.zero();
    for (const auto& [w, v] : table) acc = ring.add(acc, ring.mul(v, a.x(Weight{w})));
    return acc;
  };

  std::map<std::string, Table> open;
  for (const auto& v : tree.order) {
    Table cur{{g.weight(v)[0], ring.one()}};
    if (auto it = tree.children.find(v); it != tree.children.end()) {
      for (const auto& [edge, child] : it->second) {
        Table sub = std::move(open.at(child));
        open.erase(child);
        const V cut = close(sub);
        const V& te = a.t(edge);
        Table next;
        auto accumulate = [&](std::uint64_t w, const V& val) {
          auto [slot, fresh] = next.try_emplace(w, val);
          if (!fresh) slot->second = ring.add(slot->second, val);
        };
        for (const auto& [w1, v1] : cur) {
          accumulate(w1, ring.mul(v1, cut));
          const V joined = ring.mul(v1, te);
          for (const auto& [w2, v2] : sub) accumulate(w1 + w2, ring.mul(joined, v2));
        }
        cur = std::move(next);
      }
    }
    open.emplace(v, std::move(cur));
  }
  return close(open.at(root));
}

// ---------------------------------------------------------------------------
// Half-partition gadget.

struct GadgetInstance {
  WeightedGraph tree;
  std::string root;
  Assignment<IntegerRing> point;
  std::vector<std::uint64_t> source_set;
  std::uint64_t target = 0;           // M / 2
  std::uint64_t internal_weight = 0;  // floor(3M / 2)
  std::size_t internal_nodes = 0;
};

// Full binary tree with ceil(log2 |S|) + 1 levels: the first |S| leaves carry
// S, the rest weight 0, internal nodes floor(3M/2). The point has t_e = 1 and
// x_s = 1 exactly for s in S, s = 0, and s = m floor(3M/2) + M/2 with
// 1 <= m <= #internal nodes. Requires |S| >= 2, positive elements, even M.
GadgetInstance build_partition_gadget(const std::vector<std::uint64_t>& set);

// Same weighting and point on an arbitrary rooted host tree with at least |S|
// leaves (breadth-first leaf order). Host vertex weights are overwritten.
GadgetInstance build_partition_gadget_general(const std::vector<std::uint64_t>& set,
                                              const WeightedGraph& host, const std::string& root);

// Minimal caterpillar (1 + 1/n)-ary host with at least |S| leaves.
WeightedGraph minimal_one_plus_1_over_n_host(std::size_t n, std::size_t set_size);

// eval_tree of the gadget at its point.
BigInt gadget_value(const GadgetInstance& gadget);

// Gadget decision: odd totals and sets of fewer than two elements are
// answered directly (false, except the empty set); otherwise the gadget value
// is tested for positivity.
bool decide_half_partition(const std::vector<std::uint64_t>& set);

// Subset-sum bitset check that some sub-multiset sums to exactly M / 2.
bool half_partition_exists(const std::vector<std::uint64_t>& set);

// ---------------------------------------------------------------------------
// Physical partition function
//   Z = sum_A prod_j X_j prod_{e in A} (exp(-beta J_e) - 1),
//   X_j = sum_{v in component j} exp(-beta M_v).

struct PhysicalParams {
  double beta = 1.0;
  std::map<std::string, double> coupling;  // J by edge id
  std::map<std::string, double> field;     // M by vertex id
};

// Direct floating-point sum over edge subsets.
double physical_partition_function(const WeightedGraph& g, const PhysicalParams& params,
                                   std::size_t max_edges = 20);

// Symbolic route: V-polynomial of the unit-vector re-weighting evaluated at
// t_e = exp(-beta J_e) - 1 and x_s = sum_{v in supp s} exp(-beta M_v).
double physical_partition_function_symbolic(const WeightedGraph& g, const PhysicalParams& params,
                                            std::size_t max_edges = 20);

}  // namespace vpoly
