#include "vpoly/evaluators.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>

#include "vpoly/vpolynomial.hpp"

namespace vpoly {

namespace {

std::string vid(std::size_t i) { return "v" + std::to_string(i); }
std::string eid(std::size_t i) { return "e" + std::to_string(i); }

// Checks vertices v1..vn and edges e1..e_{n-1} with e_i = {v_i, v_{i+1}}, plus
// the closing edge e_n = {v_n, v_1} when `closed`.
std::vector<Weight> family_weights(const WeightedGraph& g, bool closed) {
  const std::size_t n = g.vertex_count();
  const char* name = closed ? "cycle" : "line";
  if (n == 0) throw InputError(std::string("empty graph is not a ") + name);
  if (g.edge_count() != (closed ? n : n - 1))
    throw InputError(std::string("graph is not a canonical ") + name + ": wrong edge count");
  std::vector<Weight> weights;
  for (std::size_t i = 1; i <= n; ++i) {
    if (!g.has_vertex(vid(i)))
      throw InputError(std::string("graph is not a canonical ") + name + ": missing " + vid(i));
    weights.push_back(g.weight(vid(i)));
  }
  auto joins = [&](std::size_t k, std::size_t a, std::size_t b) {
    if (!g.has_edge(eid(k))) return false;
    const auto& e = g.edge(eid(k));
    return (e.u == vid(a) && e.v == vid(b)) || (e.u == vid(b) && e.v == vid(a));
  };
  for (std::size_t k = 1; k < n; ++k)
    if (!joins(k, k, k + 1))
      throw InputError(std::string("graph is not a canonical ") + name + ": bad edge " + eid(k));
  if (closed && !joins(n, n, 1))
    throw InputError("graph is not a canonical cycle: bad closing edge " + eid(n));
  return weights;
}

}  // namespace

std::vector<Weight> line_weights(const WeightedGraph& g) { return family_weights(g, false); }

std::vector<Weight> cycle_weights(const WeightedGraph& g) { return family_weights(g, true); }

namespace detail {

RootedTree root_tree(const WeightedGraph& g, const std::string& root) {
  if (g.weight_dim() != 1) throw InputError("tree evaluation needs weight_dim = 1");
  require_tree(g, root);
  std::uint64_t total = 0;
  for (const auto& [id, w] : g.vertices()) {
    if (w[0] > kMaxTreeWeight || total + w[0] > kMaxTreeWeight)
      throw RefusalError("tree total weight exceeds " + std::to_string(kMaxTreeWeight));
    total += w[0];
  }

  std::map<std::string, std::vector<std::pair<std::string, std::string>>> adj;
  for (const auto& [id, e] : g.edges()) {
    adj[e.u].emplace_back(id, e.v);
    adj[e.v].emplace_back(id, e.u);
  }
  RootedTree out;
  std::vector<std::string> bfs{root};
  std::set<std::string> seen{root};
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    const std::string v = bfs[i];
    for (const auto& [edge, w] : adj[v])
      if (seen.insert(w).second) {
        out.children[v].emplace_back(edge, w);
        bfs.push_back(w);
      }
  }
  out.order.assign(bfs.rbegin(), bfs.rend());
  return out;
}

}  // namespace detail

namespace {

std::uint64_t checked_total(const std::vector<std::uint64_t>& set) {
  std::uint64_t total = 0;
  for (auto s : set) {
    if (s == 0) throw InputError("partition elements must be positive");
    if (s > kMaxTreeWeight) throw RefusalError("partition element exceeds the weight bound");
    total += s;
  }
  return total;
}

// Weights a host tree and builds the gadget point.
GadgetInstance weight_gadget(const std::vector<std::uint64_t>& set, const WeightedGraph& host,
                             const std::string& root) {
  if (set.size() < 2) throw InputError("gadget needs at least two elements");
  const std::uint64_t total = checked_total(set);
  if (total % 2 != 0) throw InputError("gadget needs an even total (odd totals have no partition)");

  const auto leaves = tree_leaves(host, root);
  if (leaves.size() < set.size())
    throw InputError("host tree has " + std::to_string(leaves.size()) + " leaves, need " +
                     std::to_string(set.size()));

  GadgetInstance out{WeightedGraph(1), root, Assignment<IntegerRing>{}, set, total / 2,
                     3 * total / 2, host.vertex_count() - leaves.size()};
  if (out.internal_nodes * out.internal_weight + total > kMaxTreeWeight)
    throw RefusalError("gadget total weight exceeds " + std::to_string(kMaxTreeWeight));

  std::map<std::string, std::uint64_t> leaf_weight;
  for (std::size_t i = 0; i < leaves.size(); ++i)
    leaf_weight[leaves[i]] = i < set.size() ? set[i] : 0;
  for (const auto& [id, w] : host.vertices()) {
    auto it = leaf_weight.find(id);
    out.tree.add_vertex(id, Weight{it == leaf_weight.end() ? out.internal_weight : it->second});
  }
  for (const auto& [id, e] : host.edges()) {
    out.tree.add_edge(id, e.u, e.v);
    out.point.set_t(id, 1);
  }
  out.point.set_x(Weight{0}, 1);
  for (auto s : set) out.point.set_x(Weight{s}, 1);
  for (std::size_t m = 1; m <= out.internal_nodes; ++m)
    out.point.set_x(Weight{m * out.internal_weight + out.target}, 1);
  return out;
}

}  // namespace

GadgetInstance build_partition_gadget(const std::vector<std::uint64_t>& set) {
  if (set.size() < 2) throw InputError("gadget needs at least two elements");
  std::size_t levels = 1;
  while ((std::size_t{1} << (levels - 1)) < set.size()) ++levels;  // ceil(log2 |S|) + 1
  auto host = make_full_binary_tree(levels, {}, Weight{0});
  return weight_gadget(set, host, "v1");
}

GadgetInstance build_partition_gadget_general(const std::vector<std::uint64_t>& set,
                                              const WeightedGraph& host, const std::string& root) {
  return weight_gadget(set, host, root);
}

WeightedGraph minimal_one_plus_1_over_n_host(std::size_t n, std::size_t set_size) {
  if (n == 0) throw InputError("(1+1/n)-ary tree needs n >= 1");
  // ceil(I / n) + 1 leaves; the smallest I reaching set_size.
  const std::size_t internal = set_size <= 2 ? 1 : (set_size - 2) * n + 1;
  return make_one_plus_1_over_n_tree(n, internal, {}, Weight{0});
}

BigInt gadget_value(const GadgetInstance& gadget) {
  return eval_tree(gadget.tree, gadget.root, gadget.point);
}

bool decide_half_partition(const std::vector<std::uint64_t>& set) {
  const std::uint64_t total = checked_total(set);
  if (set.empty()) return true;
  if (set.size() == 1 || total % 2 != 0) return false;
  return gadget_value(build_partition_gadget(set)) > 0;
}

bool half_partition_exists(const std::vector<std::uint64_t>& set) {
  const std::uint64_t total = std::accumulate(set.begin(), set.end(), std::uint64_t{0});
  if (total % 2 != 0) return false;
  const std::uint64_t target = total / 2;
  std::vector<char> reachable(target + 1, 0);
  reachable[0] = 1;
  for (auto s : set)
    for (std::uint64_t w = target; w >= s && s > 0; --w)
      if (reachable[w - s]) reachable[w] = 1;
  return reachable[target];
}

namespace {

void check_params(const WeightedGraph& g, const PhysicalParams& params, std::size_t max_edges) {
  if (g.edge_count() > max_edges)
    throw RefusalError("physical partition function is capped at " + std::to_string(max_edges) +
                       " edges");
  if (!std::isfinite(params.beta)) throw InputError("beta must be finite");
  for (const auto& [id, e] : g.edges())
    if (!params.coupling.contains(id)) throw InputError("missing coupling J for edge " + id);
  for (const auto& [id, w] : g.vertices())
    if (!params.field.contains(id)) throw InputError("missing field M for vertex " + id);
}

double edge_factor(const PhysicalParams& params, const std::string& edge) {
  return FloatRing::check(std::expm1(-params.beta * params.coupling.at(edge)));
}

double vertex_factor(const PhysicalParams& params, const std::string& vertex) {
  return FloatRing::check(std::exp(-params.beta * params.field.at(vertex)));
}

}  // namespace

double physical_partition_function(const WeightedGraph& g, const PhysicalParams& params,
                                   std::size_t max_edges) {
  check_params(g, params, max_edges);
  const auto vids = g.vertex_ids();
  const std::size_t n = vids.size();
  std::vector<double> boltzmann;
  for (const auto& v : vids) boltzmann.push_back(vertex_factor(params, v));
  struct E {
    std::size_t u, v;
    double factor;
  };
  std::vector<E> edges;
  for (const auto& [id, e] : g.edges()) {
    auto pos = [&](const std::string& x) {
      return static_cast<std::size_t>(std::lower_bound(vids.begin(), vids.end(), x) - vids.begin());
    };
    edges.push_back({pos(e.u), pos(e.v), edge_factor(params, id)});
  }

  double z = 0.0;
  std::vector<std::vector<std::size_t>> adj(n);
  std::vector<char> seen(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    for (auto& a : adj) a.clear();
    double term = 1.0;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (mask >> i & 1) {
        adj[edges[i].u].push_back(edges[i].v);
        adj[edges[i].v].push_back(edges[i].u);
        term *= edges[i].factor;
      }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t s = 0; s < n; ++s) {
      if (seen[s]) continue;
      double x = 0.0;
      std::deque<std::size_t> queue{s};
      seen[s] = 1;
      while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        x += boltzmann[v];
        for (auto w : adj[v])
          if (!seen[w]) {
            seen[w] = 1;
            queue.push_back(w);
          }
      }
      term *= x;
    }
    z = FloatRing::check(z + FloatRing::check(term));
  }
  return z;
}

double physical_partition_function_symbolic(const WeightedGraph& g, const PhysicalParams& params,
                                            std::size_t max_edges) {
  check_params(g, params, max_edges);
  const auto unit = with_unit_vector_weights(g);
  const auto poly = fk_polynomial(unit, ExpansionLimits{max_edges});
  const auto vids = g.vertex_ids();

  Assignment<FloatRing> point;
  for (const auto& [id, e] : g.edges()) point.set_t(id, edge_factor(params, id));
  for (const auto& var : variables_of(poly)) {
    if (var.is_t()) continue;
    double x = 0.0;
    const auto coords = var.weight().coords();
    for (std::size_t i = 0; i < coords.size() && i < vids.size(); ++i)
      if (coords[i] != 0) x += vertex_factor(params, vids[i]);
    point.set_x(var.weight(), x);
  }
  return evaluate(poly, point);
}

}  // namespace vpoly
