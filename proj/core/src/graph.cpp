#include "vpoly/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

#include "vpoly/error.hpp"

namespace vpoly {

Weight::Weight(std::vector<std::uint64_t> coords) : coords_(std::move(coords)) {}

Weight::Weight(std::initializer_list<std::uint64_t> coords) : coords_(coords) {}

Weight Weight::zero(std::size_t dim) { return Weight(std::vector<std::uint64_t>(dim, 0)); }

Weight Weight::unit(std::size_t dim, std::size_t i) {
  if (i >= dim) throw InputError("unit weight index out of range");
  std::vector<std::uint64_t> c(dim, 0);
  c[i] = 1;
  return Weight(std::move(c));
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

Weight& Weight::operator+=(const Weight& other) {
  if (other.dim() != dim()) throw InputError("weight dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] > std::numeric_limits<std::uint64_t>::max() - other.coords_[i])
      throw InputError("weight coordinate overflow");
    coords_[i] += other.coords_[i];
  }
  return *this;
}

std::string Weight::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coords_[i]);
  }
  return out;
}

WeightedGraph::WeightedGraph(std::size_t weight_dim) : weight_dim_(weight_dim) {
  if (weight_dim == 0) throw InputError("weight_dim must be at least 1");
}

void WeightedGraph::add_vertex(const std::string& id, Weight weight) {
  if (id.empty()) throw InputError("empty vertex id");
  if (weight.dim() != weight_dim_)
    throw InputError("vertex " + id + ": weight has dimension " + std::to_string(weight.dim()) +
                     ", expected " + std::to_string(weight_dim_));
  if (!vertices_.emplace(id, std::move(weight)).second)
    throw InputError("duplicate vertex id " + id);
}

void WeightedGraph::add_edge(const std::string& id, const std::string& u, const std::string& v) {
  if (id.empty()) throw InputError("empty edge id");
  if (!has_vertex(u) || !has_vertex(v))
    throw InputError("edge " + id + " references an unknown vertex");
  if (!edges_.emplace(id, Edge{id, u, v}).second) throw InputError("duplicate edge id " + id);
}

const Weight& WeightedGraph::weight(const std::string& vertex_id) const {
  auto it = vertices_.find(vertex_id);
  if (it == vertices_.end()) throw InputError("unknown vertex id " + vertex_id);
  return it->second;
}

const Edge& WeightedGraph::edge(const std::string& edge_id) const {
  auto it = edges_.find(edge_id);
  if (it == edges_.end()) throw InputError("unknown edge id " + edge_id);
  return it->second;
}

std::vector<std::string> WeightedGraph::vertex_ids() const {
  std::vector<std::string> ids;
  ids.reserve(vertices_.size());
  for (const auto& [id, w] : vertices_) ids.push_back(id);
  return ids;
}

std::vector<std::string> WeightedGraph::edge_ids() const {
  std::vector<std::string> ids;
  ids.reserve(edges_.size());
  for (const auto& [id, e] : edges_) ids.push_back(id);
  return ids;
}

Weight WeightedGraph::total_weight() const {
  Weight total = Weight::zero(weight_dim_);
  for (const auto& [id, w] : vertices_) total += w;
  return total;
}

std::size_t WeightedGraph::degree(const std::string& vertex_id) const {
  weight(vertex_id);
  std::size_t d = 0;
  for (const auto& [id, e] : edges_) {
    if (e.u == vertex_id) ++d;
    if (e.v == vertex_id) ++d;
  }
  return d;
}

WeightedGraph delete_edge(const WeightedGraph& g, const std::string& edge_id) {
  g.edge(edge_id);
  WeightedGraph out(g.weight_dim());
  for (const auto& [id, w] : g.vertices()) out.add_vertex(id, w);
  for (const auto& [id, e] : g.edges())
    if (id != edge_id) out.add_edge(id, e.u, e.v);
  return out;
}

WeightedGraph contract_edge(const WeightedGraph& g, const std::string& edge_id) {
  const Edge& target = g.edge(edge_id);
  if (target.is_loop()) throw ContractLoopError("cannot contract looping edge " + edge_id);
  const std::string& keep = std::min(target.u, target.v);
  const std::string& drop = std::max(target.u, target.v);

  WeightedGraph out(g.weight_dim());
  for (const auto& [id, w] : g.vertices()) {
    if (id == drop) continue;
    out.add_vertex(id, id == keep ? g.weight(keep) + g.weight(drop) : w);
  }
  auto remap = [&](const std::string& v) -> const std::string& { return v == drop ? keep : v; };
  for (const auto& [id, e] : g.edges())
    if (id != edge_id) out.add_edge(id, remap(e.u), remap(e.v));
  return out;
}

WeightedGraph double_edge(const WeightedGraph& g, const std::string& edge_id,
                          const std::string& new_edge_id) {
  const Edge& e = g.edge(edge_id);
  if (e.is_loop()) throw InputError("cannot double looping edge " + edge_id);
  if (g.has_edge(new_edge_id)) throw InputError("edge id " + new_edge_id + " already in use");
  WeightedGraph out = g;
  out.add_edge(new_edge_id, e.u, e.v);
  return out;
}

namespace {

void check_subset(const WeightedGraph& g, const std::set<std::string>& edge_subset) {
  for (const auto& id : edge_subset)
    if (!g.has_edge(id)) throw InputError("edge subset contains unknown edge id " + id);
}

ComponentDecomposition finish(const WeightedGraph& g, const std::vector<std::string>& ids,
                              const std::vector<std::size_t>& label) {
  // `label` maps each vertex index to a component representative; blocks come
  // out ordered by their smallest member because ids are scanned in order.
  ComponentDecomposition out;
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    auto [it, fresh] = slot.emplace(label[i], out.blocks.size());
    if (fresh) {
      out.blocks.emplace_back();
      out.weights.push_back(Weight::zero(g.weight_dim()));
    }
    out.blocks[it->second].push_back(ids[i]);
    out.weights[it->second] += g.weight(ids[i]);
  }
  return out;
}

std::size_t index_of(const std::vector<std::string>& ids, const std::string& id) {
  return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
}

}  // namespace

ComponentDecomposition components(const WeightedGraph& g,
                                  const std::set<std::string>& edge_subset) {
  check_subset(g, edge_subset);
  const auto ids = g.vertex_ids();
  std::vector<std::size_t> parent(ids.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& eid : edge_subset) {
    const Edge& e = g.edge(eid);
    auto a = find(index_of(ids, e.u));
    auto b = find(index_of(ids, e.v));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> label(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) label[i] = find(i);
  return finish(g, ids, label);
}

ComponentDecomposition components_bfs(const WeightedGraph& g,
                                      const std::set<std::string>& edge_subset) {
  check_subset(g, edge_subset);
  const auto ids = g.vertex_ids();
  std::vector<std::vector<std::size_t>> adj(ids.size());
  for (const auto& eid : edge_subset) {
    const Edge& e = g.edge(eid);
    auto a = index_of(ids, e.u);
    auto b = index_of(ids, e.v);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  constexpr auto unseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> label(ids.size(), unseen);
  for (std::size_t s = 0; s < ids.size(); ++s) {
    if (label[s] != unseen) continue;
    std::deque<std::size_t> queue{s};
    label[s] = s;
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      for (auto y : adj[x])
        if (label[y] == unseen) {
          label[y] = s;
          queue.push_back(y);
        }
    }
  }
  return finish(g, ids, label);
}

bool is_connected(const WeightedGraph& g) {
  auto all = g.edge_ids();
  return components_bfs(g, {all.begin(), all.end()}).count() <= 1;
}

WeightedGraph with_unit_vector_weights(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  WeightedGraph out(std::max<std::size_t>(n, 1));
  std::size_t i = 0;
  for (const auto& [id, w] : g.vertices()) out.add_vertex(id, Weight::unit(n, i++));
  for (const auto& [id, e] : g.edges()) out.add_edge(id, e.u, e.v);
  return out;
}

namespace {

std::string vid(std::size_t i) { return "v" + std::to_string(i); }
std::string eid(std::size_t i) { return "e" + std::to_string(i); }

std::size_t common_dim(const std::vector<Weight>& ws, const Weight* extra = nullptr) {
  std::size_t dim = extra ? extra->dim() : (ws.empty() ? 1 : ws.front().dim());
  for (const auto& w : ws)
    if (w.dim() != dim) throw InputError("weights have inconsistent dimensions");
  if (dim == 0) throw InputError("weights must have dimension at least 1");
  return dim;
}

}  // namespace

WeightedGraph make_line(std::size_t n, const std::vector<Weight>& weights) {
  if (n == 0) throw InputError("line needs at least one vertex");
  if (weights.size() != n) throw InputError("line(n) needs exactly n weights");
  WeightedGraph g(common_dim(weights));
  for (std::size_t i = 1; i <= n; ++i) g.add_vertex(vid(i), weights[i - 1]);
  for (std::size_t i = 1; i < n; ++i) g.add_edge(eid(i), vid(i), vid(i + 1));
  return g;
}

WeightedGraph make_cycle(std::size_t n, const std::vector<Weight>& weights) {
  WeightedGraph g = make_line(n, weights);
  g.add_edge(eid(n), vid(n), vid(1));
  return g;
}

WeightedGraph make_banana(std::size_t m, std::uint64_t c1, std::uint64_t c2) {
  if (c1 == 0 || c2 == 0 || c1 == c2)
    throw InputError("banana weights must be positive and distinct");
  WeightedGraph g(1);
  g.add_vertex("v1", Weight{c1});
  g.add_vertex("v2", Weight{c2});
  for (std::size_t i = 1; i <= m + 1; ++i) g.add_edge(eid(i), "v1", "v2");
  return g;
}

WeightedGraph make_full_binary_tree(std::size_t levels, const std::vector<Weight>& leaf_weights,
                                    const Weight& internal_weight) {
  if (levels == 0 || levels > 24) throw InputError("binary tree levels must be in 1..24");
  const std::size_t dim = common_dim(leaf_weights, &internal_weight);
  const std::size_t nodes = (std::size_t{1} << levels) - 1;
  const std::size_t first_leaf = std::size_t{1} << (levels - 1);
  if (leaf_weights.size() > nodes - first_leaf + 1)
    throw InputError("more leaf weights than leaves");
  WeightedGraph g(dim);
  for (std::size_t k = 1; k <= nodes; ++k) {
    if (k < first_leaf) {
      g.add_vertex(vid(k), internal_weight);
    } else {
      std::size_t leaf = k - first_leaf;
      g.add_vertex(vid(k), leaf < leaf_weights.size() ? leaf_weights[leaf] : Weight::zero(dim));
    }
  }
  for (std::size_t k = 2; k <= nodes; ++k) g.add_edge(eid(k - 1), vid(k / 2), vid(k));
  return g;
}

WeightedGraph make_one_plus_1_over_n_tree(std::size_t n, std::size_t internal_nodes,
                                          const std::vector<Weight>& leaf_weights,
                                          const Weight& internal_weight) {
  if (n == 0) throw InputError("(1+1/n)-ary tree needs n >= 1");
  if (internal_nodes == 0) throw InputError("(1+1/n)-ary tree needs at least one internal node");
  const std::size_t dim = common_dim(leaf_weights, &internal_weight);
  const std::size_t spine = internal_nodes;
  const std::size_t branching = (spine + n - 1) / n;
  const std::size_t leaves = branching + 1;
  if (leaf_weights.size() > leaves) throw InputError("more leaf weights than leaves");

  WeightedGraph g(dim);
  for (std::size_t i = 1; i <= spine; ++i) g.add_vertex(vid(i), internal_weight);
  std::size_t next_vertex = spine + 1;
  std::size_t next_edge = 1;
  for (std::size_t i = 1; i < spine; ++i) g.add_edge(eid(next_edge++), vid(i), vid(i + 1));

  std::size_t leaf = 0;
  auto add_leaf = [&](std::size_t parent) {
    g.add_vertex(vid(next_vertex),
                 leaf < leaf_weights.size() ? leaf_weights[leaf] : Weight::zero(dim));
    g.add_edge(eid(next_edge++), vid(parent), vid(next_vertex));
    ++next_vertex;
    ++leaf;
  };
  for (std::size_t i = 1; i <= spine; ++i) {
    const bool branches = (spine - i) % n == 0;
    if (i < spine) {
      if (branches) add_leaf(i);
    } else {
      add_leaf(i);
      add_leaf(i);
    }
  }
  return g;
}

void require_tree(const WeightedGraph& g, const std::string& root) {
  if (!g.has_vertex(root)) throw InputError("root " + root + " is not a vertex");
  if (g.edge_count() + 1 != g.vertex_count() || !is_connected(g))
    throw InputError("graph is not a tree");
}

std::vector<std::string> tree_leaves(const WeightedGraph& tree, const std::string& root) {
  require_tree(tree, root);
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& [id, e] : tree.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());

  std::vector<std::string> leaves;
  std::set<std::string> seen{root};
  std::deque<std::string> queue{root};
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    std::size_t children = 0;
    for (const auto& w : adj[v])
      if (seen.insert(w).second) {
        queue.push_back(w);
        ++children;
      }
    if (children == 0 && (v != root || tree.vertex_count() == 1)) leaves.push_back(v);
  }
  return leaves;
}

}  // namespace vpoly
