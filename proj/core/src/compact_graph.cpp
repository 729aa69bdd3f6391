#include "vpoly/detail/compact_graph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "vpoly/error.hpp"

namespace vpoly::detail {

CompactGraph CompactGraph::from(const WeightedGraph& g, std::span<const std::string> order,
                                std::vector<std::string>& rank_to_id) {
  rank_to_id = order.empty() ? g.edge_ids() : std::vector<std::string>(order.begin(), order.end());
  if (rank_to_id.size() != g.edge_count() ||
      std::set<std::string>(rank_to_id.begin(), rank_to_id.end()).size() != g.edge_count())
    throw InputError("edge order must list every edge exactly once");

  CompactGraph out;
  std::map<std::string, std::size_t> index;
  for (const auto& [id, w] : g.vertices()) {
    index.emplace(id, out.weights.size());
    out.weights.push_back(w);
  }
  for (std::size_t r = 0; r < rank_to_id.size(); ++r) {
    const auto& e = g.edge(rank_to_id[r]);
    out.edges.push_back({r, index.at(e.u), index.at(e.v)});
  }
  return out;
}

CompactGraph CompactGraph::without_first_edge() const {
  CompactGraph out;
  out.weights = weights;
  out.edges.assign(edges.begin() + 1, edges.end());
  return out;
}

CompactGraph CompactGraph::contract_first_edge() const {
  const auto& e = edges.front();
  const std::size_t keep = std::min(e.u, e.v);
  const std::size_t drop = std::max(e.u, e.v);
  auto remap = [&](std::size_t x) {
    if (x == drop) return keep;
    return x > drop ? x - 1 : x;
  };
  CompactGraph out;
  out.weights.reserve(weights.size() - 1);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i == drop) continue;
    out.weights.push_back(i == keep ? weights[keep] + weights[drop] : weights[i]);
  }
  out.edges.reserve(edges.size() - 1);
  for (std::size_t i = 1; i < edges.size(); ++i)
    out.edges.push_back({edges[i].rank, remap(edges[i].u), remap(edges[i].v)});
  return out;
}

std::vector<Weight> CompactGraph::take_isolated() {
  std::vector<bool> touched(weights.size(), false);
  for (const auto& e : edges) touched[e.u] = touched[e.v] = true;
  std::vector<Weight> isolated;
  std::vector<std::size_t> new_index(weights.size());
  std::vector<Weight> kept;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (touched[i]) {
      new_index[i] = kept.size();
      kept.push_back(std::move(weights[i]));
    } else {
      isolated.push_back(std::move(weights[i]));
    }
  }
  weights = std::move(kept);
  for (auto& e : edges) {
    e.u = new_index[e.u];
    e.v = new_index[e.v];
  }
  return isolated;
}

std::vector<std::uint64_t> CompactGraph::key() const {
  // Relabel vertices by first appearance along the rank-ordered edge list.
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> label(weights.size(), unset);
  std::size_t next = 0;
  for (const auto& e : edges) {
    if (label[e.u] == unset) label[e.u] = next++;
    if (label[e.v] == unset) label[e.v] = next++;
  }
  std::vector<std::size_t> by_label(next);
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (label[i] != unset) by_label[label[i]] = i;

  std::vector<std::uint64_t> k;
  const std::size_t dim = weights.empty() ? 0 : weights.front().dim();
  k.reserve(3 + next * dim + 3 * edges.size());
  k.push_back(next);
  for (auto i : by_label)
    for (auto c : weights[i].coords()) k.push_back(c);
  k.push_back(edges.size());
  for (const auto& e : edges) {
    auto a = label[e.u];
    auto b = label[e.v];
    k.push_back(e.rank);
    k.push_back(std::min(a, b));
    k.push_back(std::max(a, b));
  }
  return k;
}

std::size_t KeyHash::operator()(const std::vector<std::uint64_t>& k) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (auto v : k) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace vpoly::detail
