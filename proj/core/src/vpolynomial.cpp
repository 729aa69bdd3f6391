#include "vpoly/vpolynomial.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "vpoly/detail/compact_graph.hpp"
#include "vpoly/error.hpp"

namespace vpoly {

namespace {

Monomial weights_monomial(std::vector<Weight> weights) {
  std::sort(weights.begin(), weights.end());
  std::vector<Monomial::Factor> factors;
  for (auto& w : weights) {
    if (!factors.empty() && factors.back().first.weight() == w)
      ++factors.back().second;
    else
      factors.emplace_back(VarKey::x(std::move(w)), 1);
  }
  return Monomial(std::move(factors));
}

}  // namespace

Monomial vertex_monomial(const WeightedGraph& g) {
  std::vector<Weight> ws;
  for (const auto& [id, w] : g.vertices()) ws.push_back(w);
  return weights_monomial(std::move(ws));
}

MultiPoly fk_polynomial(const WeightedGraph& g, const ExpansionLimits& limits) {
  const std::size_t m = g.edge_count();
  if (m > limits.max_edges)
    throw RefusalError("graph has " + std::to_string(m) + " edges; full expansion is capped at " +
                       std::to_string(limits.max_edges));

  const auto vids = g.vertex_ids();
  std::vector<Weight> weights;
  for (const auto& id : vids) weights.push_back(g.weight(id));
  struct IndexEdge {
    std::size_t u, v;
    VarKey t;
  };
  std::vector<IndexEdge> edges;
  for (const auto& [id, e] : g.edges()) {
    auto pos = [&](const std::string& v) {
      return static_cast<std::size_t>(std::lower_bound(vids.begin(), vids.end(), v) - vids.begin());
    };
    edges.push_back({pos(e.u), pos(e.v), VarKey::t(id)});
  }

  MultiPoly out;
  std::vector<std::size_t> parent(vids.size());
  const std::uint64_t subsets = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<Monomial::Factor> factors;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(mask >> i & 1)) continue;
      factors.emplace_back(edges[i].t, 1);
      auto a = find(edges[i].u);
      auto b = find(edges[i].v);
      if (a != b) parent[a] = b;
    }
    std::vector<Weight> sums(vids.size());
    std::vector<bool> used(vids.size(), false);
    for (std::size_t v = 0; v < vids.size(); ++v) {
      auto r = find(v);
      if (!used[r]) {
        used[r] = true;
        sums[r] = weights[v];
      } else {
        sums[r] += weights[v];
      }
    }
    std::vector<Weight> comps;
    for (std::size_t r = 0; r < vids.size(); ++r)
      if (used[r]) comps.push_back(std::move(sums[r]));
    out.add_term(Monomial(std::move(factors)) * weights_monomial(std::move(comps)), 1);
  }
  return out;
}

namespace {

class DcExpander {
 public:
  explicit DcExpander(std::vector<std::string> rank_to_id) : rank_to_id_(std::move(rank_to_id)) {}

  MultiPoly expand(detail::CompactGraph g) {
    auto isolated = g.take_isolated();
    MultiPoly core = expand_core(g);
    return isolated.empty() ? core : core.times(weights_monomial(std::move(isolated)));
  }

 private:
  MultiPoly expand_core(const detail::CompactGraph& g) {
    if (g.edges.empty()) return MultiPoly::constant(1);
    auto key = g.key();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const auto& e = g.edges.front();
    const Monomial te = Monomial::of(VarKey::t(rank_to_id_[e.rank]));
    MultiPoly result;
    if (e.u == e.v) {
      MultiPoly rest = expand(g.without_first_edge());
      result = rest.times(te);
      result += rest;
    } else {
      result = expand(g.without_first_edge());
      result += expand(g.contract_first_edge()).times(te);
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

  std::vector<std::string> rank_to_id_;
  std::unordered_map<std::vector<std::uint64_t>, MultiPoly, detail::KeyHash> memo_;
};

}  // namespace

MultiPoly dc_polynomial(const WeightedGraph& g, const DeletionContractionOptions& options) {
  if (g.edge_count() > options.max_depth)
    throw RefusalError("deletion-contraction depth " + std::to_string(g.edge_count()) +
                       " exceeds the cap of " + std::to_string(options.max_depth));
  std::vector<std::string> rank_to_id;
  auto compact = detail::CompactGraph::from(g, options.edge_order, rank_to_id);
  return DcExpander(std::move(rank_to_id)).expand(std::move(compact));
}

MultiPoly doubled_edge_polynomial(const WeightedGraph& g, const std::string& e,
                                  const std::string& f, const ExpansionLimits& limits) {
  if (g.edge(e).is_loop()) throw InputError("cannot double looping edge " + e);
  if (g.has_edge(f)) throw InputError("edge id " + f + " already in use");
  const VarKey te = VarKey::t(e);
  const VarKey tf = VarKey::t(f);
  MultiPoly factor = MultiPoly::variable(te) + MultiPoly::variable(tf) +
                     MultiPoly::term(Monomial({{te, 1}, {tf, 1}}));
  return fk_polynomial(delete_edge(g, e), limits) +
         factor * fk_polynomial(contract_edge(g, e), limits);
}

}  // namespace vpoly
