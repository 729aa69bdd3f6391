#pragma once

// Slow, independent reference implementations used only by the tests. None of
// these call into the library's algorithms; they read graph data and use
// MultiPoly as a container.

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "vpoly/assignment.hpp"
#include "vpoly/graph.hpp"
#include "vpoly/multipoly.hpp"

namespace oracle {

using vpoly::BigInt;
using vpoly::Weight;
using vpoly::WeightedGraph;

struct RawGraph {
  std::vector<std::string> vertex_ids;
  std::vector<Weight> weights;
  std::vector<std::string> edge_ids;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
};

inline RawGraph raw(const WeightedGraph& g) {
  RawGraph r;
  std::map<std::string, std::size_t> index;
  for (const auto& [id, w] : g.vertices()) {
    index[id] = r.vertex_ids.size();
    r.vertex_ids.push_back(id);
    r.weights.push_back(w);
  }
  for (const auto& [id, e] : g.edges()) {
    r.edge_ids.push_back(id);
    r.ends.emplace_back(index.at(e.u), index.at(e.v));
  }
  return r;
}

// Component label of every vertex for the edge subset `mask`, by flood fill.
inline std::vector<std::size_t> flood(const RawGraph& r, std::uint64_t mask) {
  const std::size_t n = r.vertex_ids.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < r.ends.size(); ++i) {
    if (!(mask >> i & 1)) continue;
    adj[r.ends[i].first].push_back(r.ends[i].second);
    adj[r.ends[i].second].push_back(r.ends[i].first);
  }
  std::vector<std::size_t> label(n, n);
  std::size_t next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] != n) continue;
    std::vector<std::size_t> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (auto w : adj[u])
        if (label[w] == n) {
          label[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return label;
}

inline std::vector<Weight> component_weights(const RawGraph& r, std::uint64_t mask) {
  const auto label = flood(r, mask);
  std::map<std::size_t, std::vector<std::uint64_t>> sums;
  const std::size_t dim = r.weights.empty() ? 1 : r.weights[0].dim();
  for (std::size_t v = 0; v < label.size(); ++v) {
    auto& s = sums.try_emplace(label[v], std::vector<std::uint64_t>(dim, 0)).first->second;
    for (std::size_t k = 0; k < dim; ++k) s[k] += r.weights[v][k];
  }
  std::vector<Weight> out;
  for (auto& [_, s] : sums) out.emplace_back(std::move(s));
  return out;
}

inline vpoly::MultiPoly fk(const WeightedGraph& g) {
  const auto r = raw(g);
  vpoly::MultiPoly p;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r.edge_ids.size()); ++mask) {
    std::vector<vpoly::Monomial::Factor> f;
    for (std::size_t i = 0; i < r.edge_ids.size(); ++i)
      if (mask >> i & 1) f.emplace_back(vpoly::VarKey::t(r.edge_ids[i]), 1);
    for (const auto& w : component_weights(r, mask)) f.emplace_back(vpoly::VarKey::x(w), 1);
    p.add_term(vpoly::Monomial(std::move(f)), 1);
  }
  return p;
}

// FK sum evaluated directly at a point.
template <class Ring>
typename Ring::value_type fk_value(const WeightedGraph& g, const vpoly::Assignment<Ring>& a) {
  const auto r = raw(g);
  const Ring& ring = a.ring();
  auto total = ring.zero();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r.edge_ids.size()); ++mask) {
    auto term = ring.one();
    for (std::size_t i = 0; i < r.edge_ids.size(); ++i)
      if (mask >> i & 1) term = ring.mul(term, a.t(r.edge_ids[i]));
    for (const auto& w : component_weights(r, mask)) term = ring.mul(term, a.x(w));
    total = ring.add(total, term);
  }
  return total;
}

// Some sub-multiset sums to half the total (the total must be even).
inline bool half_partition(const std::vector<std::uint64_t>& s) {
  std::uint64_t total = 0;
  for (auto v : s) total += v;
  if (total % 2) return false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s.size()); ++mask) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (mask >> i & 1) sum += s[i];
    if (2 * sum == total) return true;
  }
  return false;
}

inline std::uint64_t eval_mod(const vpoly::MultiPoly& poly, const std::map<vpoly::VarKey, std::uint64_t>& at,
                              std::uint64_t p) {
  std::uint64_t acc = 0;
  for (const auto& [m, c] : poly.terms()) {
    BigInt r = c % p;
    if (r < 0) r += p;
    std::uint64_t v = r.convert_to<std::uint64_t>();
    for (const auto& [var, e] : m.factors())
      for (std::uint32_t k = 0; k < e; ++k) v = v * at.at(var) % p;
    acc = (acc + v) % p;
  }
  return acc;
}

// Zeros of `poly` in F_p^{|ambient|} by full enumeration.
inline std::uint64_t count_zeros(const vpoly::MultiPoly& poly, const std::vector<vpoly::VarKey>& ambient,
                                 std::uint64_t p) {
  std::map<vpoly::VarKey, std::uint64_t> at;
  for (const auto& v : ambient) at[v] = 0;
  std::uint64_t zeros = 0;
  while (true) {
    if (eval_mod(poly, at, p) == 0) ++zeros;
    std::size_t d = 0;
    for (; d < ambient.size(); ++d) {
      if (++at[ambient[d]] < p) break;
      at[ambient[d]] = 0;
    }
    if (d == ambient.size()) break;
  }
  return zeros;
}

// Z = sum_A prod_components (sum_v exp(-beta M_v)) prod_{e in A} (exp(-beta J_e) - 1).
inline double physical(const WeightedGraph& g, double beta, const std::map<std::string, double>& J,
                       const std::map<std::string, double>& M) {
  const auto r = raw(g);
  double total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r.edge_ids.size()); ++mask) {
    double term = 1;
    for (std::size_t i = 0; i < r.edge_ids.size(); ++i)
      if (mask >> i & 1) term *= std::exp(-beta * J.at(r.edge_ids[i])) - 1;
    const auto label = flood(r, mask);
    std::map<std::size_t, double> x;
    for (std::size_t v = 0; v < label.size(); ++v) x[label[v]] += std::exp(-beta * M.at(r.vertex_ids[v]));
    for (const auto& [_, xv] : x) term *= xv;
    total += term;
  }
  return total;
}

// Random multigraph with vertices v1..vn and edges e1..em (loops allowed).
inline WeightedGraph random_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges,
                                  std::uint64_t max_weight, std::size_t min_edges = 0) {
  const auto n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
  const auto m = std::uniform_int_distribution<std::size_t>(min_edges, max_edges)(rng);
  WeightedGraph g(1);
  for (std::size_t i = 1; i <= n; ++i)
    g.add_vertex("v" + std::to_string(i), Weight{std::uniform_int_distribution<std::uint64_t>(0, max_weight)(rng)});
  std::uniform_int_distribution<std::size_t> pick(1, n);
  for (std::size_t i = 1; i <= m; ++i)
    g.add_edge("e" + std::to_string(i), "v" + std::to_string(pick(rng)), "v" + std::to_string(pick(rng)));
  return g;
}

// Calls `visit` on every multigraph with 1..max_vertices vertices, at most
// max_edges edges (loops and parallel edges included, counted as multisets of
// endpoint pairs) and vertex weights in 0..max_weight.
inline void for_each_small_multigraph(std::size_t max_vertices, std::size_t max_edges, std::uint64_t max_weight,
                                      const std::function<void(const WeightedGraph&)>& visit) {
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u; v < n; ++v) slots.emplace_back(u, v);
    std::vector<std::vector<std::size_t>> multisets{{}};
    std::function<void(std::vector<std::size_t>&, std::size_t)> grow = [&](std::vector<std::size_t>& cur,
                                                                          std::size_t from) {
      if (cur.size() == max_edges) return;
      for (std::size_t s = from; s < slots.size(); ++s) {
        cur.push_back(s);
        multisets.push_back(cur);
        grow(cur, s);
        cur.pop_back();
      }
    };
    std::vector<std::size_t> cur;
    grow(cur, 0);

    std::vector<std::uint64_t> w(n, 0);
    while (true) {
      for (const auto& ms : multisets) {
        WeightedGraph g(1);
        for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i + 1), Weight{w[i]});
        for (std::size_t i = 0; i < ms.size(); ++i)
          g.add_edge("e" + std::to_string(i + 1), "v" + std::to_string(slots[ms[i]].first + 1),
                     "v" + std::to_string(slots[ms[i]].second + 1));
        visit(g);
      }
      std::size_t d = 0;
      for (; d < n; ++d) {
        if (++w[d] <= max_weight) break;
        w[d] = 0;
      }
      if (d == n) break;
    }
  }
}

inline std::vector<Weight> unit_weights(std::size_t n) { return std::vector<Weight>(n, Weight{1}); }

}  // namespace oracle
