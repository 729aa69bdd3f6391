#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "vpoly/assignment.hpp"
#include "vpoly/error.hpp"
#include "vpoly/vpolynomial.hpp"

using namespace vpoly;

namespace {

MultiPoly t(const std::string& e) { return MultiPoly::variable(VarKey::t(e)); }
MultiPoly x(std::uint64_t s) { return MultiPoly::variable(VarKey::x(Weight{s})); }

WeightedGraph triangle(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return make_cycle(3, {Weight{a}, Weight{b}, Weight{c}});
}

}  // namespace

TEST(FkPolynomial, UnitTriangleText) {
  EXPECT_EQ(fk_polynomial(triangle(1, 1, 1)).to_string(),
            "t[e1]*t[e2]*t[e3]*x[3] + t[e1]*t[e2]*x[3] + t[e1]*t[e3]*x[3] + t[e1]*x[1]*x[2] + "
            "t[e2]*t[e3]*x[3] + t[e2]*x[1]*x[2] + t[e3]*x[1]*x[2] + x[1]^3");
}

TEST(FkPolynomial, UnitTriangleMatchesFactoredForm) {
  auto expected = x(1) * x(1) * x(1) + (t("e1") + t("e2") + t("e3")) * x(2) * x(1) +
                  (t("e1") * t("e2") + t("e2") * t("e3") + t("e1") * t("e3") + t("e1") * t("e2") * t("e3")) * x(3);
  EXPECT_EQ(fk_polynomial(triangle(1, 1, 1)), expected);
}

TEST(FkPolynomial, PerturbedTriangleMatchesFactoredForm) {
  auto expected = x(1) * (x(0) * x(0) + x(0) * (t("e1") + t("e2") + t("e3")) +
                          t("e1") * (t("e2") + t("e3") + t("e2") * t("e3")) + t("e2") * t("e3"));
  auto fk = fk_polynomial(triangle(1, 0, 0));
  EXPECT_EQ(fk, expected);
  EXPECT_EQ(fk.to_string(),
            "t[e1]*t[e2]*t[e3]*x[1] + t[e1]*t[e2]*x[1] + t[e1]*t[e3]*x[1] + t[e1]*x[0]*x[1] + "
            "t[e2]*t[e3]*x[1] + t[e2]*x[0]*x[1] + t[e3]*x[0]*x[1] + x[0]^2*x[1]");
}

TEST(FkPolynomial, EdgelessGraph) {
  WeightedGraph g(1);
  g.add_vertex("a", Weight{2});
  g.add_vertex("b", Weight{2});
  g.add_vertex("c", Weight{5});
  EXPECT_EQ(fk_polynomial(g), x(2) * x(2) * x(5));
}

TEST(FkPolynomial, VariableCounts) {
  EXPECT_EQ(variables_of(fk_polynomial(triangle(1, 1, 1))).size(), 6u);
  EXPECT_EQ(variables_of(fk_polynomial(triangle(1, 0, 0))).size(), 5u);
  for (std::size_t m = 0; m <= 4; ++m)
    EXPECT_EQ(variables_of(fk_polynomial(make_banana(m, 1, 2))).size(), m + 4);
}

TEST(FkPolynomial, RefusesLargeGraphs) {
  auto g = make_cycle(21, oracle::unit_weights(21));
  EXPECT_THROW(fk_polynomial(g), RefusalError);
  EXPECT_NO_THROW(fk_polynomial(make_cycle(8, oracle::unit_weights(8)), ExpansionLimits{8}));
}

TEST(DcPolynomial, Examples) {
  auto loop = make_cycle(1, {Weight{2}});
  EXPECT_EQ(dc_polynomial(loop).to_string(), "t[e1]*x[2] + x[2]");
  EXPECT_EQ(dc_polynomial(make_banana(0, 1, 2)).to_string(), "t[e1]*x[3] + x[1]*x[2]");
  auto two_cycle = dc_polynomial(make_cycle(2, {Weight{1}, Weight{2}}));
  EXPECT_EQ(two_cycle, x(3) * (t("e1") + t("e2") + t("e1") * t("e2")) + x(1) * x(2));
}

TEST(DcPolynomial, DepthCap) {
  auto g = make_line(6, oracle::unit_weights(6));
  DeletionContractionOptions opts;
  opts.max_depth = 4;
  EXPECT_THROW(dc_polynomial(g, opts), RefusalError);
}

TEST(DcPolynomial, RejectsBadEdgeOrder) {
  auto g = make_line(3, oracle::unit_weights(3));
  DeletionContractionOptions opts;
  opts.edge_order = {"e2"};
  EXPECT_THROW(dc_polynomial(g, opts), InputError);
  opts.edge_order = {"e2", "e9"};
  EXPECT_THROW(dc_polynomial(g, opts), InputError);
}

TEST(DcPolynomial, ConfluenceUnderRandomOrders) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 150; ++i) {
    auto g = oracle::random_graph(rng, 5, 7, 3);
    auto reference = dc_polynomial(g);
    for (int k = 0; k < 3; ++k) {
      DeletionContractionOptions opts;
      opts.edge_order = g.edge_ids();
      std::shuffle(opts.edge_order.begin(), opts.edge_order.end(), rng);
      EXPECT_EQ(dc_polynomial(g, opts), reference);
    }
  }
}

TEST(FkPolynomial, MatchesOracleAndTermCensus) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    auto g = oracle::random_graph(rng, 6, 8, 3);
    auto fk = fk_polynomial(g);
    EXPECT_EQ(fk, oracle::fk(g));
    EXPECT_EQ(fk.term_count(), std::size_t{1} << g.edge_count());
    for (const auto& [m, c] : fk.terms()) EXPECT_EQ(c, 1);
  }
}

TEST(FkPolynomial, AllTZeroLeavesVertexProduct) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    auto g = oracle::random_graph(rng, 6, 7, 4);
    Assignment<IntegerRing> a;
    for (std::uint64_t s = 0; s <= 30; ++s) a.set_x(Weight{s}, static_cast<long>(rng() % 9) + 1);
    BigInt expected = 1;
    for (const auto& [id, w] : g.vertices()) expected *= a.x(w);
    EXPECT_EQ(evaluate(fk_polynomial(g), a), expected);
    EXPECT_EQ(evaluate(MultiPoly::term(vertex_monomial(g)), a), expected);
  }
}

TEST(DoubledEdge, BananaZeroGivesPairOfParallelEdges) {
  auto g = make_banana(0, 1, 2);
  auto doubled = doubled_edge_polynomial(g, "e1", "e2");
  EXPECT_EQ(doubled, x(3) * (t("e1") + t("e2") + t("e1") * t("e2")) + x(1) * x(2));
  EXPECT_EQ(doubled, fk_polynomial(make_banana(1, 1, 2)));
}

TEST(DoubledEdge, TriangleHasSixteenTerms) {
  auto g = triangle(1, 1, 1);
  auto doubled = doubled_edge_polynomial(g, "e1", "f");
  EXPECT_EQ(doubled.term_count(), 16u);
  EXPECT_EQ(doubled, fk_polynomial(double_edge(g, "e1", "f")));
}

TEST(DoubledEdge, IdentityOnRandomGraphsAndSwapSymmetry) {
  std::mt19937_64 rng(31);
  int checked = 0;
  while (checked < 150) {
    auto g = oracle::random_graph(rng, 5, 6, 3, 1);
    const auto ids = g.edge_ids();
    const auto& e = ids[rng() % ids.size()];
    if (g.edge(e).is_loop()) {
      EXPECT_THROW(doubled_edge_polynomial(g, e, "f"), InputError);
      continue;
    }
    auto doubled = doubled_edge_polynomial(g, e, "f");
    EXPECT_EQ(doubled, fk_polynomial(double_edge(g, e, "f")));

    // Swapping the roles of e and f leaves the polynomial unchanged.
    auto swapped = MultiPoly::parse([&] {
      std::string s = doubled.to_string();
      const std::string te = "t[" + e + "]", tf = "t[f]", tmp = "t[__swap__]";
      auto replace_all = [&](const std::string& from, const std::string& to) {
        for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size())
          s.replace(pos, from.size(), to);
      };
      replace_all(te, tmp);
      replace_all(tf, te);
      replace_all(tmp, tf);
      return s;
    }());
    EXPECT_EQ(swapped, doubled);
    ++checked;
  }
}
