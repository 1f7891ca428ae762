#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "tropical/applications.hpp"
#include "tropical/apsp.hpp"

using namespace tropical;
using namespace tropical::apps;

namespace {

EdgeListGraph random_graph(std::size_t n, std::size_t m, bool directed, std::uint64_t max_w, std::mt19937_64& rng) {
  EdgeListGraph g;
  g.n = n;
  g.directed = directed;
  while (g.edges.size() < m) {
    std::size_t u = rng() % n, v = rng() % n;
    if (u != v) g.edges.push_back({u, v, Weight(rng() % (max_w + 1))});
  }
  return g;
}

// Triple loop over every cell and midpoint.
bool metric_brute(const WeightMatrix& d) {
  const std::size_t n = d.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (d(i, i) != Weight(0)) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && d(i, j) == Weight(0)) return false;
      if (d(i, j) != d(j, i)) return false;
      for (std::size_t k = 0; k < n; ++k)
        if (d(i, k) + d(k, j) < d(i, j)) return false;
    }
  }
  return true;
}

WeightMatrix symmetric_distances(const EdgeListGraph& g) {
  WeightMatrix w = g.adjacency();
  for (std::size_t i = 0; i < g.n; ++i) w(i, i) = Weight(0);
  return floyd_warshall(w).distances;
}

}  // namespace

TEST(GraphIo, RoundTripAndErrors) {
  std::mt19937_64 rng(1);
  auto g = random_graph(6, 9, true, 20, rng);
  std::stringstream ss;
  write_graph(ss, g);
  auto h = read_graph(ss);
  EXPECT_EQ(h.n, g.n);
  EXPECT_EQ(h.directed, g.directed);
  ASSERT_EQ(h.edges.size(), g.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) EXPECT_EQ(h.edges[i].w, g.edges[i].w);
  std::stringstream bad("3 1 0\n0 5 1\n");
  EXPECT_THROW(read_graph(bad), std::runtime_error);
  std::stringstream inf("3 1 0\n0 1 INF\n");
  EXPECT_THROW(read_graph(inf), std::runtime_error);
}

TEST(Metric, ShortestPathMatricesAreMetric) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = random_graph(12, 30, false, 50, rng);
    for (auto& e : g.edges) e.w = Weight(e.w.value() + 1);
    auto v = is_metric(symmetric_distances(g));
    EXPECT_TRUE(v.metric) << v.property;
  }
}

TEST(Metric, ConstructedTriangleViolation) {
  WeightMatrix d(3, 3);
  for (std::size_t i = 0; i < 3; ++i) d(i, i) = Weight(0);
  d(0, 1) = d(1, 0) = Weight(10);
  d(0, 2) = d(2, 0) = Weight(1);
  d(2, 1) = d(1, 2) = Weight(1);
  auto v = is_metric(d);
  EXPECT_FALSE(v.metric);
  EXPECT_EQ(v.property, "triangle");
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(*v.witness, (std::array<std::size_t, 3>{0, 2, 1}));
}

TEST(Metric, PropertyViolations) {
  WeightMatrix d(2, 2, Weight(3));
  EXPECT_EQ(is_metric(d).property, "diagonal");
  d(0, 0) = d(1, 1) = Weight(0);
  d(0, 1) = Weight(4);
  EXPECT_EQ(is_metric(d).property, "symmetry");
  d(0, 1) = d(1, 0) = Weight(0);
  EXPECT_EQ(is_metric(d).property, "positivity");
  EXPECT_THROW(is_metric(WeightMatrix(2, 3)), std::invalid_argument);
}

TEST(Metric, RandomMatricesMatchTripleLoop) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng() % 7;
    WeightMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      d(i, i) = Weight(trial % 17 == 0 ? 1 : 0);
      for (std::size_t j = i + 1; j < n; ++j) d(i, j) = d(j, i) = Weight(1 + rng() % 4);
    }
    if (trial % 11 == 0 && n > 1) d(0, 1) = Weight(9);
    auto v = is_metric(d);
    ASSERT_EQ(v.metric, metric_brute(d));
    if (v.witness) {
      auto [i, k, j] = *v.witness;
      EXPECT_LT(d(i, k) + d(k, j), d(i, j));
    }
  }
}

TEST(Triangle, SingleTriangle) {
  EdgeListGraph g;
  g.n = 3;
  g.edges = {{0, 1, Weight(1)}, {1, 2, Weight(2)}, {2, 0, Weight(3)}};
  auto t = min_triangle_dense(g);
  ASSERT_TRUE(t);
  EXPECT_EQ(t->weight, Weight(6));
  EXPECT_EQ(min_triangle_sparse(g)->weight, Weight(6));
}

TEST(Triangle, TriangleFreeAndStar) {
  EdgeListGraph path;
  path.n = 4;
  path.edges = {{0, 1, Weight(1)}, {1, 2, Weight(1)}, {2, 3, Weight(1)}, {3, 0, Weight(1)}};
  EXPECT_FALSE(min_triangle_dense(path));
  EXPECT_FALSE(min_triangle_sparse(path, 1));
  EdgeListGraph star;
  star.n = 10;
  for (std::size_t v = 1; v < 10; ++v) star.edges.push_back({0, v, Weight(v)});
  EXPECT_FALSE(min_triangle_sparse(star));
  EXPECT_FALSE(min_triangle_brute(star));
}

TEST(Triangle, DirectedCyclesOnly) {
  EdgeListGraph g;
  g.n = 3;
  g.directed = true;
  g.edges = {{0, 1, Weight(1)}, {1, 2, Weight(1)}, {0, 2, Weight(1)}};
  EXPECT_FALSE(min_triangle_dense(g));
  g.edges.push_back({2, 0, Weight(4)});
  EXPECT_EQ(min_triangle_dense(g)->weight, Weight(6));
  EXPECT_EQ(min_triangle_sparse(g, 1)->weight, Weight(6));
}

TEST(Triangle, HighDegreeCaseFindsHiddenTriangle) {
  // Nodes 0, 1, 2 form the cheap triangle and each has many leaf neighbours.
  EdgeListGraph g;
  g.n = 3 + 3 * 8;
  g.edges = {{0, 1, Weight(1)}, {1, 2, Weight(1)}, {2, 0, Weight(1)}};
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t l = 0; l < 8; ++l) g.edges.push_back({c, 3 + c * 8 + l, Weight(50)});
  // Add an expensive triangle through low-degree leaves.
  g.edges.push_back({3, 4, Weight(50)});
  auto brute = min_triangle_brute(g);
  ASSERT_TRUE(brute);
  EXPECT_EQ(brute->weight, Weight(3));
  auto sparse = min_triangle_sparse(g, 3);
  ASSERT_TRUE(sparse);
  EXPECT_EQ(sparse->weight, Weight(3));
  EXPECT_EQ((std::array<std::size_t, 3>{sparse->u, sparse->v, sparse->w}), (std::array<std::size_t, 3>{0, 1, 2}));
}

TEST(Triangle, RandomGraphsAgreeWithBruteForceForAllThresholds) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    bool directed = trial % 2;
    std::size_t n = 5 + rng() % 28, m = rng() % (3 * n + 1);
    auto g = random_graph(n, m, directed, 30, rng);
    auto brute = min_triangle_brute(g);
    auto dense = min_triangle_dense(g);
    ASSERT_EQ(brute.has_value(), dense.has_value());
    std::size_t root = std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(m)));
    for (std::size_t delta : {std::size_t{1}, root, std::max<std::size_t>(m, 1)}) {
      auto sparse = min_triangle_sparse(g, delta, naive_strategy(), 1 + trial % 3);
      ASSERT_EQ(brute.has_value(), sparse.has_value()) << "delta=" << delta;
      if (brute) {
        EXPECT_EQ(sparse->weight, brute->weight);
      }
    }
    if (brute) {
      EXPECT_EQ(dense->weight, brute->weight);
    }
  }
}

TEST(Convolution, UnitImpulseAndZeros) {
  std::vector<Weight> impulse(5, Weight::infinity());
  impulse[0] = Weight(0);
  std::vector<Weight> y{Weight(4), Weight(1), Weight::infinity(), Weight(7), Weight(2)};
  auto r = minplus_convolution(impulse, y, ConvolutionMode::blocked);
  ASSERT_EQ(r.size(), 9u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(r[i], y[i]);
  for (std::size_t i = 5; i < 9; ++i) EXPECT_TRUE(r[i].is_inf());
  std::vector<Weight> zeros(6, Weight(0));
  for (auto w : minplus_convolution(zeros, zeros, ConvolutionMode::blocked)) EXPECT_EQ(w, Weight(0));
  EXPECT_THROW(minplus_convolution(zeros, y), std::invalid_argument);
  EXPECT_TRUE(minplus_convolution({}, {}).empty());
}

TEST(Convolution, BlockedMatchesNaive) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 1 + rng() % 64;
    std::vector<Weight> x(n), y(n);
    for (auto& v : x) v = rng() % 9 == 0 ? Weight::infinity() : Weight(rng() % 100);
    for (auto& v : y) v = rng() % 9 == 0 ? Weight::infinity() : Weight(rng() % 100);
    auto naive = minplus_convolution(x, y, ConvolutionMode::naive);
    ASSERT_EQ(minplus_convolution(x, y, ConvolutionMode::blocked), naive);
    EXPECT_EQ(minplus_convolution(y, x, ConvolutionMode::naive), naive);
  }
}

TEST(Convolution, Associative) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 1 + rng() % 10;
    std::vector<Weight> x(n), y(n), z(n);
    for (auto* v : {&x, &y, &z})
      for (auto& e : *v) e = Weight(rng() % 50);
    // Pad to equal lengths so both bracketings are defined.
    auto pad = [](std::vector<Weight> v, std::size_t len) {
      v.resize(len, Weight::infinity());
      return v;
    };
    auto xy = minplus_convolution(x, y);
    auto left = minplus_convolution(xy, pad(z, xy.size()));
    auto yz = minplus_convolution(y, z);
    auto right = minplus_convolution(pad(x, yz.size()), yz);
    left.resize(3 * n - 2);
    right.resize(3 * n - 2);
    EXPECT_EQ(left, right);
  }
}
