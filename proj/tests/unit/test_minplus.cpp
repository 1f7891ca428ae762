#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "tropical/apsp.hpp"
#include "tropical/matrix_io.hpp"
#include "tropical/minplus.hpp"

using namespace tropical;

TEST(Weight, InfinityAbsorbsAndOrdersLast) {
  Weight inf = Weight::infinity();
  EXPECT_TRUE((inf + Weight(5)).is_inf());
  EXPECT_TRUE((Weight(3) + inf).is_inf());
  EXPECT_LT(Weight(kOverflowLimit), inf);
  EXPECT_EQ(Weight(2) + Weight(3), Weight(5));
}

TEST(Weight, OverflowIsReported) {
  EXPECT_THROW(Weight(kOverflowLimit + 1), OverflowError);
  Weight big(kOverflowLimit / 2 + 1);
  EXPECT_THROW(big + big, OverflowError);
}

TEST(MatrixIo, RoundTrip) {
  std::mt19937_64 rng(3);
  WeightMatrix m = oracle::random_matrix(3, 5, 100, 0.3, rng);
  std::stringstream ss;
  write_matrix(ss, m);
  EXPECT_EQ(read_matrix(ss), m);

  std::vector<Weight> v{Weight(0), Weight::infinity(), Weight(7)};
  std::stringstream vs;
  write_vector(vs, v);
  EXPECT_EQ(vs.str(), "3\n0 INF 7\n");
  EXPECT_EQ(read_vector(vs), v);
}

TEST(MatrixIo, RejectsBadTokens) {
  EXPECT_THROW(parse_weight("-1"), ParseError);
  EXPECT_THROW(parse_weight("12x"), ParseError);
  EXPECT_THROW(parse_weight("1152921504606846977"), ParseError);  // 2^60 + 1
  EXPECT_EQ(parse_weight("1152921504606846976").value(), kMaxInputWeight);
  std::stringstream truncated("2 2\n1 2 3\n");
  EXPECT_THROW(read_matrix(truncated), ParseError);
}

TEST(NaiveProduct, SmallExample) {
  WeightMatrix a(2, 2), b(2, 2);
  a(0, 0) = Weight(1), a(0, 1) = Weight(4), a(1, 0) = Weight(2);
  b(0, 0) = Weight(3), b(1, 0) = Weight(0), b(1, 1) = Weight(1);
  auto r = minplus_product_naive(a, b);
  EXPECT_EQ(r.values(0, 0), Weight(4));
  EXPECT_EQ(r.values(0, 1), Weight(5));
  EXPECT_EQ(r.values(1, 0), Weight(5));
  EXPECT_TRUE(r.values(1, 1).is_inf());
  EXPECT_EQ(r.witness(0, 0), 0u);  // 1+3 = 4+0 tie goes to the smaller k
  EXPECT_EQ(r.witness(0, 1), 1u);
  EXPECT_FALSE(r.witness.get(1, 1));
}

TEST(NaiveProduct, MatchesOracleAndWitnessesAreMinimal) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + rng() % 12, d = 1 + rng() % 9, m = 1 + rng() % 12;
    auto a = oracle::random_matrix(n, d, 20, 0.2, rng);
    auto b = oracle::random_matrix(d, m, 20, 0.2, rng);
    auto r = minplus_product_naive(a, b, 1 + trial % 3);
    ASSERT_EQ(r.values, oracle::minplus(a, b));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        auto k = r.witness.get(i, j);
        if (r.values(i, j).is_inf()) {
          EXPECT_FALSE(k);
          continue;
        }
        ASSERT_TRUE(k);
        EXPECT_EQ(a(i, *k) + b(*k, j), r.values(i, j));
        for (std::size_t kk = 0; kk < *k; ++kk) EXPECT_GT(a(i, kk) + b(kk, j), r.values(i, j));
      }
  }
}

TEST(NaiveProduct, IdentityIsNeutral) {
  std::mt19937_64 rng(5);
  auto a = oracle::random_matrix(6, 6, 50, 0.2, rng);
  EXPECT_EQ(minplus_product_naive(a, WeightMatrix::identity(6)).values, a);
  EXPECT_EQ(minplus_product_naive(WeightMatrix::identity(6), a).values, a);
}

TEST(NaiveProduct, ShapeMismatchThrows) {
  EXPECT_THROW(minplus_product_naive(WeightMatrix(2, 3), WeightMatrix(2, 3)), std::invalid_argument);
}

TEST(Apsp, AlgorithmsAgreeWithBellmanFord) {
  std::mt19937_64 rng(21);
  for (std::size_t n : {1u, 2u, 5u, 8u, 17u, 32u}) {
    for (int trial = 0; trial < 5; ++trial) {
      auto w = oracle::random_graph(n, 100, 0.3, rng);
      auto bf = oracle::bellman_ford(w);
      auto fw = floyd_warshall(w);
      auto sq = apsp_by_squaring(w, naive_strategy());
      ASSERT_EQ(fw.distances, bf);
      ASSERT_EQ(sq.distances, bf);
      for (const auto* r : {&fw, &sq})
        for (std::size_t s = 0; s < n; ++s)
          for (std::size_t t = 0; t < n; ++t) {
            auto path = reconstruct_path(r->successors, s, t);
            ASSERT_EQ(path.empty(), bf(s, t).is_inf());
            Weight total(0);
            for (std::size_t i = 0; i + 1 < path.size(); ++i) total += w(path[i], path[i + 1]);
            if (!path.empty()) {
              ASSERT_EQ(total, bf(s, t));
            }
          }
    }
  }
}

TEST(Apsp, PathsRealiseDistances) {
  std::mt19937_64 rng(8);
  auto w = oracle::random_graph(24, 10, 0.2, rng);
  auto r = apsp_by_squaring(w, naive_strategy());
  for (std::size_t s = 0; s < 24; ++s)
    for (std::size_t t = 0; t < 24; ++t) {
      auto path = reconstruct_path(r.successors, s, t);
      if (r.distances(s, t).is_inf()) {
        EXPECT_TRUE(path.empty());
        continue;
      }
      ASSERT_FALSE(path.empty());
      EXPECT_EQ(path.front(), s);
      EXPECT_EQ(path.back(), t);
      Weight total(0);
      for (std::size_t i = 0; i + 1 < path.size(); ++i) total += w(path[i], path[i + 1]);
      EXPECT_EQ(total, r.distances(s, t));
    }
}

TEST(Apsp, ZeroWeightCyclesTerminate) {
  WeightMatrix w(3, 3);
  for (std::size_t i = 0; i < 3; ++i) w(i, i) = Weight(0);
  w(0, 1) = Weight(0), w(1, 0) = Weight(0), w(1, 2) = Weight(4);
  auto r = floyd_warshall(w);
  EXPECT_EQ(r.distances(0, 2), Weight(4));
  EXPECT_EQ(reconstruct_path(r.successors, 0, 2), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Apsp, SingleNode) {
  WeightMatrix w(1, 1, Weight(0));
  EXPECT_EQ(floyd_warshall(w).distances, w);
  EXPECT_EQ(apsp_by_squaring(w, naive_strategy()).distances, w);
}

TEST(Apsp, RejectsMalformedInput) {
  EXPECT_THROW(floyd_warshall(WeightMatrix(2, 3)), std::invalid_argument);
  WeightMatrix bad(2, 2);
  EXPECT_THROW(floyd_warshall(bad), std::invalid_argument);
}
