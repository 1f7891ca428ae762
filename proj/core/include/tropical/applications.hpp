#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tropical/matrix.hpp"
#include "tropical/minplus.hpp"

namespace tropical::apps {

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  Weight w;
};

struct EdgeListGraph {
  std::size_t n = 0;
  bool directed = false;
  std::vector<Edge> edges;

  // Throws std::invalid_argument on out-of-range endpoints, self-loops or infinite weights.
  void validate() const;
  // Minimum weight per ordered pair; undirected edges fill both directions.
  WeightMatrix adjacency() const;
};

// "n m directed" header (directed is 0 or 1), then m lines "u v w" with 0-based nodes.
EdgeListGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const EdgeListGraph& g);

struct MetricVerdict {
  bool metric = true;
  std::string property;                        // diagonal, positivity, symmetry or triangle
  std::optional<std::array<std::size_t, 3>> witness;  // (i, k, j) with D[i][j] > D[i][k] + D[k][j]
  std::optional<std::array<std::size_t, 2>> cell;     // offending cell for the other properties
};

// Infinite off-diagonal distances are allowed. Throws std::invalid_argument if not square.
MetricVerdict is_metric(const WeightMatrix& d, const ProductStrategy& product = naive_strategy());

// For directed graphs the triangle is the cycle u -> v -> w -> u.
struct Triangle {
  std::size_t u = 0, v = 0, w = 0;
  Weight weight;
};

std::optional<Triangle> min_triangle_dense(const EdgeListGraph& g,
                                           const ProductStrategy& product = naive_strategy());
// delta = 0 selects ceil(sqrt(m)).
std::optional<Triangle> min_triangle_sparse(const EdgeListGraph& g, std::size_t delta = 0,
                                            const ProductStrategy& product = naive_strategy(),
                                            unsigned threads = 1);
std::optional<Triangle> min_triangle_brute(const EdgeListGraph& g);

enum class ConvolutionMode { naive, blocked };

// Linear convolution: out[i] = min over k + j = i of x[k] + y[j], length 2n - 1.
// Throws std::invalid_argument on a length mismatch.
std::vector<Weight> minplus_convolution(const std::vector<Weight>& x, const std::vector<Weight>& y,
                                        ConvolutionMode mode = ConvolutionMode::naive,
                                        const ProductStrategy& product = naive_strategy());

}  // namespace tropical::apps
