#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "tropical/matrix.hpp"
#include "tropical/minplus.hpp"

namespace tropical {

class SuccessorMatrix {
 public:
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  SuccessorMatrix() = default;
  explicit SuccessorMatrix(std::size_t n) : n_(n), next_(n * n, kNone) {}

  std::size_t size() const { return n_; }
  std::uint32_t& operator()(std::size_t s, std::size_t t) { return next_[s * n_ + t]; }
  std::uint32_t operator()(std::size_t s, std::size_t t) const { return next_[s * n_ + t]; }
  std::optional<std::size_t> next(std::size_t s, std::size_t t) const {
    auto v = next_[s * n_ + t];
    if (v == kNone) return std::nullopt;
    return v;
  }

  friend bool operator==(const SuccessorMatrix&, const SuccessorMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> next_;
};

struct ApspResult {
  WeightMatrix distances;
  SuccessorMatrix successors;
};

// Checks square shape and zero diagonal; throws std::invalid_argument otherwise.
void validate_graph_matrix(const WeightMatrix& w);

ApspResult floyd_warshall(const WeightMatrix& w);
ApspResult apsp_by_squaring(const WeightMatrix& w, const ProductStrategy& product);

// Empty when t is unreachable from s. Throws std::out_of_range on bad indices.
std::vector<std::size_t> reconstruct_path(const SuccessorMatrix& succ, std::size_t s,
                                          std::size_t t);

}  // namespace tropical
