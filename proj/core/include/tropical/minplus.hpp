#pragma once

#include <cstdint>
#include <functional>

#include "tropical/matrix.hpp"

namespace tropical {

// Smallest minimizing k wins ties. Throws std::invalid_argument on shape mismatch.
ProductResult minplus_product_naive(const WeightMatrix& a, const WeightMatrix& b,
                                    unsigned threads = 1);

// round identifies the call so randomized strategies can draw fresh bits per call.
using ProductStrategy =
    std::function<ProductResult(const WeightMatrix&, const WeightMatrix&, std::uint64_t round)>;

ProductStrategy naive_strategy(unsigned threads = 1);

}  // namespace tropical
