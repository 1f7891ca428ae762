#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace tropical {

std::uint64_t splitmix64(std::uint64_t x);

// Hashes a tuple of counters into a seed; order sensitive, schedule independent.
std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts);

inline std::mt19937_64 make_stream(std::initializer_list<std::uint64_t> parts) {
  return std::mt19937_64(derive_seed(parts));
}

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t h = 0xcbf29ce484222325ULL);

}  // namespace tropical
