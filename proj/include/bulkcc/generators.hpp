#pragma once

// Seeded synthetic edge streams: 3-d mesh, k random neighbors per node,
// local (small-separator) graphs and R-MAT power-law graphs.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bulkcc/common.hpp"

namespace bulkcc::gen {

enum class family { grid3d, random_k, local, rmat };

std::string_view family_name(family f);

struct stream_spec {
  family kind = family::random_k;
  std::size_t n = 0;
  /// Edge count; 0 means the family's natural count (grid3d: full mesh,
  /// random_k: n*k, local: n*k). Required for rmat.
  std::size_t m = 0;
  std::size_t k = 5;        ///< neighbors per node (random_k) / average degree (local)
  std::size_t window = 64;  ///< local: maximum id distance of a neighbor
  double a = 0.57, b = 0.19, c = 0.19, d = 0.05;  ///< rmat quadrant probabilities
  std::uint64_t seed = 1;
  std::size_t batch_size = 100000;
  bool shuffle_within_batch = false;
};

/// Checks parameters and fills in derived values (rmat n rounded up to a
/// power of two, default m; random_k and local raise k to ceil(m / n) when m
/// asks for more than n*k edges). Throws std::invalid_argument.
stream_spec validate(stream_spec spec);

/// Parses "family:key=value,key=value" (keys: n m k deg window a b c d seed
/// batch shuffle). Throws std::invalid_argument.
stream_spec parse_spec(std::string_view text);

/// All m edges in generation order.
std::vector<edge> generate_edges(const stream_spec& spec);

/// The stream cut into ceil(m / batch_size) minibatches.
std::vector<std::vector<edge>> generate(const stream_spec& spec);

/// `count` uniformly random vertex pairs (query batches).
std::vector<edge> random_pairs(std::size_t n, std::size_t count, std::uint64_t seed);

}  // namespace bulkcc::gen
