#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bulkcc/common.hpp"

namespace bulkcc {

/// Connected components as a flat vertex list cut by offsets: component i is
/// vertices[offsets[i] .. offsets[i+1]).
struct component_partition {
  std::vector<vertex> vertices;
  std::vector<std::size_t> offsets{0};

  std::size_t size() const { return offsets.size() - 1; }
  bool empty() const { return size() == 0; }
  std::span<const vertex> operator[](std::size_t i) const {
    return std::span<const vertex>(vertices).subspan(offsets[i], offsets[i + 1] - offsets[i]);
  }
};

struct cc_options {
  std::uint64_t seed = 0x5eed5eed5eed5eedULL;
  /// Upper bound on endpoint ids (0 = unknown); only sizes scratch space.
  std::size_t id_bound = 0;
};

struct cc_stats {
  std::size_t vertices = 0;  ///< distinct endpoints
  std::size_t rounds = 0;    ///< hook/contract rounds
};

/// Exact connected components of the multigraph spanned by `edges`, over the
/// set of endpoints that occur in it. Self-loops are a contract violation
/// (audited when debug checks are on). Endpoint ids may be sparse; scratch
/// space is O(|edges|).
///
/// Components are ordered by internal label and vertices within a component by
/// dense rank; both orders are a deterministic function of (edges, seed).
component_partition connected_components(std::span<const edge> edges, const cc_options& opts = {},
                                         cc_stats* stats = nullptr);

}  // namespace bulkcc
