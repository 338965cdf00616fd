#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bulkcc/common.hpp"
#include "bulkcc/union_find.hpp"

namespace bulkcc {

/// How the bulk operations resolve roots.
enum class find_strategy {
  independent,  ///< one find per endpoint, in parallel, using the forest's find_mode
  bulk_find,    ///< all endpoints through one coordinated bulk_find call
};

/// A' (edges renamed to their current roots) and A'' (A' without self-loops).
struct relabeled_edges {
  std::vector<edge> renamed;
  std::vector<edge> crossing;
};

struct update_stats {
  std::size_t edges = 0;              ///< |A|
  std::size_t crossing_edges = 0;     ///< |A''|
  std::size_t components_joined = 0;  ///< components of A''
  std::size_t unions = 0;
  std::size_t cc_rounds = 0;
};

struct join_stats {
  std::size_t unions = 0;
  std::size_t depth = 0;  ///< recursion levels that performed a union
};

/// Per-level union calls of a sequentially replayed join: rounds[0] holds the
/// unions issued by the lowest recursion level. Arguments are recorded in
/// call order (first argument wins ties).
struct join_trace {
  std::vector<std::vector<edge>> rounds;
};

/// Answers[i] = 1 iff queries[i].u and queries[i].v are connected.
std::vector<std::uint8_t> bulk_query(union_find_forest& forest, std::span<const edge> queries,
                                     find_strategy strategy = find_strategy::independent);

relabeled_edges relabel(union_find_forest& forest, std::span<const edge> batch,
                        find_strategy strategy = find_strategy::independent);

/// Inserts a minibatch: relabel to roots, drop self-loops, connected
/// components of the remainder, then one parallel_join per component.
update_stats bulk_update(union_find_forest& forest, std::span<const edge> batch,
                         find_strategy strategy = find_strategy::independent,
                         std::uint64_t seed = 0x5eed5eed5eed5eedULL);

/// Links distinct roots of pairwise distinct trees by halving recursion;
/// performs exactly |roots| - 1 unions and returns the final root.
vertex parallel_join(union_find_forest& forest, std::span<const vertex> roots,
                     join_stats* stats = nullptr);

/// Sequential replay of parallel_join that records the union schedule.
vertex parallel_join_traced(union_find_forest& forest, std::span<const vertex> roots,
                            join_trace& trace);

}  // namespace bulkcc
