#include "bulkcc/bulk.hpp"

#include <algorithm>
#include <atomic>

#include "bulkcc/bulk_find.hpp"
#include "bulkcc/components.hpp"
#include "bulkcc/parallel.hpp"
#include "bulkcc/parprim.hpp"

namespace bulkcc {

namespace {

constexpr std::size_t join_parallel_cutoff = 512;

void check_edges(std::span<const edge> edges, std::size_t n, const char* where) {
  std::atomic<bool> bad{false};
  par::parallel_for(0, edges.size(), [&](std::size_t i) {
    if (edges[i].u >= n || edges[i].v >= n) bad.store(true, std::memory_order_relaxed);
  });
  if (bad.load()) fail_contract(std::string(where) + ": vertex id out of range");
}

// Roots of every endpoint, as (root(u), root(v)) per edge.
std::vector<edge> endpoint_roots(union_find_forest& forest, std::span<const edge> edges,
                                 find_strategy strategy) {
  std::vector<edge> out(edges.size());
  if (strategy == find_strategy::bulk_find) {
    std::vector<vertex> ends(2 * edges.size());
    par::parallel_for(0, edges.size(), [&](std::size_t i) {
      ends[2 * i] = edges[i].u;
      ends[2 * i + 1] = edges[i].v;
    });
    auto res = bulk_find(forest, ends);
    par::parallel_for(0, edges.size(), [&](std::size_t i) {
      out[i] = {res.roots[2 * i], res.roots[2 * i + 1]};
    });
  } else if (forest.mode() == find_mode::pragmatic) {
    par::parallel_for(0, edges.size(), [&](std::size_t i) {
      out[i] = {forest.find_compress_unchecked(edges[i].u), forest.find_compress_unchecked(edges[i].v)};
    });
  } else {
    par::parallel_for(0, edges.size(), [&](std::size_t i) {
      out[i] = {forest.find_root_unchecked(edges[i].u), forest.find_root_unchecked(edges[i].v)};
    });
  }
  return out;
}

struct join_result {
  vertex root;
  std::size_t unions;
  std::size_t depth;
};

join_result join_rec(union_find_forest& forest, std::span<const vertex> roots) {
  if (roots.size() == 1) return {roots[0], 0, 0};
  const std::size_t half = roots.size() / 2;
  join_result left{}, right{};
  par::par_do([&] { left = join_rec(forest, roots.first(half)); },
              [&] { right = join_rec(forest, roots.subspan(half)); },
              roots.size() >= join_parallel_cutoff);
  const vertex root = forest.union_roots(left.root, right.root);
  return {root, left.unions + right.unions + 1, std::max(left.depth, right.depth) + 1};
}

vertex join_traced_rec(union_find_forest& forest, std::span<const vertex> roots, join_trace& trace,
                       std::size_t& level) {
  if (roots.size() == 1) {
    level = 0;
    return roots[0];
  }
  const std::size_t half = roots.size() / 2;
  std::size_t left_level = 0, right_level = 0;
  const vertex u = join_traced_rec(forest, roots.first(half), trace, left_level);
  const vertex v = join_traced_rec(forest, roots.subspan(half), trace, right_level);
  level = std::max(left_level, right_level) + 1;
  if (trace.rounds.size() < level) trace.rounds.resize(level);
  trace.rounds[level - 1].push_back({u, v});
  return forest.union_roots(u, v);
}

void check_join_input(const union_find_forest& forest, std::span<const vertex> roots) {
  if (roots.empty()) fail_contract("parallel_join: empty root sequence");
  for (vertex r : roots) check_vertex(r, forest.num_vertices(), "parallel_join");
  if (!debug_checks()) return;
  for (vertex r : roots) {
    if (!forest.is_root(r)) fail_contract("parallel_join: argument is not a root");
  }
  std::vector<vertex> sorted(roots.begin(), roots.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    fail_contract("parallel_join: duplicate root");
  }
}

}  // namespace

std::vector<std::uint8_t> bulk_query(union_find_forest& forest, std::span<const edge> queries,
                                     find_strategy strategy) {
  check_edges(queries, forest.num_vertices(), "bulk_query");
  auto roots = endpoint_roots(forest, queries, strategy);
  std::vector<std::uint8_t> answers(queries.size());
  par::parallel_for(0, queries.size(), [&](std::size_t i) { answers[i] = roots[i].u == roots[i].v; });
  return answers;
}

relabeled_edges relabel(union_find_forest& forest, std::span<const edge> batch,
                        find_strategy strategy) {
  check_edges(batch, forest.num_vertices(), "relabel");
  relabeled_edges r;
  r.renamed = endpoint_roots(forest, batch, strategy);
  r.crossing = parprim::filter<edge>(r.renamed, [](const edge& e) { return e.u != e.v; });
  return r;
}

update_stats bulk_update(union_find_forest& forest, std::span<const edge> batch,
                         find_strategy strategy, std::uint64_t seed) {
  update_stats stats;
  stats.edges = batch.size();
  const relabeled_edges rel = relabel(forest, batch, strategy);
  stats.crossing_edges = rel.crossing.size();
  if (rel.crossing.empty()) return stats;

  cc_stats cs;
  const component_partition comps =
      connected_components(rel.crossing, {seed, forest.num_vertices()}, &cs);
  stats.cc_rounds = cs.rounds;
  stats.components_joined = comps.size();

  if (debug_checks()) {
    // Components must touch disjoint root sets for the joins to run in parallel.
    if (parprim::remove_dup<vertex>(comps.vertices).size() != comps.vertices.size()) {
      fail_contract("bulk_update: components share a root");
    }
  }
  par::parallel_for(0, comps.size(), [&](std::size_t c) { parallel_join(forest, comps[c]); }, 1);
  stats.unions = comps.vertices.size() - comps.size();
  return stats;
}

vertex parallel_join(union_find_forest& forest, std::span<const vertex> roots, join_stats* stats) {
  check_join_input(forest, roots);
  const join_result r = join_rec(forest, roots);
  if (stats) *stats = {r.unions, r.depth};
  return r.root;
}

vertex parallel_join_traced(union_find_forest& forest, std::span<const vertex> roots,
                            join_trace& trace) {
  check_join_input(forest, roots);
  trace.rounds.clear();
  std::size_t level = 0;
  return join_traced_rec(forest, roots, trace, level);
}

}  // namespace bulkcc
