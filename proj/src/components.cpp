#include "bulkcc/components.hpp"

#include <algorithm>
#include <atomic>

#include "bulkcc/parallel.hpp"
#include "bulkcc/parprim.hpp"

namespace bulkcc {

namespace {

void fetch_min(std::atomic<vertex>& slot, vertex value) {
  vertex cur = slot.load(std::memory_order_relaxed);
  while (value < cur && !slot.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

// Pointer jumping until every label names a label that names itself.
void flatten(std::vector<std::atomic<vertex>>& label) {
  std::atomic<bool> changed{true};
  while (changed.load(std::memory_order_relaxed)) {
    changed.store(false, std::memory_order_relaxed);
    par::parallel_for(0, label.size(), [&](std::size_t i) {
      const vertex l = label[i].load(std::memory_order_relaxed);
      const vertex ll = label[l].load(std::memory_order_relaxed);
      if (ll != l) {
        label[i].store(ll, std::memory_order_relaxed);
        changed.store(true, std::memory_order_relaxed);
      }
    });
  }
}

}  // namespace

component_partition connected_components(std::span<const edge> edges, const cc_options& opts,
                                         cc_stats* stats) {
  component_partition out;
  if (stats) *stats = {};
  const std::size_t m = edges.size();
  if (m == 0) return out;

  if (debug_checks()) {
    std::atomic<bool> loop{false};
    par::parallel_for(0, m, [&](std::size_t i) {
      if (edges[i].u == edges[i].v) loop.store(true, std::memory_order_relaxed);
    });
    if (loop.load()) fail_contract("connected_components: self-loop in input");
  }

  // Densify endpoint ids: rank = position among occupied hash slots.
  std::size_t expected = 2 * m;
  if (opts.id_bound != 0) expected = std::min(expected, opts.id_bound);
  parprim::ordered_hash_set<vertex> table(expected, opts.seed);
  par::parallel_for(0, m, [&](std::size_t i) {
    table.insert(edges[i].u);
    table.insert(edges[i].v);
  });
  std::vector<vertex> occupied(table.capacity());
  par::parallel_for(0, occupied.size(), [&](std::size_t s) { occupied[s] = table.occupied(s); });
  auto scan = parprim::prefix_sum<vertex>(occupied);
  const std::size_t k = scan.total;
  const std::vector<vertex>& rank_of_slot = scan.sums;

  std::vector<vertex> id_of(k);
  par::parallel_for(0, occupied.size(), [&](std::size_t s) {
    if (occupied[s]) id_of[rank_of_slot[s]] = table.slot(s);
  });
  std::vector<edge> live(m);
  par::parallel_for(0, m, [&](std::size_t i) {
    live[i] = {rank_of_slot[*table.find(edges[i].u)], rank_of_slot[*table.find(edges[i].v)]};
  });
  std::vector<vertex>().swap(occupied);

  std::vector<std::atomic<vertex>> label(k);
  par::parallel_for(0, k, [&](std::size_t i) {
    label[i].store(static_cast<vertex>(i), std::memory_order_relaxed);
  });

  std::size_t rounds = 0;
  while (!live.empty()) {
    ++rounds;
    // Hook: the larger endpoint label adopts the smallest label offered to it.
    par::parallel_for(0, live.size(), [&](std::size_t i) {
      const auto [a, b] = live[i];
      fetch_min(label[std::max(a, b)], std::min(a, b));
    });
    flatten(label);
    // Contract: keep edges still crossing labels, renamed to their labels.
    auto lab = [&](vertex x) { return label[x].load(std::memory_order_relaxed); };
    live = parprim::pack_index(
        live.size(), [&](std::size_t i) { return lab(live[i].u) != lab(live[i].v); },
        [&](std::size_t i) { return edge{lab(live[i].u), lab(live[i].v)}; });
  }

  // Group dense vertices by final label.
  std::vector<std::pair<std::size_t, vertex>> keyed(k);
  par::parallel_for(0, k, [&](std::size_t i) {
    keyed[i] = {label[i].load(std::memory_order_relaxed), static_cast<vertex>(i)};
  });
  auto grouped = parprim::int_sort<vertex>(keyed, k);

  out.vertices.resize(k);
  par::parallel_for(0, k, [&](std::size_t i) { out.vertices[i] = id_of[grouped[i].second]; });
  auto starts = parprim::pack_index(
      k, [&](std::size_t i) { return i == 0 || grouped[i].first != grouped[i - 1].first; },
      [](std::size_t i) { return i; });
  out.offsets = std::move(starts);
  out.offsets.push_back(k);

  if (stats) {
    stats->vertices = k;
    stats->rounds = rounds;
  }
  return out;
}

}  // namespace bulkcc
