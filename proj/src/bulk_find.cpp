#include "bulkcc/bulk_find.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "bulkcc/parallel.hpp"
#include "bulkcc/parprim.hpp"

namespace bulkcc {

namespace {

template <class T>
std::vector<T> concat(const std::vector<std::vector<T>>& parts) {
  std::vector<std::size_t> sizes(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) sizes[i] = parts[i].size();
  auto scan = parprim::prefix_sum<std::size_t>(sizes);
  std::vector<T> out(scan.total);
  par::parallel_for(0, parts.size(), [&](std::size_t p) {
    std::copy(parts[p].begin(), parts[p].end(), out.begin() + static_cast<std::ptrdiff_t>(scan.sums[p]));
  }, 1);
  return out;
}

}  // namespace

std::vector<trail_record> traversal_log::concatenated() const { return concat(levels); }

std::size_t traversal_log::size() const {
  std::size_t s = 0;
  for (const auto& r : levels) s += r.size();
  return s;
}

std::vector<vertex> mk_frontier(std::span<const trail_record> records,
                                std::span<const std::uint8_t> visited) {
  auto req = parprim::pack_index(
      records.size(), [&](std::size_t i) { return !visited[records[i].from]; },
      [&](std::size_t i) { return records[i].from; });
  return parprim::remove_dup<vertex>(req);
}

// ---------------------------------------------------------------------------

response_distributor::response_distributor(std::span<const trail_record> records,
                                           std::uint64_t seed) {
  const std::size_t lambda = records.size();
  mul_ = parprim::mix64(seed) | 1;
  add_ = parprim::mix64(seed ^ 0xd1b54a32d192ed03ULL);
  const std::size_t rho = 3 * lambda;
  offsets_.assign(rho + 1, 0);
  if (lambda == 0) return;

  std::vector<std::pair<std::size_t, trail_record>> keyed(lambda);
  par::parallel_for(0, lambda, [&](std::size_t i) { keyed[i] = {bucket_of(records[i].from), records[i]}; });
  auto sorted = parprim::int_sort<trail_record>(keyed, rho);

  pairs_.resize(lambda);
  par::parallel_for(0, lambda, [&](std::size_t i) { pairs_[i] = sorted[i].second; });
  // offsets_[b] = first position whose bucket is >= b.
  par::parallel_for(0, lambda, [&](std::size_t i) {
    const std::size_t b = sorted[i].first;
    const std::size_t prev = i == 0 ? 0 : sorted[i - 1].first + 1;
    for (std::size_t x = prev; x <= b; ++x) offsets_[x] = i;
  });
  for (std::size_t x = sorted.back().first + 1; x <= rho; ++x) offsets_[x] = lambda;
}

std::size_t response_distributor::bucket_of(vertex f) const {
  const std::uint64_t rho = offsets_.size() - 1;
  const std::uint64_t h = (mul_ * static_cast<std::uint64_t>(f) + add_) >> 32;
  return static_cast<std::size_t>((h * rho) >> 32);
}

std::vector<vertex> response_distributor::all_from(vertex f) const {
  std::vector<vertex> out;
  for_each_from(f, [&](vertex to) { out.push_back(to); });
  return out;
}

std::size_t response_distributor::total_scan_work() const {
  std::vector<vertex> froms(pairs_.size());
  par::parallel_for(0, pairs_.size(), [&](std::size_t i) { froms[i] = pairs_[i].from; });
  auto keys = parprim::remove_dup<vertex>(froms);
  std::size_t work = 0;
  for (vertex f : keys) {
    const std::size_t b = bucket_of(f);
    work += offsets_[b + 1] - offsets_[b];
  }
  return work;
}

// ---------------------------------------------------------------------------

std::size_t distribute_responses(union_find_forest& forest, const response_distributor& rd,
                                 std::span<const vertex> roots, std::size_t* scan_work) {
  const vertex nil = static_cast<vertex>(forest.num_vertices());
  std::vector<edge> wave(roots.size());  // (node, root)
  par::parallel_for(0, roots.size(), [&](std::size_t i) { wave[i] = {roots[i], roots[i]}; });

  std::size_t rounds = 0;
  std::size_t work = 0;
  std::size_t written = 0;
  std::vector<vertex> all_written;
  while (!wave.empty()) {
    ++rounds;
    written += wave.size();
    if (debug_checks()) {
      for (const edge& w : wave) all_written.push_back(w.u);
    }
    std::vector<std::size_t> counts(wave.size());
    std::vector<std::size_t> scanned(wave.size());
    par::parallel_for(0, wave.size(), [&](std::size_t i) {
      forest.compress_to(wave[i].u, wave[i].v);
      std::size_t c = 0;
      scanned[i] = rd.for_each_from(wave[i].u, [&](vertex to) { c += to != nil; });
      counts[i] = c;
    });
    work += std::accumulate(scanned.begin(), scanned.end(), std::size_t{0});
    auto scan = parprim::prefix_sum<std::size_t>(counts);
    std::vector<edge> next(scan.total);
    par::parallel_for(0, wave.size(), [&](std::size_t i) {
      std::size_t pos = scan.sums[i];
      rd.for_each_from(wave[i].u, [&](vertex to) {
        if (to != nil) next[pos++] = {to, wave[i].v};
      });
    });
    wave = std::move(next);
  }
  if (debug_checks() && parprim::remove_dup<vertex>(all_written).size() != written) {
    fail_contract("distribute_responses: a node was reached by two flows");
  }
  if (scan_work) *scan_work = work;
  return rounds;
}

bulk_find_result bulk_find(union_find_forest& forest, std::span<const vertex> queries,
                           const bulk_find_options& opts) {
  const std::size_t n = forest.num_vertices();
  const vertex nil = static_cast<vertex>(n);
  std::atomic<bool> bad{false};
  par::parallel_for(0, queries.size(), [&](std::size_t i) {
    if (queries[i] >= n) bad.store(true, std::memory_order_relaxed);
  });
  if (bad.load()) fail_contract("bulk_find: query vertex out of range");

  bulk_find_result result;
  result.roots.resize(queries.size());
  if (queries.empty()) return result;

  const std::span<std::uint8_t> visited = forest.scratch_flags();
  const std::span<const vertex> parent = forest.parents();

  // Phase I.
  std::vector<trail_record> level(queries.size());
  par::parallel_for(0, queries.size(), [&](std::size_t k) { level[k] = {queries[k], nil}; });
  std::vector<vertex> frontier = mk_frontier(level, visited);
  std::vector<std::vector<trail_record>> levels;
  std::vector<std::vector<vertex>> frontiers;
  std::vector<std::vector<vertex>> root_parts;
  while (!level.empty()) {
    ++result.phase1_rounds;
    par::parallel_for(0, frontier.size(), [&](std::size_t j) { visited[frontier[j]] = 1; });
    auto next = parprim::pack_index(
        frontier.size(), [&](std::size_t j) { return parent[frontier[j]] != frontier[j]; },
        [&](std::size_t j) { return trail_record{parent[frontier[j]], frontier[j]}; });
    root_parts.push_back(parprim::pack_index(
        frontier.size(), [&](std::size_t j) { return parent[frontier[j]] == frontier[j]; },
        [&](std::size_t j) { return frontier[j]; }));
    auto next_frontier = mk_frontier(next, visited);
    levels.push_back(std::move(level));
    frontiers.push_back(std::move(frontier));
    level = std::move(next);
    frontier = std::move(next_frontier);
  }
  const std::vector<vertex> roots = concat(root_parts);
  const std::vector<trail_record> trail = concat(levels);
  result.trail_size = trail.size();

  // Phase II.
  const response_distributor rd(trail, opts.seed);
  result.phase2_rounds = distribute_responses(forest, rd, roots, &result.scan_work);

  par::parallel_for(0, queries.size(), [&](std::size_t i) { result.roots[i] = parent[queries[i]]; });

  // `from` of a record is a root iff it was a root before the call.
  result.root_records = parprim::pack_index(
      trail.size(), [&](std::size_t i) { return forest.is_root(trail[i].from); },
      [](std::size_t i) { return i; }).size();

  for (const auto& f : frontiers) {
    par::parallel_for(0, f.size(), [&](std::size_t j) { visited[f[j]] = 0; });
  }
  if (opts.keep_log) {
    result.log.levels = std::move(levels);
    result.log.frontiers = std::move(frontiers);
    result.log.roots = roots;
  }
  return result;
}

}  // namespace bulkcc
