#include "bulkcc/union_find.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include <tbb/parallel_reduce.h>

#include "bulkcc/parallel.hpp"

namespace bulkcc {

union_find_forest::union_find_forest(std::size_t n, find_mode mode)
    : parent_(n), size_(n, 1), mode_(mode) {
  if (n > max_vertices) fail_contract("union_find_forest: too many vertices");
  par::parallel_for(0, n, [&](std::size_t v) { parent_[v] = static_cast<vertex>(v); });
}

union_find_forest union_find_forest::from_parents(std::vector<vertex> parents, find_mode mode) {
  const std::size_t n = parents.size();
  if (n > max_vertices) fail_contract("from_parents: too many vertices");
  for (std::size_t v = 0; v < n; ++v) check_vertex(parents[v], n, "from_parents");

  // 0 = unseen, 1 = on the current walk, 2 = reaches a root.
  std::vector<std::uint8_t> state(n, 0);
  std::vector<vertex> root_of(n);
  std::vector<vertex> walk;
  for (std::size_t s = 0; s < n; ++s) {
    vertex v = static_cast<vertex>(s);
    walk.clear();
    while (state[v] == 0) {
      state[v] = 1;
      walk.push_back(v);
      if (parents[v] == v) break;
      v = parents[v];
    }
    if (state[v] == 1 && parents[v] != v) fail_contract("from_parents: parent cycle");
    const vertex root = state[v] == 2 ? root_of[v] : v;
    for (vertex w : walk) {
      state[w] = 2;
      root_of[w] = root;
    }
  }

  union_find_forest f;
  f.parent_ = std::move(parents);
  f.size_.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v) ++f.size_[root_of[v]];
  for (std::size_t v = 0; v < n; ++v) {
    if (f.parent_[v] != v) f.size_[v] = 1;
  }
  f.mode_ = mode;
  return f;
}

vertex union_find_forest::union_roots(vertex u, vertex v) {
  const std::size_t n = parent_.size();
  check_vertex(u, n, "union_roots");
  check_vertex(v, n, "union_roots");
  if (debug_checks()) {
    if (u == v) fail_contract("union_roots: identical roots");
    if (!is_root(u) || !is_root(v)) fail_contract("union_roots: argument is not a root");
  }
  if (size_[u] < size_[v]) std::swap(u, v);
  store(v, u);
  size_[u] += size_[v];
  return u;
}

vertex union_find_forest::seq_union(vertex u, vertex v) {
  const vertex ru = find(u);
  const vertex rv = find(v);
  if (ru == rv) return ru;
  return union_roots(ru, rv);
}

std::size_t union_find_forest::count_components() const {
  const std::size_t n = parent_.size();
  return tbb::parallel_reduce(
      tbb::blocked_range<std::size_t>(0, n, par::grain_size()), std::size_t{0},
      [&](const tbb::blocked_range<std::size_t>& r, std::size_t acc) {
        for (std::size_t v = r.begin(); v != r.end(); ++v) acc += load(static_cast<vertex>(v)) == v;
        return acc;
      },
      std::plus<>());
}

std::size_t union_find_forest::depth(vertex v) const {
  check_vertex(v, parent_.size(), "depth");
  std::size_t d = 0;
  for (vertex p = load(v); p != v; p = load(v)) {
    v = p;
    ++d;
  }
  return d;
}

std::size_t union_find_forest::max_depth() const {
  const std::size_t n = parent_.size();
  return tbb::parallel_reduce(
      tbb::blocked_range<std::size_t>(0, n, par::grain_size()), std::size_t{0},
      [&](const tbb::blocked_range<std::size_t>& r, std::size_t acc) {
        for (std::size_t v = r.begin(); v != r.end(); ++v) {
          acc = std::max(acc, depth(static_cast<vertex>(v)));
        }
        return acc;
      },
      [](std::size_t a, std::size_t b) { return std::max(a, b); });
}

void union_find_forest::check_invariants() const {
  const std::size_t n = parent_.size();
  // from_parents rejects cycles and out-of-range entries.
  auto copy = from_parents(std::vector<vertex>(parent_.begin(), parent_.end()));
  for (std::size_t v = 0; v < n; ++v) {
    if (parent_[v] == v && size_[v] != copy.size_[v]) {
      fail_contract("check_invariants: root " + std::to_string(v) + " records size " +
                    std::to_string(size_[v]) + ", actual " + std::to_string(copy.size_[v]));
    }
  }
}

// ---------------------------------------------------------------------------

sequential_union_find::sequential_union_find(std::size_t n, bool compress)
    : parent_(n), size_(n, 1), compress_(compress) {
  std::iota(parent_.begin(), parent_.end(), vertex{0});
}

sequential_union_find::sequential_union_find(std::vector<vertex> parents, bool compress)
    : parent_(std::move(parents)), size_(parent_.size(), 0), compress_(compress) {
  const std::size_t n = parent_.size();
  for (vertex v = 0; v < n; ++v) {
    vertex r = v;
    for (std::size_t steps = 0; parent_[r] != r; ++steps) {
      check_vertex(parent_[r], n, "sequential_union_find");
      if (steps > n) fail_contract("sequential_union_find: parent cycle");
      r = parent_[r];
    }
    ++size_[r];
  }
}

vertex sequential_union_find::find(vertex u) { return find_counting(u).first; }

std::pair<vertex, std::size_t> sequential_union_find::find_counting(vertex u) {
  check_vertex(u, parent_.size(), "sequential_union_find::find");
  vertex root = u;
  std::size_t hops = 0;
  while (parent_[root] != root) {
    root = parent_[root];
    ++hops;
  }
  if (compress_) {
    while (parent_[u] != root) {
      const vertex next = parent_[u];
      parent_[u] = root;
      u = next;
    }
  }
  return {root, hops};
}

vertex sequential_union_find::unite(vertex u, vertex v) {
  vertex ru = find(u);
  vertex rv = find(v);
  if (ru == rv) return ru;
  if (size_[ru] < size_[rv]) std::swap(ru, rv);
  parent_[rv] = ru;
  size_[ru] += size_[rv];
  return ru;
}

std::size_t sequential_union_find::count_components() const {
  std::size_t c = 0;
  for (vertex v = 0; v < parent_.size(); ++v) c += parent_[v] == v;
  return c;
}

}  // namespace bulkcc
