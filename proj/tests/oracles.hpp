#pragma once
// Test-only reference implementations. Deliberately naive.

#include <algorithm>
#include <cstddef>
#include <map>
#include <queue>
#include <set>
#include <span>
#include <vector>

#include "bulkcc/common.hpp"

namespace oracle {

using bulkcc::edge;
using bulkcc::vertex;

// Component id per vertex of [0, n) by BFS over an adjacency list.
inline std::vector<std::size_t> bfs_labels(std::size_t n, std::span<const edge> edges) {
  std::vector<std::vector<vertex>> adj(n);
  for (const edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  const std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(n, unset);
  std::size_t next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] != unset) continue;
    std::queue<vertex> q;
    q.push(static_cast<vertex>(s));
    label[s] = next;
    while (!q.empty()) {
      const vertex x = q.front();
      q.pop();
      for (vertex y : adj[x]) {
        if (label[y] == unset) {
          label[y] = next;
          q.push(y);
        }
      }
    }
    ++next;
  }
  return label;
}

inline std::size_t bfs_component_count(std::size_t n, std::span<const edge> edges) {
  const auto label = bfs_labels(n, edges);
  return label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
}

// Partition of the endpoints of a sparse edge list, as sorted vertex sets.
inline std::set<std::set<vertex>> sparse_partition(std::span<const edge> edges) {
  std::map<vertex, std::vector<vertex>> adj;
  for (const edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::set<vertex> seen;
  std::set<std::set<vertex>> out;
  for (const auto& [s, _] : adj) {
    if (seen.count(s)) continue;
    std::set<vertex> comp{s};
    std::vector<vertex> stack{s};
    seen.insert(s);
    while (!stack.empty()) {
      const vertex x = stack.back();
      stack.pop_back();
      for (vertex y : adj[x]) {
        if (seen.insert(y).second) {
          comp.insert(y);
          stack.push_back(y);
        }
      }
    }
    out.insert(comp);
  }
  return out;
}

// True iff two labelings of [0, n) induce the same partition.
template <class A, class B>
bool same_partition(std::size_t n, A&& a, B&& b) {
  std::map<std::size_t, std::size_t> fwd, back;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t x = a(v), y = b(v);
    auto [f, fnew] = fwd.emplace(x, y);
    auto [g, gnew] = back.emplace(y, x);
    if (f->second != y || g->second != x) return false;
  }
  return true;
}

inline std::size_t floor_log2(std::size_t x) {
  std::size_t r = 0;
  while (x > 1) {
    x >>= 1;
    ++r;
  }
  return r;
}

inline std::size_t ceil_log2(std::size_t x) {
  std::size_t r = 0;
  while ((std::size_t{1} << r) < x) ++r;
  return r;
}

}  // namespace oracle
