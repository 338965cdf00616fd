#pragma once

#include <atomic>
#include <cstdint>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "bulkcc/common.hpp"

namespace bulkcc {

enum class find_mode {
  plain,      ///< read-only walk to the root
  pragmatic,  ///< walk to the root, then walk again pointing every node at it
};

/// Union-find forest over the dense vertex set [0, n) with union by size.
///
/// parent[v] == v marks a root. Only root entries of the size array are
/// meaningful. Equal-size unions keep the first argument as the root.
///
/// Concurrency: find_root() may run concurrently with anything but
/// union_roots(). Compressing finds may run concurrently with each other
/// (every compression write stores a current root of the written node, so
/// racing writes agree on the partition). union_roots() calls may run
/// concurrently only on disjoint root pairs.
class union_find_forest {
 public:
  union_find_forest() = default;
  explicit union_find_forest(std::size_t n, find_mode mode = find_mode::plain);

  /// Adopts an explicit parent array (tests, fixtures). Rejects out-of-range
  /// parents and cycles; recomputes root sizes.
  static union_find_forest from_parents(std::vector<vertex> parents,
                                        find_mode mode = find_mode::plain);

  std::size_t num_vertices() const { return parent_.size(); }
  find_mode mode() const { return mode_; }
  void set_mode(find_mode mode) { mode_ = mode; }

  /// Root of u, compressing the path when the forest is in pragmatic mode.
  vertex find(vertex u) {
    check_vertex(u, parent_.size(), "find");
    return mode_ == find_mode::pragmatic ? find_compress_unchecked(u) : find_root_unchecked(u);
  }

  /// Root of u without touching the structure.
  vertex find_root(vertex u) const {
    check_vertex(u, parent_.size(), "find_root");
    return find_root_unchecked(u);
  }

  /// Root of u with pragmatic compression, whatever the forest mode.
  vertex find_compress(vertex u) {
    check_vertex(u, parent_.size(), "find_compress");
    return find_compress_unchecked(u);
  }

  /// Links two distinct roots; the smaller tree goes under the larger one.
  /// Returns the surviving root.
  vertex union_roots(vertex u, vertex v);

  /// Sequential union of arbitrary vertices (baseline use only).
  vertex seq_union(vertex u, vertex v);

  /// Number of roots.
  std::size_t count_components() const;

  bool is_root(vertex v) const { return load(v) == v; }
  vertex parent(vertex v) const {
    check_vertex(v, parent_.size(), "parent");
    return load(v);
  }
  /// Tree size; meaningful for roots only.
  std::size_t tree_size(vertex root) const { return size_[root]; }

  /// Points v directly at `root`, which must be the current root of v's tree.
  /// Safe to call concurrently for distinct v (Bulk-Find Phase II).
  void compress_to(vertex v, vertex root) { store(v, root); }

  std::span<const vertex> parents() const { return parent_; }

  /// Number of parent hops from v to its root.
  std::size_t depth(vertex v) const;
  std::size_t max_depth() const;

  /// Per-vertex scratch flags owned by the forest for bulk operations
  /// (visited marks). Allocated on first use; callers leave them all zero.
  std::span<std::uint8_t> scratch_flags() {
    if (scratch_.size() != parent_.size()) scratch_.assign(parent_.size(), 0);
    return scratch_;
  }

  /// Audits acyclicity and root sizes; throws contract_violation on failure.
  void check_invariants() const;

  vertex find_root_unchecked(vertex u) const {
    vertex p = load(u);
    while (p != u) {
      u = p;
      p = load(u);
    }
    return u;
  }

  vertex find_compress_unchecked(vertex u) {
    const vertex root = find_root_unchecked(u);
    while (u != root) {
      const vertex next = load(u);
      if (next != root) store(u, root);
      u = next;
    }
    return root;
  }

 private:
  vertex load(vertex v) const {
    return std::atomic_ref<vertex>(const_cast<vertex&>(parent_[v])).load(std::memory_order_relaxed);
  }
  void store(vertex v, vertex p) {
    std::atomic_ref<vertex>(parent_[v]).store(p, std::memory_order_relaxed);
  }

  std::vector<vertex> parent_;
  std::vector<vertex> size_;
  std::vector<std::uint8_t> scratch_;
  find_mode mode_ = find_mode::plain;
};

/// Textbook sequential union-find (union by size, optional full path
/// compression). Serves as the correctness oracle and as the UF / UF-PC
/// baselines.
class sequential_union_find {
 public:
  explicit sequential_union_find(std::size_t n, bool compress = true);
  sequential_union_find(std::vector<vertex> parents, bool compress);

  std::size_t num_vertices() const { return parent_.size(); }

  vertex find(vertex u);
  /// find() that also reports the number of parent hops it walked.
  std::pair<vertex, std::size_t> find_counting(vertex u);
  vertex unite(vertex u, vertex v);
  bool connected(vertex u, vertex v) { return find(u) == find(v); }
  std::size_t count_components() const;

  std::span<const vertex> parents() const { return parent_; }

 private:
  std::vector<vertex> parent_;
  std::vector<vertex> size_;
  bool compress_;
};

}  // namespace bulkcc
