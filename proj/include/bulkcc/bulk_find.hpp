#pragma once

// Coordinated multi-source root search with full path compression.
//
// Phase I runs one upward BFS from every query at once. Flows that meet are
// merged (duplicate removal on the next frontier) and flows that reach an
// already-visited node stop there; every hop is logged as (parent, child),
// and every query seeds a (query, nil) record. Phase II walks that log
// backwards from the roots found, pointing each traversed node at its root.
// The log is indexed by a response distributor so the backward walk can list
// all recorded children of a node.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bulkcc/common.hpp"
#include "bulkcc/union_find.hpp"

namespace bulkcc {

/// One Phase-I record: `to` hopped up to `from` (from == parent[to]), or a
/// seed (query, nil) where nil is the forest's vertex count.
struct trail_record {
  vertex from;
  vertex to;

  friend bool operator==(const trail_record&, const trail_record&) = default;
};

/// Phase-I transcript, kept only on request.
struct traversal_log {
  std::vector<std::vector<trail_record>> levels;  ///< R_0, R_1, ...
  std::vector<std::vector<vertex>> frontiers;     ///< F_0, F_1, ...
  std::vector<vertex> roots;

  /// R_0 followed by R_1, ... (the record sequence fed to the distributor).
  std::vector<trail_record> concatenated() const;
  std::size_t size() const;
};

/// Distinct targets `from` of R that are not yet visited.
std::vector<vertex> mk_frontier(std::span<const trail_record> records,
                                std::span<const std::uint8_t> visited);

/// Answers all_from(f) = { to : (f, to) recorded } over a fixed record list.
/// Records are bucketed by a seeded multiply-shift hash of `from` into
/// rho = 3 * lambda buckets and integer-sorted by bucket.
class response_distributor {
 public:
  response_distributor() = default;
  explicit response_distributor(std::span<const trail_record> records,
                                std::uint64_t seed = 0x2545f4914f6cdd1dULL);

  std::size_t size() const { return pairs_.size(); }         ///< lambda
  std::size_t bucket_count() const { return offsets_.size() - 1; }  ///< rho
  std::size_t bucket_of(vertex f) const;

  std::span<const trail_record> sorted_pairs() const { return pairs_; }
  std::span<const std::size_t> offsets() const { return offsets_; }

  /// Calls fn(to) for every record (f, to); scans only f's bucket. Returns the
  /// number of records scanned.
  template <class Fn>
  std::size_t for_each_from(vertex f, Fn&& fn) const {
    if (pairs_.empty()) return 0;
    const std::size_t b = bucket_of(f);
    for (std::size_t i = offsets_[b]; i < offsets_[b + 1]; ++i) {
      if (pairs_[i].from == f) fn(pairs_[i].to);
    }
    return offsets_[b + 1] - offsets_[b];
  }

  std::vector<vertex> all_from(vertex f) const;

  /// Sum of bucket lengths scanned by all_from over every distinct from-key.
  std::size_t total_scan_work() const;

 private:
  std::uint64_t mul_ = 1;
  std::uint64_t add_ = 0;
  std::vector<trail_record> pairs_;
  std::vector<std::size_t> offsets_{0};
};

struct bulk_find_options {
  std::uint64_t seed = 0x2545f4914f6cdd1dULL;  ///< distributor hash seed
  bool keep_log = false;
};

struct bulk_find_result {
  std::vector<vertex> roots;       ///< roots[i] = root of S[i]
  std::size_t trail_size = 0;      ///< |R_U|, seeds included
  std::size_t root_records = 0;    ///< records of R_U whose `from` is a root
  std::size_t phase1_rounds = 0;
  std::size_t phase2_rounds = 0;
  std::size_t scan_work = 0;       ///< distributor records scanned in Phase II
  traversal_log log;               ///< filled when keep_log
};

/// Phase II on its own: reverse BFS from `roots` through `rd`, setting
/// parent[v] to its root for every node reached. Returns the round count.
std::size_t distribute_responses(union_find_forest& forest, const response_distributor& rd,
                                 std::span<const vertex> roots, std::size_t* scan_work = nullptr);

/// Roots of every S[i], compressing every node Phase I traversed. Must not
/// overlap any other operation on the forest.
bulk_find_result bulk_find(union_find_forest& forest, std::span<const vertex> queries,
                           const bulk_find_options& opts = {});

}  // namespace bulkcc
