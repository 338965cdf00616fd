#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace bulkcc {

using vertex = std::uint32_t;

/// Largest usable vertex count. The id `n` itself is reserved as a sentinel.
inline constexpr std::size_t max_vertices = std::numeric_limits<vertex>::max() - 1;

struct edge {
  vertex u;
  vertex v;

  friend bool operator==(const edge&, const edge&) = default;
};

/// A broken precondition of a library call (out-of-range id, non-root passed
/// where a root is required, ...).
class contract_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#ifndef BULKCC_DEBUG_CHECKS
#ifdef NDEBUG
#define BULKCC_DEBUG_CHECKS 0
#else
#define BULKCC_DEBUG_CHECKS 1
#endif
#endif

/// Whether the O(input)-cost precondition audits run (non-root arguments to
/// union_roots, duplicate roots in parallel_join, self-loops fed to connected
/// components, ...). Defaults to on unless NDEBUG; tests switch it on.
bool debug_checks();
void set_debug_checks(bool on);

[[noreturn]] inline void fail_contract(const std::string& what) {
  throw contract_violation(what);
}

inline void check_vertex(std::size_t v, std::size_t n, const char* where) {
  if (v >= n) {
    fail_contract(std::string(where) + ": vertex " + std::to_string(v) +
                  " out of range [0, " + std::to_string(n) + ")");
  }
}

}  // namespace bulkcc
