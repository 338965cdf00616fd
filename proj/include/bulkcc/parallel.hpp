#pragma once

// Thin layer over oneTBB: loop/fork helpers and the library-wide tunables
// (worker count, sequential grain size).

#include <algorithm>
#include <cstddef>
#include <memory>

#include <tbb/blocked_range.h>
#include <tbb/global_control.h>
#include <tbb/parallel_for.h>
#include <tbb/parallel_invoke.h>
#include <tbb/task_arena.h>

namespace bulkcc::par {

/// Inputs shorter than this run sequentially. Default 2048.
std::size_t grain_size();
void set_grain_size(std::size_t grain);

/// Caps the number of worker threads for the whole process. Passing 0 removes
/// the cap. Call once at startup (the CLI does this for --threads).
void set_num_threads(std::size_t threads);

/// Workers currently available to parallel loops.
inline std::size_t num_workers() {
  const auto arena = static_cast<std::size_t>(tbb::this_task_arena::max_concurrency());
  const auto cap = tbb::global_control::active_value(tbb::global_control::max_allowed_parallelism);
  return std::max<std::size_t>(1, std::min(arena, cap));
}

/// Block length used by the blocked primitives: at least the grain, and
/// enough blocks to keep every worker busy a few times over.
inline std::size_t block_size(std::size_t n) {
  const std::size_t target_blocks = 4 * num_workers();
  return std::max(grain_size(), (n + target_blocks - 1) / std::max<std::size_t>(target_blocks, 1));
}

inline std::size_t num_blocks(std::size_t n, std::size_t block) {
  return (n + block - 1) / block;
}

/// Calls f(i) for i in [lo, hi).
template <class F>
void parallel_for(std::size_t lo, std::size_t hi, F&& f, std::size_t grain = 0) {
  if (hi <= lo) return;
  if (grain == 0) grain = grain_size();
  if (hi - lo <= grain) {
    for (std::size_t i = lo; i < hi; ++i) f(i);
    return;
  }
  tbb::parallel_for(tbb::blocked_range<std::size_t>(lo, hi, grain),
                    [&](const tbb::blocked_range<std::size_t>& r) {
                      for (std::size_t i = r.begin(); i != r.end(); ++i) f(i);
                    });
}

/// Calls f(b, lo, hi) once per block of [0, n), blocks of length `block`.
template <class F>
void for_each_block(std::size_t n, std::size_t block, F&& f) {
  const std::size_t blocks = num_blocks(n, block);
  auto body = [&](std::size_t b) { f(b, b * block, std::min(n, (b + 1) * block)); };
  if (blocks <= 1) {
    if (blocks == 1) body(0);
    return;
  }
  tbb::parallel_for(std::size_t{0}, blocks, body);
}

/// Runs both callables, in parallel when `parallel` is set.
template <class L, class R>
void par_do(L&& left, R&& right, bool parallel = true) {
  if (parallel) {
    tbb::parallel_invoke(std::forward<L>(left), std::forward<R>(right));
  } else {
    left();
    right();
  }
}

}  // namespace bulkcc::par
