#include "bulkcc/parallel.hpp"

#include <atomic>
#include <mutex>

namespace bulkcc::par {

namespace {

std::atomic<std::size_t> g_grain{2048};

std::mutex g_control_mutex;
std::unique_ptr<tbb::global_control> g_control;

}  // namespace

std::size_t grain_size() { return g_grain.load(std::memory_order_relaxed); }

void set_grain_size(std::size_t grain) {
  g_grain.store(std::max<std::size_t>(grain, 1), std::memory_order_relaxed);
}

void set_num_threads(std::size_t threads) {
  std::lock_guard lock(g_control_mutex);
  g_control.reset();
  if (threads > 0) {
    g_control = std::make_unique<tbb::global_control>(
        tbb::global_control::max_allowed_parallelism, threads);
  }
}

}  // namespace bulkcc::par
