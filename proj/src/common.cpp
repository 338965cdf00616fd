#include "bulkcc/common.hpp"

#include <atomic>

namespace bulkcc {

namespace {
std::atomic<bool> g_debug_checks{BULKCC_DEBUG_CHECKS != 0};
}

bool debug_checks() { return g_debug_checks.load(std::memory_order_relaxed); }

void set_debug_checks(bool on) { g_debug_checks.store(on, std::memory_order_relaxed); }

}  // namespace bulkcc
