#include "bulkcc/parprim.hpp"

namespace bulkcc::parprim {

namespace {
std::atomic<std::size_t> g_key_factor{4};
}

std::size_t int_sort_key_factor() { return g_key_factor.load(std::memory_order_relaxed); }

void set_int_sort_key_factor(std::size_t c) {
  g_key_factor.store(std::max<std::size_t>(c, 1), std::memory_order_relaxed);
}

}  // namespace bulkcc::parprim
