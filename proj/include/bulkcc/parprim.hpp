#pragma once

// Sequence primitives: filter/pack, exclusive prefix sum, duplicate removal
// and small-range stable integer sort. Indices are 0-based throughout.

#include <algorithm>
#include <atomic>
#include <bit>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bulkcc/common.hpp"
#include "bulkcc/parallel.hpp"

namespace bulkcc::parprim {

// ---------------------------------------------------------------------------
// pack / filter

/// Writes make(i) for every i in [0, n) with keep(i), preserving order.
/// `keep` is evaluated twice per index and must be pure.
template <class Keep, class Make>
auto pack_index(std::size_t n, Keep&& keep, Make&& make) {
  using T = std::decay_t<decltype(make(std::size_t{0}))>;
  const std::size_t block = par::block_size(n);
  const std::size_t blocks = par::num_blocks(n, block);
  std::vector<std::size_t> counts(blocks + 1, 0);
  par::for_each_block(n, block, [&](std::size_t b, std::size_t lo, std::size_t hi) {
    std::size_t c = 0;
    for (std::size_t i = lo; i < hi; ++i) c += keep(i) ? 1 : 0;
    counts[b] = c;
  });
  std::size_t total = 0;
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t c = counts[b];
    counts[b] = total;
    total += c;
  }
  std::vector<T> out(total);
  par::for_each_block(n, block, [&](std::size_t b, std::size_t lo, std::size_t hi) {
    std::size_t pos = counts[b];
    for (std::size_t i = lo; i < hi; ++i) {
      if (keep(i)) out[pos++] = make(i);
    }
  });
  return out;
}

/// Elements of xs whose flag is set, in order.
template <class T, class Flag>
std::vector<T> pack(std::span<const T> xs, std::span<const Flag> flags) {
  if (xs.size() != flags.size()) fail_contract("pack: length mismatch");
  return pack_index(
      xs.size(), [&](std::size_t i) { return static_cast<bool>(flags[i]); },
      [&](std::size_t i) { return xs[i]; });
}

template <class T, class Pred>
std::vector<T> filter(std::span<const T> xs, Pred&& keep) {
  return pack_index(
      xs.size(), [&](std::size_t i) { return static_cast<bool>(keep(xs[i])); },
      [&](std::size_t i) { return xs[i]; });
}

// ---------------------------------------------------------------------------
// prefix sum

template <std::integral T>
struct scan_result {
  std::vector<T> sums;  // exclusive: sums[i] = xs[0] + ... + xs[i-1]
  T total{};
};

namespace detail {
template <std::integral T>
T checked_add(T a, T b) {
  T r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("prefix_sum: integer overflow (input too large for index width)");
  }
  return r;
}
}  // namespace detail

template <std::integral T>
scan_result<T> prefix_sum(std::span<const T> xs) {
  const std::size_t n = xs.size();
  const std::size_t block = par::block_size(n);
  const std::size_t blocks = par::num_blocks(n, block);
  std::vector<T> block_sums(blocks, T{});
  par::for_each_block(n, block, [&](std::size_t b, std::size_t lo, std::size_t hi) {
    T s{};
    for (std::size_t i = lo; i < hi; ++i) s = detail::checked_add(s, xs[i]);
    block_sums[b] = s;
  });
  T total{};
  for (std::size_t b = 0; b < blocks; ++b) {
    const T s = block_sums[b];
    block_sums[b] = total;
    total = detail::checked_add(total, s);
  }
  scan_result<T> result{std::vector<T>(n), total};
  par::for_each_block(n, block, [&](std::size_t b, std::size_t lo, std::size_t hi) {
    T s = block_sums[b];
    for (std::size_t i = lo; i < hi; ++i) {
      result.sums[i] = s;
      s = detail::checked_add(s, xs[i]);
    }
  });
  return result;
}

// ---------------------------------------------------------------------------
// hashing

/// 64-bit finalizer (splitmix64); a bijection on uint64.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

/// Insert-only concurrent set over unsigned keys, using ordered linear
/// probing: along every probe run keys sit in decreasing key order, so the
/// final layout depends only on the key set, never on insertion order or
/// thread interleaving. The all-ones key is reserved as the empty marker.
template <std::unsigned_integral K>
class ordered_hash_set {
 public:
  static constexpr K empty_key = std::numeric_limits<K>::max();

  ordered_hash_set(std::size_t expected, std::uint64_t seed = 0x9e3779b97f4a7c15ULL)
      : seed_(seed) {
    const std::size_t cap = std::bit_ceil(std::max<std::size_t>(2 * expected, 4));
    shift_ = 64 - std::countr_zero(cap);
    mask_ = cap - 1;
    slots_ = std::vector<std::atomic<K>>(cap);
    par::parallel_for(0, cap, [&](std::size_t i) {
      slots_[i].store(empty_key, std::memory_order_relaxed);
    });
  }

  std::size_t capacity() const { return slots_.size(); }

  /// Thread-safe with respect to other inserts; not with lookups.
  void insert(K key) {
    if (key == empty_key) fail_contract("ordered_hash_set: reserved key");
    std::size_t i = home(key);
    for (;;) {
      K cur = slots_[i].load(std::memory_order_acquire);
      if (cur == key) return;
      if (cur == empty_key || key > cur) {
        if (slots_[i].compare_exchange_strong(cur, key, std::memory_order_acq_rel)) {
          if (cur == empty_key) return;
          key = cur;  // carry the displaced key onward
        } else {
          continue;  // slot changed under us; re-inspect it
        }
      }
      i = (i + 1) & mask_;
    }
  }

  /// Slot index holding `key`, if present.
  std::optional<std::size_t> find(K key) const {
    std::size_t i = home(key);
    for (;;) {
      const K cur = slots_[i].load(std::memory_order_relaxed);
      if (cur == key) return i;
      if (cur == empty_key || cur < key) return std::nullopt;
      i = (i + 1) & mask_;
    }
  }

  K slot(std::size_t i) const { return slots_[i].load(std::memory_order_relaxed); }
  bool occupied(std::size_t i) const { return slot(i) != empty_key; }

  /// Stored keys in slot order.
  std::vector<K> keys() const {
    return pack_index(
        slots_.size(), [&](std::size_t i) { return occupied(i); },
        [&](std::size_t i) { return slot(i); });
  }

 private:
  std::size_t home(K key) const {
    return static_cast<std::size_t>(mix64(static_cast<std::uint64_t>(key) ^ seed_) >> shift_) & mask_;
  }

  std::uint64_t seed_;
  int shift_ = 0;
  std::size_t mask_ = 0;
  std::vector<std::atomic<K>> slots_;
};

/// Distinct values of xs. Output order is the hash-table order: arbitrary, but
/// deterministic for a given input set and seed.
template <std::unsigned_integral K>
std::vector<K> remove_dup(std::span<const K> xs, std::uint64_t seed = 0x9e3779b97f4a7c15ULL) {
  if (xs.empty()) return {};
  ordered_hash_set<K> table(xs.size(), seed);
  par::parallel_for(0, xs.size(), [&](std::size_t i) { table.insert(xs[i]); });
  return table.keys();
}

// ---------------------------------------------------------------------------
// integer sort

/// Largest allowed key_bound / length ratio for int_sort (the constant c).
std::size_t int_sort_key_factor();
void set_int_sort_key_factor(std::size_t c);

namespace detail {

inline constexpr int radix_bits = 11;
inline constexpr std::size_t radix = std::size_t{1} << radix_bits;

// One stable counting pass on digit `shift` from `in` into `out`.
template <class T>
void counting_pass(std::span<const std::pair<std::size_t, T>> in,
                   std::span<std::pair<std::size_t, T>> out, int shift, std::size_t buckets) {
  const std::size_t n = in.size();
  const std::size_t block = par::block_size(n);
  const std::size_t blocks = par::num_blocks(n, block);
  const std::size_t mask = buckets - 1;
  std::vector<std::size_t> hist(blocks * buckets, 0);
  par::for_each_block(n, block, [&](std::size_t b, std::size_t lo, std::size_t hi) {
    std::size_t* h = hist.data() + b * buckets;
    for (std::size_t i = lo; i < hi; ++i) ++h[(in[i].first >> shift) & mask];
  });
  std::size_t offset = 0;
  for (std::size_t d = 0; d < buckets; ++d) {
    for (std::size_t b = 0; b < blocks; ++b) {
      const std::size_t c = hist[b * buckets + d];
      hist[b * buckets + d] = offset;
      offset += c;
    }
  }
  par::for_each_block(n, block, [&](std::size_t b, std::size_t lo, std::size_t hi) {
    std::size_t* h = hist.data() + b * buckets;
    for (std::size_t i = lo; i < hi; ++i) out[h[(in[i].first >> shift) & mask]++] = in[i];
  });
}

}  // namespace detail

/// Stable sort of (key, payload) pairs by key, keys in [0, key_bound).
/// Requires key_bound <= c * max(|pairs|, 1) with c = int_sort_key_factor().
template <class T>
std::vector<std::pair<std::size_t, T>> int_sort(std::span<const std::pair<std::size_t, T>> pairs,
                                                std::size_t key_bound) {
  const std::size_t n = pairs.size();
  if (key_bound > int_sort_key_factor() * std::max<std::size_t>(n, 1)) {
    fail_contract("int_sort: key_bound " + std::to_string(key_bound) + " exceeds " +
                  std::to_string(int_sort_key_factor()) + " x length");
  }
  std::atomic<bool> bad{false};
  par::parallel_for(0, n, [&](std::size_t i) {
    if (pairs[i].first >= key_bound) bad.store(true, std::memory_order_relaxed);
  });
  if (bad.load()) fail_contract("int_sort: key out of [0, key_bound)");

  std::vector<std::pair<std::size_t, T>> a(pairs.begin(), pairs.end());
  if (n <= 1 || key_bound <= 1) return a;
  std::vector<std::pair<std::size_t, T>> b(n);
  const int bits = std::bit_width(key_bound - 1);
  for (int shift = 0; shift < bits; shift += detail::radix_bits) {
    const int width = std::min(detail::radix_bits, bits - shift);
    detail::counting_pass<T>(a, b, shift, std::size_t{1} << width);
    a.swap(b);
  }
  return a;
}

/// Stable sort of items by key(item) in [0, key_bound).
template <class T, class KeyFn>
std::vector<T> int_sort_by(std::span<const T> items, std::size_t key_bound, KeyFn&& key) {
  std::vector<std::pair<std::size_t, T>> keyed(items.size());
  par::parallel_for(0, items.size(), [&](std::size_t i) {
    keyed[i] = {static_cast<std::size_t>(key(items[i])), items[i]};
  });
  auto sorted = int_sort<T>(keyed, key_bound);
  std::vector<T> out(sorted.size());
  par::parallel_for(0, sorted.size(), [&](std::size_t i) { out[i] = sorted[i].second; });
  return out;
}

}  // namespace bulkcc::parprim
