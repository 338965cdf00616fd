#include <doctest.h>

#include <algorithm>
#include <random>

#include "bulkcc/bulk.hpp"
#include "oracles.hpp"

using namespace bulkcc;

namespace {

const std::vector<edge> star{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8}};

std::vector<edge> random_edges(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  std::vector<edge> es(m);
  for (auto& e : es) e = {static_cast<vertex>(rng() % n), static_cast<vertex>(rng() % n)};
  return es;
}

}  // namespace

TEST_CASE("bulk_query basics") {
  for (auto strategy : {find_strategy::independent, find_strategy::bulk_find}) {
    union_find_forest f(10);
    const std::vector<edge> q{{0, 1}, {4, 4}};
    CHECK(bulk_query(f, q, strategy) == std::vector<std::uint8_t>{0, 1});
    CHECK(bulk_query(f, std::vector<edge>{}, strategy).empty());
    const std::vector<edge> bad{{0, 10}};
    CHECK_THROWS_AS(bulk_query(f, bad, strategy), contract_violation);
  }
}

TEST_CASE("star batch") {
  for (auto strategy : {find_strategy::independent, find_strategy::bulk_find}) {
    union_find_forest f(9, find_mode::pragmatic);
    const auto st = bulk_update(f, star, strategy);
    CHECK(st.edges == 7);
    CHECK(st.crossing_edges == 7);
    CHECK(st.components_joined == 1);
    CHECK(st.unions == 7);
    CHECK(f.count_components() == 2);
    const std::vector<edge> q{{2, 7}, {3, 8}, {0, 1}};
    CHECK(bulk_query(f, q, strategy) == std::vector<std::uint8_t>{1, 1, 0});
    f.check_invariants();
  }
}

TEST_CASE("self-loop batch changes nothing") {
  union_find_forest f(5);
  f.seq_union(0, 1);
  const std::vector<vertex> before(f.parents().begin(), f.parents().end());
  const std::vector<edge> loops{{2, 2}, {3, 3}, {0, 1}};
  const auto st = bulk_update(f, loops);
  CHECK(st.unions == 0);
  CHECK(st.crossing_edges == 0);
  CHECK(std::vector<vertex>(f.parents().begin(), f.parents().end()) == before);
}

TEST_CASE("relabel") {
  union_find_forest f(6);
  f.seq_union(0, 1);
  f.seq_union(2, 3);
  const std::vector<edge> batch{{1, 3}, {0, 1}, {4, 5}};
  const auto r = relabel(f, batch);
  CHECK(r.renamed == std::vector<edge>{{0, 2}, {0, 0}, {4, 5}});
  CHECK(r.crossing == std::vector<edge>{{0, 2}, {4, 5}});
}

TEST_CASE("parallel_join single root") {
  union_find_forest f(3);
  join_stats st;
  const std::vector<vertex> one{2};
  CHECK(parallel_join(f, one, &st) == 2);
  CHECK(st.unions == 0);
  CHECK(st.depth == 0);
}

TEST_CASE("parallel_join schedule over eight roots") {
  union_find_forest f(9);
  const std::vector<vertex> roots{1, 2, 3, 4, 5, 6, 7, 8};
  join_trace trace;
  const vertex r = parallel_join_traced(f, roots, trace);
  REQUIRE(trace.rounds.size() == 3);
  CHECK(trace.rounds[0] == std::vector<edge>{{1, 2}, {3, 4}, {5, 6}, {7, 8}});
  CHECK(trace.rounds[1] == std::vector<edge>{{1, 3}, {5, 7}});
  CHECK(trace.rounds[2] == std::vector<edge>{{1, 5}});
  CHECK(r == 1);
  CHECK(f.tree_size(1) == 8);
  CHECK(f.max_depth() <= 3);
}

TEST_CASE("parallel_join counts") {
  for (std::size_t k = 1; k <= 64; ++k) {
    union_find_forest f(k);
    std::vector<vertex> roots(k);
    for (std::size_t i = 0; i < k; ++i) roots[i] = static_cast<vertex>(i);
    join_stats st;
    parallel_join(f, roots, &st);
    CHECK(st.unions == k - 1);
    CHECK(st.depth == oracle::ceil_log2(k));
    CHECK(f.count_components() == 1);
  }
}

TEST_CASE("parallel_join over five trees of every size up to four") {
  // Each root i owns a tree of size s_i in [1, 4].
  for (std::size_t code = 0; code < 1024; ++code) {
    std::size_t sizes[5], total = 0;
    std::size_t c = code;
    for (auto& s : sizes) {
      s = 1 + c % 4;
      c /= 4;
      total += s;
    }
    union_find_forest f(total);
    std::vector<vertex> roots;
    vertex next = 0;
    for (std::size_t s : sizes) {
      const vertex r = next;
      for (std::size_t j = 1; j < s; ++j) f.seq_union(r, next + static_cast<vertex>(j));
      roots.push_back(f.find_root(r));
      next += static_cast<vertex>(s);
    }
    join_stats st;
    parallel_join(f, roots, &st);
    CHECK(st.unions == 4);
    CHECK(f.count_components() == 1);
    CHECK(f.max_depth() <= oracle::floor_log2(total));
  }
}

TEST_CASE("parallel_join contract") {
  union_find_forest f(4);
  f.seq_union(0, 1);
  const std::vector<vertex> dup{0, 2, 0};
  CHECK_THROWS_AS(parallel_join(f, dup), contract_violation);
  const std::vector<vertex> nonroot{0, 1};
  CHECK_THROWS_AS(parallel_join(f, nonroot), contract_violation);
}

TEST_CASE("incremental stream against the oracle") {
  std::mt19937_64 rng(101);
  const std::size_t n = 10000;
  for (auto strategy : {find_strategy::independent, find_strategy::bulk_find}) {
    for (auto mode : {find_mode::plain, find_mode::pragmatic}) {
      union_find_forest f(n, mode);
      sequential_union_find ref(n);
      for (int b = 0; b < 50; ++b) {
        const auto batch = random_edges(n, 1000, rng);
        const std::size_t before = f.count_components();
        const auto st = bulk_update(f, batch, strategy, rng());
        for (const edge& e : batch) ref.unite(e.u, e.v);
        CHECK(before - f.count_components() == st.unions);
        const auto qs = random_edges(n, 1000, rng);
        const auto ans = bulk_query(f, qs, strategy);
        bool ok = true;
        for (std::size_t i = 0; i < qs.size(); ++i) ok = ok && (ans[i] != 0) == ref.connected(qs[i].u, qs[i].v);
        CHECK(ok);
        CHECK(f.count_components() == ref.count_components());
      }
      CHECK(f.max_depth() <= oracle::floor_log2(n));
      f.check_invariants();
    }
  }
}

TEST_CASE("batch order and batch splits do not change the partition") {
  std::mt19937_64 rng(55);
  const std::size_t n = 3000;
  const auto batch = random_edges(n, 2500, rng);
  union_find_forest a(n), b(n), c(n);
  bulk_update(a, batch);
  auto shuffled = batch;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  bulk_update(b, shuffled);
  const std::span<const edge> all(batch);
  bulk_update(c, all.first(1000));
  bulk_update(c, all.subspan(1000));
  auto root_of = [](const union_find_forest& f) {
    return [&f](std::size_t v) { return f.find_root(static_cast<vertex>(v)); };
  };
  CHECK(oracle::same_partition(n, root_of(a), root_of(b)));
  CHECK(oracle::same_partition(n, root_of(a), root_of(c)));
  const auto label = oracle::bfs_labels(n, batch);
  CHECK(oracle::same_partition(n, root_of(a), [&](std::size_t v) { return label[v]; }));
}
