#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "bulkcc/parprim.hpp"

using namespace bulkcc;
using namespace bulkcc::parprim;

TEST_CASE("filter keeps order") {
  const std::vector<int> xs{5, 2, 7};
  CHECK(filter<int>(xs, [](int x) { return x % 2 == 1; }) == std::vector<int>{5, 7});
  CHECK(filter<int>(std::vector<int>{}, [](int) { return true; }).empty());

  std::vector<int> big(1000);
  for (int i = 0; i < 1000; ++i) big[i] = i + 1;
  std::vector<int> expect;
  for (int x : big) {
    if (x % 3 == 0) expect.push_back(x);
  }
  const auto got = filter<int>(big, [](int x) { return x % 3 == 0; });
  CHECK(got.size() == 333);
  CHECK(got == expect);
}

TEST_CASE("filter across many blocks") {
  par::set_grain_size(16);
  std::mt19937_64 rng(7);
  std::vector<std::uint32_t> xs(20000);
  for (auto& x : xs) x = static_cast<std::uint32_t>(rng());
  std::vector<std::uint32_t> expect;
  std::copy_if(xs.begin(), xs.end(), std::back_inserter(expect), [](auto x) { return x & 1; });
  CHECK(filter<std::uint32_t>(xs, [](auto x) { return x & 1; }) == expect);

  std::vector<std::uint8_t> flags(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) flags[i] = xs[i] & 1;
  CHECK(pack<std::uint32_t, std::uint8_t>(xs, flags) == expect);
  par::set_grain_size(2048);
}

TEST_CASE("pack rejects mismatched lengths") {
  const std::vector<int> xs{1, 2};
  const std::vector<bool> flags{true};
  std::vector<std::uint8_t> f(1, 1);
  CHECK_THROWS_AS((pack<int, std::uint8_t>(xs, f)), contract_violation);
}

TEST_CASE("prefix_sum is exclusive") {
  auto r = prefix_sum<int>(std::vector<int>{1, 1, 1});
  CHECK(r.sums == std::vector<int>{0, 1, 2});
  CHECK(r.total == 3);

  r = prefix_sum<int>(std::vector<int>{});
  CHECK(r.sums.empty());
  CHECK(r.total == 0);

  r = prefix_sum<int>(std::vector<int>{3, 0, 5, 2});
  CHECK(r.sums == std::vector<int>{0, 3, 3, 8});
  CHECK(r.total == 10);
}

TEST_CASE("prefix_sum matches a sequential scan") {
  par::set_grain_size(64);
  std::mt19937_64 rng(11);
  std::vector<std::uint64_t> xs(50000);
  for (auto& x : xs) x = rng() % 1000;
  const auto r = prefix_sum<std::uint64_t>(xs);
  std::uint64_t s = 0;
  bool ok = true;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    ok = ok && r.sums[i] == s;
    s += xs[i];
  }
  CHECK(ok);
  CHECK(r.total == s);
  par::set_grain_size(2048);
}

TEST_CASE("prefix_sum overflow throws") {
  const std::vector<std::uint8_t> xs{200, 100};
  CHECK_THROWS_AS(prefix_sum<std::uint8_t>(xs), std::overflow_error);
}

TEST_CASE("remove_dup") {
  auto sorted = [](std::vector<std::uint32_t> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(remove_dup<std::uint32_t>(std::vector<std::uint32_t>{4, 4, 4}) == std::vector<std::uint32_t>{4});
  CHECK(sorted(remove_dup<std::uint32_t>(std::vector<std::uint32_t>{1, 2, 3})) ==
        std::vector<std::uint32_t>{1, 2, 3});
  CHECK(remove_dup<std::uint32_t>(std::vector<std::uint32_t>{}).empty());

  std::mt19937_64 rng(3);
  std::vector<std::uint32_t> draws(100000);
  for (auto& x : draws) x = static_cast<std::uint32_t>(rng() % 100);
  const std::set<std::uint32_t> expect(draws.begin(), draws.end());
  const auto got = remove_dup<std::uint32_t>(draws);
  CHECK(got.size() == expect.size());
  CHECK(std::set<std::uint32_t>(got.begin(), got.end()) == expect);
}

TEST_CASE("remove_dup output does not depend on input order") {
  std::mt19937_64 rng(5);
  std::vector<std::uint32_t> xs(5000);
  for (auto& x : xs) x = static_cast<std::uint32_t>(rng() % 3000);
  const auto a = remove_dup<std::uint32_t>(xs, 42);
  std::shuffle(xs.begin(), xs.end(), rng);
  const auto b = remove_dup<std::uint32_t>(xs, 42);
  CHECK(a == b);
}

TEST_CASE("ordered_hash_set find") {
  ordered_hash_set<std::uint32_t> s(8);
  for (std::uint32_t k : {10u, 20u, 30u, 10u}) s.insert(k);
  CHECK(s.find(10).has_value());
  CHECK(s.find(30).has_value());
  CHECK_FALSE(s.find(11).has_value());
  CHECK(s.keys().size() == 3);
  CHECK_THROWS_AS(s.insert(ordered_hash_set<std::uint32_t>::empty_key), contract_violation);
}

TEST_CASE("int_sort is stable") {
  using P = std::pair<std::size_t, char>;
  const std::vector<P> in{{2, 'a'}, {0, 'b'}, {2, 'c'}};
  CHECK(int_sort<char>(in, 3) == std::vector<P>{{0, 'b'}, {2, 'a'}, {2, 'c'}});
  CHECK(int_sort<char>(std::vector<P>{}, 0).empty());
}

TEST_CASE("int_sort matches stable_sort") {
  par::set_grain_size(256);
  std::mt19937_64 rng(13);
  const std::size_t n = 100000, bound = 300000;
  std::vector<std::pair<std::size_t, std::uint32_t>> in(n);
  for (std::size_t i = 0; i < n; ++i) in[i] = {rng() % bound, static_cast<std::uint32_t>(i)};
  auto expect = in;
  std::stable_sort(expect.begin(), expect.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  CHECK(int_sort<std::uint32_t>(in, bound) == expect);
  par::set_grain_size(2048);
}

TEST_CASE("int_sort contract") {
  using P = std::pair<std::size_t, int>;
  const std::vector<P> in{{0, 1}, {1, 2}};
  CHECK_THROWS_AS(int_sort<int>(in, 9), contract_violation);  // bound > 4 * 2
  const std::vector<P> bad{{5, 1}, {1, 2}};
  CHECK_THROWS_AS(int_sort<int>(bad, 4), contract_violation);
}

TEST_CASE("int_sort_by") {
  const std::vector<int> xs{5, 3, 8, 1, 3};
  const auto got = int_sort_by<int>(xs, 20, [](int x) { return x * 2; });
  CHECK(got == std::vector<int>{1, 3, 3, 5, 8});
}
