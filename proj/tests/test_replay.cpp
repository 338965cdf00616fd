#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "bulkcc/generators.hpp"
#include "bulkcc/parallel.hpp"
#include "bulkcc/replay.hpp"

using namespace bulkcc;
using namespace bulkcc::bench;

namespace {

io::stream_file star_file() {
  io::stream_file f;
  f.n = 9;
  f.batches.push_back({io::batch_kind::update, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8}}});
  f.batches.push_back({io::batch_kind::query, {{2, 7}}});
  return f;
}

}  // namespace

TEST_CASE("mode names") {
  for (auto m : {replay_mode::simple, replay_mode::work_efficient, replay_mode::seq_uf, replay_mode::seq_ufpc}) {
    CHECK(parse_mode(mode_name(m)) == m);
  }
  CHECK_FALSE(parse_mode("fast").has_value());
}

TEST_CASE("empty stream") {
  io::stream_file f;
  f.n = 4;
  const auto r = replay(f, {});
  CHECK(r.rows.empty());
  CHECK(r.total_seconds == 0);
}

TEST_CASE("star stream in every mode") {
  for (auto m : {replay_mode::simple, replay_mode::work_efficient, replay_mode::seq_uf, replay_mode::seq_ufpc}) {
    replay_options o;
    o.mode = m;
    o.check_oracle = true;
    const auto r = replay(star_file(), o);
    REQUIRE(r.rows.size() == 2);
    CHECK(r.rows[0].components == 2);
    REQUIRE(r.answers.size() == 1);
    CHECK(r.answers[0] == std::vector<std::uint8_t>{1});
    CHECK(r.update_edges == 7);
    CHECK(r.queries == 1);
  }
}

TEST_CASE("oracle run over a generated stream") {
  gen::stream_spec s;
  s.kind = gen::family::rmat;
  s.n = 1 << 12;
  s.m = 20000;
  s.batch_size = 2000;
  s = gen::validate(s);
  io::stream_file f;
  f.n = s.n;
  std::size_t i = 0;
  for (auto& b : gen::generate(s)) {
    f.batches.push_back({io::batch_kind::update, std::move(b)});
    f.batches.push_back({io::batch_kind::query, gen::random_pairs(s.n, 500, ++i)});
  }
  for (auto m : {replay_mode::simple, replay_mode::work_efficient}) {
    replay_options o;
    o.mode = m;
    o.check_oracle = true;
    const auto r = replay(f, o);
    std::size_t last = f.n;
    for (const auto& row : r.rows) {
      CHECK(row.components <= last);
      last = row.components;
    }
  }
}

TEST_CASE("median_of_trials") {
  run_report base;
  base.n = 3;
  base.rows.push_back({0, io::batch_kind::update, 10, 0, 0, 1});
  std::vector<run_report> runs(3, base);
  runs[0].rows[0].seconds = 3;
  runs[1].rows[0].seconds = 1;
  runs[2].rows[0].seconds = 2;
  const auto m = median_of_trials(runs);
  CHECK(m.rows[0].seconds == 2);
  CHECK(m.rows[0].throughput == doctest::Approx(5));
  CHECK(m.update_throughput == doctest::Approx(5));

  runs[2].threads = 4;
  CHECK_THROWS_AS(median_of_trials(runs), std::invalid_argument);
  CHECK_THROWS_AS(median_of_trials({}), std::invalid_argument);
}

TEST_CASE("csv output") {
  const auto r = replay(star_file(), {});
  std::ostringstream rep, curve;
  write_report_csv(rep, r);
  write_curve_csv(curve, r);
  CHECK(rep.str().rfind("batch,kind,size,seconds,throughput,components\n0,update,7,", 0) == 0);
  CHECK(curve.str() == "percent,components\n0,9\n100,2\n");
}

namespace {

io::stream_file family_stream(gen::family kind, std::size_t batch) {
  gen::stream_spec s;
  s.kind = kind;
  s.n = kind == gen::family::grid3d ? 27 * 27 * 27 : 1 << 14;
  if (kind == gen::family::rmat) s.m = 8 * s.n;
  s.batch_size = batch;
  s.seed = 77;
  s = gen::validate(s);
  io::stream_file f;
  f.n = s.n;
  std::uint64_t q = 0;
  for (auto& b : gen::generate(s)) {
    f.batches.push_back({io::batch_kind::update, std::move(b)});
    f.batches.push_back({io::batch_kind::query, gen::random_pairs(s.n, 200, ++q)});
  }
  return f;
}

}  // namespace

TEST_CASE("oracle lockstep over families, modes and batch sizes") {
  for (auto kind : {gen::family::grid3d, gen::family::random_k, gen::family::local, gen::family::rmat}) {
    for (std::size_t batch : {std::size_t{1000}, std::size_t{100000}}) {
      const auto f = family_stream(kind, batch);
      std::vector<std::vector<std::uint8_t>> first;
      for (auto m : {replay_mode::simple, replay_mode::work_efficient, replay_mode::seq_uf}) {
        replay_options o;
        o.mode = m;
        o.check_oracle = true;
        CAPTURE(gen::family_name(kind));
        CAPTURE(batch);
        const auto r = replay(f, o);
        if (first.empty()) first = r.answers;
        CHECK(r.answers == first);
      }
    }
  }
}

TEST_CASE("answers do not depend on the thread count") {
  const auto f = family_stream(gen::family::rmat, 5000);
  par::set_num_threads(1);
  const auto one = replay(f, {});
  par::set_num_threads(0);
  const auto all = replay(f, {});
  CHECK(one.answers == all.answers);
}

TEST_CASE("medians stay inside the trial envelope") {
  const auto f = family_stream(gen::family::random_k, 10000);
  std::vector<run_report> runs;
  for (int t = 0; t < 3; ++t) runs.push_back(replay(f, {}));
  const auto m = median_of_trials(runs);
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    double lo = runs[0].rows[i].seconds, hi = lo;
    for (const auto& r : runs) {
      lo = std::min(lo, r.rows[i].seconds);
      hi = std::max(hi, r.rows[i].seconds);
    }
    CHECK(m.rows[i].seconds >= lo);
    CHECK(m.rows[i].seconds <= hi);
  }
}
